//! Definition language, reports, Graphviz output and the command line for
//! `mvspec-core`.

pub mod cli;
pub mod dot;
pub mod dsl;
pub mod report;
pub mod runner;
