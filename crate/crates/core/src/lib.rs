//! Finite MV-algebras and the filter machinery around subordinates and kernels.
//!
//! Algebras are operation tables over `0..n` with `0` the bottom element.
//! Subsets are [`ElementSet`] bit-sets. Everything here is pure and works
//! without `std`; parsing, reporting and the command line live in the
//! `mvspec` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod filters;
pub mod harness;
pub mod interval;
pub mod iso;
pub mod quotient;
pub mod set;
pub mod spectrum;

pub use algebra::{Algebra, Axiom, Violation};
pub use error::Error;
pub use filters::FilterClassification;
pub use interval::IntervalEmbedding;
pub use iso::find_isomorphism;
pub use quotient::QuotientMap;
pub use set::ElementSet;
pub use spectrum::SubordinateFamily;
