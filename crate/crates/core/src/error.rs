use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::Violation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{table} table has {found} entries, expected {expected}")]
    DimensionMismatch { table: &'static str, expected: usize, found: usize },

    #[error("{table} table entry {position} is {value}, outside 0..{size}")]
    OutOfRange { table: &'static str, position: usize, value: usize, size: usize },

    #[error("{} axiom violation(s), first: {}", .0.len(), .0[0])]
    AxiomViolations(Vec<Violation>),

    #[error("not an implication filter: {0}")]
    NotImplicationFilter(&'static str),

    #[error("set belongs to a universe of {found} elements, expected {expected}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("enumeration budget of {0} exceeded")]
    BudgetExceeded(usize),
}
