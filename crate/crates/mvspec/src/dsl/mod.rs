//! The algebra definition language.
//!
//! ```text
//! # comments run to the end of the line
//! algebra B = product(chain 2, chain 2)
//! algebra I = interval(chain 4, 1)
//! algebra Q = quotient(product(chain 3, chain 2), {(2,0),(2,1)})
//! algebra T = table { size 2; neg 1 0; oplus 0 1 1 1 }
//! filter F on B = {(1,0),(1,1)}
//! ```
//!
//! One binding per line; brackets may span lines. Tuple literals give
//! per-factor indices of a product element and are encoded row-major with
//! the last factor varying fastest.

use std::fmt;

use mvspec_core::{Algebra, Violation};

mod eval;
mod lexer;
mod parser;

pub use eval::{element, element_set, evaluate, Environment, NamedFilter, MAX_ELEMENTS};
pub use lexer::{tokenize, Tok, Token};
pub use parser::{parse, AlgebraExpr, Binding, Elem, ElementLiteral, Expr, SourceFile};

/// 1-based line and column (counted in characters).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ErrorKind {
    #[error("{0}")]
    Lex(String),
    #[error("{0}")]
    Syntax(String),
    #[error("duplicate name '{0}'")]
    DuplicateName(String),
    #[error("unknown algebra '{0}'")]
    UnresolvedReference(String),
    #[error("'{0}' is a filter, not an algebra")]
    NotAnAlgebra(String),
    #[error("element {element} is out of range for an algebra of size {size}")]
    ElementOutOfRange { element: String, size: usize },
    #[error("tuple literal {0} used on an algebra that is not a product")]
    TupleOnNonProduct(String),
    #[error("tuple literal {element} does not match the {factors} factors of the product")]
    TupleArity { element: String, factors: usize },
    #[error("quotient set is not an implication filter: {0}")]
    NotImplicationFilter(&'static str),
    #[error("not an MV-algebra: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    AxiomViolations(Vec<Violation>),
    #[error("algebra would have {size} elements, more than the limit of {max}")]
    TooLarge { size: usize, max: usize },
    #[error("{0}")]
    Construction(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DslError {
    pub pos: Pos,
    pub kind: ErrorKind,
}

impl DslError {
    pub fn new(pos: Pos, kind: ErrorKind) -> DslError {
        DslError { pos, kind }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.pos.line, self.pos.column, self.kind)
    }
}

impl std::error::Error for DslError {}

/// Parses and evaluates in one go.
pub fn load(text: &str) -> Result<Environment, DslError> {
    evaluate(&parse(text)?)
}

/// Evaluates a single algebra expression, such as a witness label.
pub fn algebra_from_expr(expr: &str) -> Result<Algebra, DslError> {
    let env = load(&format!("algebra it = {expr}"))?;
    Ok(env.algebras()[0].1.clone())
}

/// Canonical `table { ... }` form.
pub fn serialize_algebra(alg: &Algebra) -> String {
    let row = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    format!("table {{ size {}; neg {}; oplus {} }}", alg.size(), row(alg.neg_table()), row(alg.oplus_table()))
}

/// A definition file binding each algebra by name in canonical form.
pub fn serialize_bindings<'a>(algebras: impl IntoIterator<Item = (&'a str, &'a Algebra)>) -> String {
    let mut out = String::new();
    for (name, alg) in algebras {
        if let Some(label) = alg.label().filter(|l| *l != name) {
            out.push_str(&format!("# {label}\n"));
        }
        out.push_str(&format!("algebra {name} = {}\n", serialize_algebra(alg)));
    }
    out
}
