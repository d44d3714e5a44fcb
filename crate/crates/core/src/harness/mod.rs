//! Executable versions of the claims about subordinates and kernels, checked
//! exhaustively over a suite of small algebras and by seeded random sampling
//! over products of chains.
//!
//! Each [`Statement`] iterates its own quantifier shape over a [`Scope`]
//! (one algebra plus the filters to range over), counting instances and
//! hypothesis hits and stopping at the first counterexample.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::set::ElementSet;

mod context;
mod registry;
mod sample;
mod suite;

pub use context::{AlgebraContext, FilterInfo, Scope};
pub use registry::{registry, select, Statement};
pub use sample::{
    merge_outcomes, random_filters, run_samples, sample_rng, search_counterexample, ProductOfChains, SampleCache,
    SampleOutcome,
};
pub use suite::{
    default_suite_algebras, run_all, run_statement, with_one_step_neighbours, Suite, SuiteConfig, SuiteEntry,
};

/// Which reading of a claim a statement encodes, when more than one exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// The hypothesis exactly as the claim is worded.
    PaperStated,
    /// The hypothesis the argument actually needs.
    Repaired,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::PaperStated => "paper-stated",
            Variant::Repaired => "repaired",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Counterexample,
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Counterexample => "counterexample",
            Status::Vacuous => "vacuous",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSet {
    pub name: String,
    pub indices: Vec<usize>,
    pub names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedElement {
    pub name: String,
    pub index: usize,
    pub display: String,
}

/// Everything needed to replay a counterexample: the algebra (by its
/// definition-language label), the filters and elements instantiated, and a
/// note describing which conclusion failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub algebra: String,
    pub filters: Vec<NamedSet>,
    pub elements: Vec<NamedElement>,
    pub note: String,
    /// Index of the random sample that produced it, if not from the suite.
    pub sample: Option<u64>,
}

impl Witness {
    pub fn new(alg: &Algebra) -> Witness {
        Witness {
            algebra: alg.label().unwrap_or("<unlabelled>").to_string(),
            filters: Vec::new(),
            elements: Vec::new(),
            note: String::new(),
            sample: None,
        }
    }

    pub fn filter(mut self, alg: &Algebra, name: &str, set: &ElementSet) -> Witness {
        self.filters.push(NamedSet {
            name: name.to_string(),
            indices: set.iter().collect(),
            names: set.iter().map(|x| alg.name(x).to_string()).collect(),
        });
        self
    }

    pub fn element(mut self, alg: &Algebra, name: &str, x: usize) -> Witness {
        self.elements.push(NamedElement { name: name.to_string(), index: x, display: alg.name(x).to_string() });
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Witness {
        self.note = note.into();
        self
    }

    pub fn find_filter(&self, name: &str) -> Option<&NamedSet> {
        self.filters.iter().find(|f| f.name == name)
    }

    pub fn find_element(&self, name: &str) -> Option<&NamedElement> {
        self.elements.iter().find(|e| e.name == name)
    }
}

/// Why a check stopped early.
#[derive(Clone, Debug)]
pub enum Failure {
    Counterexample(Witness),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Internal(e)
    }
}

impl From<Witness> for Failure {
    fn from(w: Witness) -> Self {
        Failure::Counterexample(w)
    }
}

/// Hypothesis-hit split between the two proof cases of the join theorem:
/// `P ⊆ K(F)` (case 1) and `P ⊄ K(F)` (case 2).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CaseSplit {
    pub case1: u64,
    pub case2: u64,
}

impl CaseSplit {
    pub fn case2_vacuous(&self) -> bool {
        self.case2 == 0
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub instances: u64,
    pub hits: u64,
    pub cases: CaseSplit,
}

impl Tally {
    #[inline]
    pub fn instance(&mut self) {
        self.instances += 1;
    }

    #[inline]
    pub fn hit(&mut self) {
        self.hits += 1;
    }

    pub fn absorb(&mut self, other: &Tally) {
        self.instances += other.instances;
        self.hits += other.hits;
        self.cases.case1 += other.cases.case1;
        self.cases.case2 += other.cases.case2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementReport {
    pub id: &'static str,
    pub variant: Option<Variant>,
    pub description: &'static str,
    pub status: Status,
    pub instances: u64,
    pub hypothesis_hits: u64,
    pub cases: Option<CaseSplit>,
    pub witness: Option<Witness>,
    /// Some algebra had too many up-sets to enumerate; its filters were sampled.
    pub partial: bool,
    /// Number of random samples examined after the exhaustive suite.
    pub samples: u64,
    /// Filled in by callers that measure time.
    pub elapsed_ms: Option<u64>,
    /// A counterexample here is a known gap in the claim as worded.
    pub expected_counterexample: bool,
}

impl StatementReport {
    pub fn from_tally(stmt: &Statement, tally: &Tally, witness: Option<Witness>) -> StatementReport {
        let status = if witness.is_some() {
            Status::Counterexample
        } else if tally.hits == 0 {
            Status::Vacuous
        } else {
            Status::Verified
        };
        StatementReport {
            id: stmt.id,
            variant: stmt.variant,
            description: stmt.description,
            status,
            instances: tally.instances,
            hypothesis_hits: tally.hits,
            cases: stmt.splits_cases.then_some(tally.cases),
            witness,
            partial: false,
            samples: 0,
            elapsed_ms: None,
            expected_counterexample: stmt.expected_counterexample,
        }
    }

    /// A counterexample not on the allowlist of known gaps.
    pub fn is_unexpected_failure(&self) -> bool {
        self.status == Status::Counterexample && !self.expected_counterexample
    }

    /// `T-06 [repaired]`
    pub fn display_id(&self) -> String {
        match self.variant {
            Some(v) => alloc::format!("{} [{}]", self.id, v.as_str()),
            None => self.id.to_string(),
        }
    }
}
