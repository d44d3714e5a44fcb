use alloc::string::String;
use alloc::vec::Vec;

use super::context::{sort_descending, AlgebraContext, FilterInfo, Scope};
use super::sample::sampled_filters;
use super::{Failure, Statement, StatementReport, Tally, Witness};
use crate::algebra::Algebra;
use crate::error::Error;
use crate::filters::{enumerate_implication_filters, enumerate_order_filters, DEFAULT_UPSET_BUDGET};
use crate::interval::IntervalEmbedding;
use crate::quotient::QuotientMap;

/// What to run and on which algebras.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub algebras: Vec<Algebra>,
    /// Cap on enumerated up-sets per algebra; beyond it filters are sampled.
    pub upset_budget: usize,
    /// Random samples per statement after the exhaustive pass.
    pub samples: u64,
    pub seed: u64,
    /// Largest random product of chains.
    pub max_sample_size: usize,
    /// Statement id patterns; empty means all.
    pub only: Vec<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::with_algebras(default_suite_algebras())
    }
}

impl SuiteConfig {
    pub fn with_algebras(algebras: Vec<Algebra>) -> SuiteConfig {
        SuiteConfig {
            algebras,
            upset_budget: DEFAULT_UPSET_BUDGET,
            samples: 0,
            seed: 0,
            max_sample_size: 64,
            only: Vec::new(),
        }
    }
}

/// Chains of length 2 to 6, the four small products, and every algebra one
/// interval or quotient step away from those, without repeats. One-element
/// algebras are left out.
pub fn default_suite_algebras() -> Vec<Algebra> {
    let c = |k| Algebra::chain(k).expect("chain length is at least 2");
    let mut bases: Vec<Algebra> = (2..=6).map(c).collect();
    for shape in [&[2, 2][..], &[2, 3], &[3, 3], &[2, 2, 2]] {
        let factors: Vec<Algebra> = shape.iter().map(|&k| c(k)).collect();
        bases.push(Algebra::product(&factors).expect("product of chains"));
    }
    with_one_step_neighbours(bases)
}

/// `bases` followed by their intervals and quotients, skipping one-element
/// algebras and any whose tables repeat an earlier one.
pub fn with_one_step_neighbours(bases: Vec<Algebra>) -> Vec<Algebra> {
    let mut out: Vec<Algebra> = Vec::new();
    let push = |a: Algebra, out: &mut Vec<Algebra>| {
        if a.size() > 1 && !out.iter().any(|b| b == &a) {
            out.push(a);
        }
    };
    for b in &bases {
        push(b.clone(), &mut out);
    }
    for b in &bases {
        for a in b.elements() {
            push(IntervalEmbedding::new(b, a).expect("element in range").algebra().clone(), &mut out);
        }
        for q in enumerate_implication_filters(b) {
            push(QuotientMap::new(b, &q).expect("implication filter").quotient().clone(), &mut out);
        }
    }
    out
}

/// One algebra of the suite with the filters statements range over.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub ctx: AlgebraContext,
    pub filters: Vec<FilterInfo>,
    /// The up-set budget was exceeded and `filters` is a random selection.
    pub partial: bool,
}

impl SuiteEntry {
    pub fn scope(&self) -> Scope<'_> {
        Scope { ctx: &self.ctx, filters: &self.filters, sample: None }
    }
}

/// Precomputed contexts and filter lists for every suite algebra.
#[derive(Clone, Debug, Default)]
pub struct Suite {
    entries: Vec<SuiteEntry>,
}

impl Suite {
    pub fn build(config: &SuiteConfig) -> Result<Suite, Error> {
        let mut entries = Vec::with_capacity(config.algebras.len());
        for alg in &config.algebras {
            let ctx = AlgebraContext::new(alg.clone())?;
            let (mut sets, partial) = match enumerate_order_filters(alg, config.upset_budget) {
                Ok(sets) => (sets, false),
                Err(Error::BudgetExceeded(_)) => (sampled_filters(&ctx, config.seed, 64), true),
                Err(e) => return Err(e),
            };
            sort_descending(&mut sets);
            let filters = sets.into_iter().map(|s| FilterInfo::new(alg, s)).collect();
            entries.push(SuiteEntry { ctx, filters, partial });
        }
        Ok(Suite { entries })
    }

    pub fn entries(&self) -> &[SuiteEntry] {
        &self.entries
    }

    pub fn partial(&self) -> bool {
        self.entries.iter().any(|e| e.partial)
    }

    /// Runs `stmt` over every entry in order, stopping at the first witness.
    pub fn check(&self, stmt: &Statement) -> Result<(Tally, Option<Witness>), Error> {
        let mut tally = Tally::default();
        for entry in &self.entries {
            match stmt.check(&entry.scope(), &mut tally) {
                Ok(()) => {}
                Err(Failure::Counterexample(w)) => return Ok((tally, Some(w))),
                Err(Failure::Internal(e)) => return Err(e),
            }
        }
        Ok((tally, None))
    }
}

/// Exhaustive run of one statement over the suite.
pub fn run_statement(stmt: &Statement, suite: &Suite) -> Result<StatementReport, Error> {
    let (tally, witness) = suite.check(stmt)?;
    let mut report = StatementReport::from_tally(stmt, &tally, witness);
    report.partial = suite.partial();
    Ok(report)
}

/// Exhaustive run of each statement, in the order given.
pub fn run_all(statements: &[&Statement], suite: &Suite) -> Result<Vec<StatementReport>, Error> {
    statements.iter().map(|s| run_statement(s, suite)).collect()
}
