use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::context::{sort_descending, AlgebraContext, FilterInfo, Scope};
use super::{Failure, Statement, Tally, Witness};
use crate::algebra::Algebra;
use crate::error::Error;
use crate::filters::{principal_filter, up_closure};
use crate::set::ElementSet;

/// Random finite MV-algebras: products of Łukasiewicz chains with at most
/// `max_size` elements, factors listed longest first.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProductOfChains {
    pub max_size: usize,
    pub max_chain: usize,
    /// Chance of adding another factor while there is room for one.
    pub extend_probability: f64,
}

impl Default for ProductOfChains {
    fn default() -> Self {
        ProductOfChains { max_size: 64, max_chain: 16, extend_probability: 0.6 }
    }
}

impl ProductOfChains {
    pub fn new(max_size: usize) -> Result<ProductOfChains, Error> {
        if max_size < 2 {
            return Err(Error::InvalidArgument(format!("sample size cap must be at least 2, got {max_size}")));
        }
        Ok(ProductOfChains { max_size, ..ProductOfChains::default() })
    }

    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<usize> {
        let mut factors = Vec::new();
        let mut size = 1;
        loop {
            let hi = (self.max_size / size).min(self.max_chain);
            if hi < 2 {
                break;
            }
            let k = rng.random_range(2..=hi);
            factors.push(k);
            size *= k;
            if !rng.random_bool(self.extend_probability) {
                break;
            }
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        factors
    }
}

/// The generator for sample `index`: one ChaCha stream per sample, so a
/// sample's contents do not depend on which samples were drawn before it.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Built contexts keyed by factor list; samples repeat shapes often.
#[derive(Default)]
pub struct SampleCache {
    shapes: Vec<(Vec<usize>, AlgebraContext, Vec<usize>)>,
}

impl SampleCache {
    pub fn new() -> SampleCache {
        SampleCache::default()
    }

    fn get(&mut self, factors: &[usize]) -> Result<usize, Error> {
        match self.shapes.binary_search_by(|(f, _, _)| f.as_slice().cmp(factors)) {
            Ok(i) => Ok(i),
            Err(i) => {
                let chains = factors.iter().map(|&k| Algebra::chain(k)).collect::<Result<Vec<_>, _>>()?;
                let alg = if chains.len() == 1 { chains.into_iter().next().unwrap() } else { Algebra::product(&chains)? };
                let irreducibles = join_irreducibles(&alg);
                self.shapes.insert(i, (factors.to_vec(), AlgebraContext::new(alg)?, irreducibles));
                Ok(i)
            }
        }
    }
}

/// Elements with exactly one lower cover.
fn join_irreducibles(alg: &Algebra) -> Vec<usize> {
    alg.elements()
        .filter(|&x| {
            let below: Vec<usize> = alg.elements().filter(|&y| y != x && alg.leq(y, x)).collect();
            below.iter().filter(|&&y| !below.iter().any(|&z| z != y && alg.leq(y, z))).count() == 1
        })
        .collect()
}

/// A handful of filters of each kind the statements quantify over: a random
/// up-set and a superset of it, a principal filter, a prime lattice filter,
/// a prime order filter and an implication filter. Descending bit-pattern
/// order, duplicates removed.
pub fn random_filters<R: Rng + ?Sized>(ctx: &AlgebraContext, irreducibles: &[usize], rng: &mut R) -> Vec<ElementSet> {
    let alg = ctx.algebra();
    let n = alg.size();
    let mut out = Vec::new();

    let mut gens = ElementSet::empty(n);
    for _ in 0..rng.random_range(1..=3) {
        gens.insert(rng.random_range(0..n));
    }
    let up = up_closure(alg, &gens);
    let bigger = up.union(&up_closure(alg, &ElementSet::singleton(n, rng.random_range(0..n))));
    out.push(up);
    out.push(bigger);
    out.push(principal_filter(alg, rng.random_range(0..n)));
    if !irreducibles.is_empty() {
        out.push(principal_filter(alg, irreducibles[rng.random_range(0..irreducibles.len())]));
    }
    if n > 1 {
        let q = loop {
            let q = rng.random_range(0..n);
            if q != alg.top() {
                break q;
            }
        };
        out.push(ElementSet::from_predicate(n, |x| !alg.leq(x, q)));
    }
    let implication = ctx.implication_filters();
    out.push(implication[rng.random_range(0..implication.len())].clone());
    sort_descending(&mut out);
    out
}

/// Filters for an algebra whose up-sets are too many to enumerate.
pub(crate) fn sampled_filters(ctx: &AlgebraContext, seed: u64, rounds: u64) -> Vec<ElementSet> {
    let irreducibles = join_irreducibles(ctx.algebra());
    let mut out = Vec::new();
    for i in 0..rounds {
        out.extend(random_filters(ctx, &irreducibles, &mut sample_rng(seed, i)));
    }
    sort_descending(&mut out);
    out
}

/// Per-statement result of a run of samples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SampleOutcome {
    pub tally: Tally,
    pub witness: Option<Witness>,
    /// Samples examined, including the one that produced the witness.
    pub samples: u64,
}

/// Checks every statement on samples `range` in index order. A statement is
/// dropped from later samples once it has a witness, so the outcome of a
/// range equals the merged outcomes of any split of it.
pub fn run_samples(
    statements: &[&Statement],
    generator: &ProductOfChains,
    seed: u64,
    range: Range<u64>,
    cache: &mut SampleCache,
) -> Result<Vec<SampleOutcome>, Error> {
    let mut out = vec![SampleOutcome::default(); statements.len()];
    for index in range {
        if out.iter().all(|o| o.witness.is_some()) {
            break;
        }
        let mut rng = sample_rng(seed, index);
        let factors = generator.draw(&mut rng);
        let slot = cache.get(&factors)?;
        let (_, ctx, irreducibles) = &cache.shapes[slot];
        let filters: Vec<FilterInfo> = random_filters(ctx, irreducibles, &mut rng)
            .into_iter()
            .map(|f| FilterInfo::new(ctx.algebra(), f))
            .collect();
        let scope = Scope { ctx, filters: &filters, sample: Some(index) };
        for (stmt, o) in statements.iter().zip(out.iter_mut()) {
            if o.witness.is_some() {
                continue;
            }
            o.samples += 1;
            match stmt.check(&scope, &mut o.tally) {
                Ok(()) => {}
                Err(Failure::Counterexample(w)) => o.witness = Some(w),
                Err(Failure::Internal(e)) => return Err(e),
            }
        }
    }
    Ok(out)
}

/// Combines outcomes of consecutive sample ranges, given in range order.
/// Counting stops at the first range holding a witness, as a single
/// sequential run would.
pub fn merge_outcomes<I: IntoIterator<Item = Vec<SampleOutcome>>>(chunks: I) -> Vec<SampleOutcome> {
    let mut merged: Option<Vec<SampleOutcome>> = None;
    for chunk in chunks {
        let Some(acc) = merged.as_mut() else {
            merged = Some(chunk);
            continue;
        };
        for (a, c) in acc.iter_mut().zip(chunk) {
            if a.witness.is_some() {
                continue;
            }
            a.tally.absorb(&c.tally);
            a.samples += c.samples;
            a.witness = c.witness;
        }
    }
    merged.unwrap_or_default()
}

/// First counterexample to `stmt` among `budget` random samples, if any.
pub fn search_counterexample(
    stmt: &Statement,
    generator: &ProductOfChains,
    budget: u64,
    seed: u64,
) -> Result<Option<Witness>, Error> {
    let mut cache = SampleCache::new();
    let out = run_samples(&[stmt], generator, seed, 0..budget, &mut cache)?;
    Ok(out.into_iter().next().and_then(|o| o.witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filters::classify;

    #[test]
    fn drawn_shapes_respect_the_cap() {
        let g = ProductOfChains::default();
        for i in 0..500 {
            let f = g.draw(&mut sample_rng(3, i));
            assert!(!f.is_empty());
            assert!(f.iter().all(|&k| (2..=16).contains(&k)));
            assert!(f.iter().product::<usize>() <= 64);
            assert!(f.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn random_filters_have_the_promised_kinds() {
        let mut cache = SampleCache::new();
        let slot = cache.get(&[3, 2, 2]).unwrap();
        let (_, ctx, irr) = &cache.shapes[slot];
        assert_eq!(irr.len(), 2 + 1 + 1);
        let alg = ctx.algebra();
        for i in 0..50 {
            let fs = random_filters(ctx, irr, &mut sample_rng(0, i));
            assert!(fs.windows(2).all(|w| w[0] > w[1]));
            let classes: Vec<_> = fs.iter().map(|f| classify(alg, f)).collect();
            assert!(classes.iter().all(|c| c.order_filter()));
            assert!(classes.iter().any(|c| c.lattice_filter() && c.prime));
            assert!(classes.iter().any(|c| c.implication_filter()));
        }
    }

    #[test]
    fn chunked_runs_match_a_single_run() {
        let stmts: Vec<&Statement> = super::super::registry().iter().collect();
        let g = ProductOfChains { max_size: 24, ..ProductOfChains::default() };
        let mut cache = SampleCache::new();
        let whole = run_samples(&stmts, &g, 9, 0..40, &mut cache).unwrap();
        let parts = [0..7, 7..8, 8..30, 30..40].map(|r| run_samples(&stmts, &g, 9, r, &mut cache).unwrap());
        assert_eq!(merge_outcomes(parts), whole);
    }

    #[test]
    fn zero_budget_finds_nothing() {
        let stmt = super::super::select(&["T-03"]).unwrap()[0];
        assert_eq!(search_counterexample(stmt, &ProductOfChains::default(), 0, 1).unwrap(), None);
    }
}
