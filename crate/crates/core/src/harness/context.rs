use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::filters::{classify, enumerate_implication_filters, principal_filter, FilterClassification};
use crate::interval::IntervalEmbedding;
use crate::quotient::QuotientMap;
use crate::set::ElementSet;
use crate::spectrum::{minimal_primes, subordinate};

/// Per-algebra data shared by every statement: intervals above each element,
/// all implication filters with their quotients, and the prime spectrum.
#[derive(Clone, Debug)]
pub struct AlgebraContext {
    algebra: Algebra,
    chain: bool,
    ups: Vec<ElementSet>,
    intervals: Vec<IntervalEmbedding>,
    implication: Vec<ElementSet>,
    quotients: Vec<QuotientMap>,
    prime_implication: Vec<usize>,
    minimal_primes: Vec<usize>,
}

impl AlgebraContext {
    pub fn new(algebra: Algebra) -> Result<AlgebraContext, Error> {
        let intervals = algebra
            .elements()
            .map(|a| IntervalEmbedding::new(&algebra, a))
            .collect::<Result<Vec<_>, _>>()?;
        let implication = enumerate_implication_filters(&algebra);
        let quotients = implication
            .iter()
            .map(|q| QuotientMap::new(&algebra, q))
            .collect::<Result<Vec<_>, _>>()?;
        let prime_implication =
            (0..implication.len()).filter(|&i| classify(&algebra, &implication[i]).prime).collect();
        let minimal_primes = minimal_primes(&algebra)
            .iter()
            .map(|m| implication.binary_search(m).expect("minimal primes are implication filters"))
            .collect();
        Ok(AlgebraContext {
            chain: algebra.is_chain(),
            ups: algebra.elements().map(|x| principal_filter(&algebra, x)).collect(),
            algebra,
            intervals,
            implication,
            quotients,
            prime_implication,
            minimal_primes,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn is_chain(&self) -> bool {
        self.chain
    }

    /// Nonempty and upward closed, checked against the cached `[x, 1]`.
    pub fn is_order_filter(&self, s: &ElementSet) -> bool {
        !s.is_empty() && s.iter().all(|x| self.ups[x].is_subset(s))
    }

    /// `[a, 1]`
    pub fn interval(&self, a: usize) -> &IntervalEmbedding {
        &self.intervals[a]
    }

    /// All implication filters, ascending by bit pattern.
    pub fn implication_filters(&self) -> &[ElementSet] {
        &self.implication
    }

    /// Quotient by the `i`-th implication filter.
    pub fn quotient(&self, i: usize) -> &QuotientMap {
        &self.quotients[i]
    }

    pub fn quotient_by(&self, q: &ElementSet) -> Option<&QuotientMap> {
        self.implication.binary_search(q).ok().map(|i| &self.quotients[i])
    }

    /// Indices of the proper prime implication filters.
    pub fn prime_implication(&self) -> &[usize] {
        &self.prime_implication
    }

    /// Indices of the minimal proper prime implication filters.
    pub fn minimal_primes(&self) -> &[usize] {
        &self.minimal_primes
    }
}

/// An order filter with its subordinates and kernel precomputed.
#[derive(Clone, Debug)]
pub struct FilterInfo {
    set: ElementSet,
    class: FilterClassification,
    subs: Vec<ElementSet>,
    kernel: ElementSet,
}

impl FilterInfo {
    pub fn new(alg: &Algebra, set: ElementSet) -> FilterInfo {
        let class = classify(alg, &set);
        let subs: Vec<ElementSet> = alg.elements().map(|a| subordinate(alg, &set, a)).collect();
        let kernel = set
            .complement()
            .iter()
            .fold(ElementSet::full(alg.size()), |acc, a| acc.intersection(&subs[a]));
        FilterInfo { set, class, subs, kernel }
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn class(&self) -> &FilterClassification {
        &self.class
    }

    /// `F_a`
    pub fn sub(&self, a: usize) -> &ElementSet {
        &self.subs[a]
    }

    /// `F⁺ = F_0`
    pub fn plus(&self) -> &ElementSet {
        &self.subs[0]
    }

    /// `K(F) = ⋂_{a∉F} F_a`
    pub fn kernel(&self) -> &ElementSet {
        &self.kernel
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    pub fn is_order(&self) -> bool {
        self.class.order_filter()
    }

    pub fn is_lattice(&self) -> bool {
        self.class.lattice_filter()
    }

    pub fn is_implication(&self) -> bool {
        self.class.implication_filter()
    }

    /// Proper, meet-closed and join-splitting.
    pub fn is_prime_lattice(&self) -> bool {
        self.class.lattice_filter() && self.class.prime
    }

    pub fn is_proper(&self) -> bool {
        self.class.proper
    }
}

/// One algebra together with the filters a statement ranges over, listed in
/// descending bit-pattern order.
#[derive(Clone, Copy, Debug)]
pub struct Scope<'a> {
    pub ctx: &'a AlgebraContext,
    pub filters: &'a [FilterInfo],
    /// Random sample index, when the scope did not come from the suite.
    pub sample: Option<u64>,
}

impl<'a> Scope<'a> {
    pub fn alg(&self) -> &'a Algebra {
        &self.ctx.algebra
    }

    /// Elements in descending index order.
    pub fn elements(&self) -> core::iter::Rev<core::ops::Range<usize>> {
        self.ctx.algebra.elements().rev()
    }

    pub fn witness(&self) -> super::Witness {
        let mut w = super::Witness::new(&self.ctx.algebra);
        w.sample = self.sample;
        w
    }
}

/// Descending bit-pattern order, the order in which statements visit filters.
pub(crate) fn sort_descending(filters: &mut Vec<ElementSet>) {
    filters.sort_by(|a, b| b.cmp(a));
    filters.dedup();
}
