//! Subordinates, kernels, saturations and the minimal prime spectrum.
//!
//! For an order filter `F` and an element `a`:
//!
//! - the subordinate `F_a = {z | z→a ∉ F}` (empty when `a ∈ F`),
//! - `F⁺ = F_0`, which also equals `{¬x | x ∉ F}`,
//! - the kernel `K(F) = {z | ∀a∉F, z→a ∉ F}`, equivalently `{z | ∀f∈F, f⊗z ∈ F}`
//!   or `⋂_{a∉F} F_a`,
//! - the saturation `J(F, P) = η_P⁻¹[F/P]` for an implication filter `P`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::filters::{classify, enumerate_implication_filters, implication_filter_generated};
use crate::quotient::QuotientMap;
use crate::set::ElementSet;

pub fn subordinate(alg: &Algebra, f: &ElementSet, a: usize) -> ElementSet {
    ElementSet::from_predicate(alg.size(), |z| !f.contains(alg.imp(z, a)))
}

/// `F_a` for every element `a`, indexed by `a`.
pub fn subordinates(alg: &Algebra, f: &ElementSet) -> Vec<ElementSet> {
    alg.elements().map(|a| subordinate(alg, f, a)).collect()
}

/// `(L ∖ F)* = {¬x | x ∉ F}`
pub fn negated_complement(alg: &Algebra, f: &ElementSet) -> ElementSet {
    f.complement().map(alg.size(), |x| alg.neg(x))
}

/// `F⁺ = F_0`, cross-checked against `(L ∖ F)*`.
pub fn plus(alg: &Algebra, f: &ElementSet) -> Result<ElementSet, Error> {
    let sub = subordinate(alg, f, alg.bottom());
    let star = negated_complement(alg, f);
    if sub != star {
        return Err(Error::Inconsistent(format!(
            "F_0 = {} but (L∖F)* = {}",
            alg.format_set(&sub),
            alg.format_set(&star)
        )));
    }
    Ok(sub)
}

/// `{z | ∀a∉F, z→a ∉ F}`
pub fn kernel_by_definition(alg: &Algebra, f: &ElementSet) -> ElementSet {
    let outside: Vec<usize> = f.complement().iter().collect();
    ElementSet::from_predicate(alg.size(), |z| outside.iter().all(|&a| !f.contains(alg.imp(z, a))))
}

/// `{z | ∀f∈F, f⊗z ∈ F}`
pub fn kernel_by_products(alg: &Algebra, f: &ElementSet) -> ElementSet {
    let inside: Vec<usize> = f.iter().collect();
    ElementSet::from_predicate(alg.size(), |z| inside.iter().all(|&x| f.contains(alg.otimes(x, z))))
}

/// `⋂_{a∉F} F_a` (the whole algebra when `F = L`).
pub fn kernel_by_intersection(alg: &Algebra, f: &ElementSet) -> ElementSet {
    f.complement()
        .iter()
        .fold(ElementSet::full(alg.size()), |acc, a| acc.intersection(&subordinate(alg, f, a)))
}

/// `K(F)`, evaluated by both the definition and the ⊗-stability formula;
/// disagreement is reported as an inconsistency.
pub fn kernel(alg: &Algebra, f: &ElementSet) -> Result<ElementSet, Error> {
    let by_def = kernel_by_definition(alg, f);
    let by_products = kernel_by_products(alg, f);
    if by_def != by_products {
        return Err(Error::Inconsistent(format!(
            "kernel of {}: definition gives {}, products give {}",
            alg.format_set(f),
            alg.format_set(&by_def),
            alg.format_set(&by_products)
        )));
    }
    Ok(by_def)
}

/// `J(F, P) = η_P⁻¹[F/P]`
pub fn saturation(alg: &Algebra, f: &ElementSet, p: &ElementSet) -> Result<ElementSet, Error> {
    Ok(QuotientMap::new(alg, p)?.saturate(f))
}

/// `P ∨ Q` as the implication filter generated by `P ∪ Q`, cross-checked
/// against `J(P, Q)`.
pub fn join_implication_filters(alg: &Algebra, p: &ElementSet, q: &ElementSet) -> Result<ElementSet, Error> {
    if !classify(alg, p).implication_filter() {
        return Err(Error::NotImplicationFilter("left operand of the join"));
    }
    let generated = implication_filter_generated(alg, &p.union(q));
    let saturated = saturation(alg, p, q)?;
    if generated != saturated {
        return Err(Error::Inconsistent(format!(
            "P∨Q = {} but J(P,Q) = {}",
            alg.format_set(&generated),
            alg.format_set(&saturated)
        )));
    }
    Ok(generated)
}

/// Proper prime implication filters, ascending by bit pattern.
pub fn prime_implication_filters(alg: &Algebra) -> Vec<ElementSet> {
    enumerate_implication_filters(alg).into_iter().filter(|p| classify(alg, p).prime).collect()
}

/// The ⊆-minimal proper prime implication filters.
pub fn minimal_primes(alg: &Algebra) -> Vec<ElementSet> {
    let primes = prime_implication_filters(alg);
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

/// One distinct subordinate `F_a`, tagged with the least `a` producing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMember {
    pub representative: usize,
    pub set: ElementSet,
}

/// The deduplicated family `{F_a | a ∈ L}` with its inclusion relation.
#[derive(Clone, Debug)]
pub struct SubordinateFamily {
    base: ElementSet,
    members: Vec<FamilyMember>,
    included: Vec<bool>,
}

impl SubordinateFamily {
    pub fn new(alg: &Algebra, f: &ElementSet) -> SubordinateFamily {
        let mut members: Vec<FamilyMember> = Vec::new();
        for a in alg.elements() {
            let set = subordinate(alg, f, a);
            if !members.iter().any(|m| m.set == set) {
                members.push(FamilyMember { representative: a, set });
            }
        }
        let k = members.len();
        let mut included = vec![false; k * k];
        for i in 0..k {
            for j in 0..k {
                included[i * k + j] = members[i].set.is_subset(&members[j].set);
            }
        }
        SubordinateFamily { base: f.clone(), members, included }
    }

    pub fn base(&self) -> &ElementSet {
        &self.base
    }

    /// Members in order of their representative element.
    pub fn members(&self) -> &[FamilyMember] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members coming from elements outside the base filter.
    pub fn nonempty_members(&self) -> impl Iterator<Item = &FamilyMember> {
        self.members.iter().filter(|m| !m.set.is_empty())
    }

    /// `members[i] ⊆ members[j]`
    pub fn includes(&self, i: usize, j: usize) -> bool {
        self.included[i * self.members.len() + j]
    }

    pub fn is_total(&self) -> bool {
        let k = self.members.len();
        (0..k).all(|i| (0..k).all(|j| self.includes(i, j) || self.includes(j, i)))
    }

    /// Pairs `(i, j)` with `members[i] ⊊ members[j]` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.members.len();
        let strict = |i: usize, j: usize| i != j && self.includes(i, j);
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if strict(i, j) && !(0..k).any(|m| strict(i, m) && strict(m, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}
