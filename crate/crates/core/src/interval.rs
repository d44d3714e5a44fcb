//! The induced MV-algebra on an upper interval `[a, 1]`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::set::ElementSet;

/// `[a, 1]` as an MV-algebra in its own right, with `¬'x = x → a` and
/// `x ⊕' y = (x → a) → y`. Under this structure the interval's implication
/// is the parent's implication restricted to the carrier.
///
/// Interval element 0 is `a`; the remaining elements follow in ascending
/// parent index order.
#[derive(Clone, Debug)]
pub struct IntervalEmbedding {
    base: usize,
    algebra: Algebra,
    to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl IntervalEmbedding {
    pub fn new(parent: &Algebra, a: usize) -> Result<IntervalEmbedding, Error> {
        if a >= parent.size() {
            return Err(Error::InvalidArgument(format!("element {a} out of range for size {}", parent.size())));
        }
        let mut to_parent = vec![a];
        to_parent.extend(parent.elements().filter(|&x| x != a && parent.leq(a, x)));
        let mut from_parent = vec![None; parent.size()];
        for (i, &x) in to_parent.iter().enumerate() {
            from_parent[x] = Some(i);
        }
        let idx = |x: usize| from_parent[x].expect("interval operations stay above the base");
        let m = to_parent.len();
        let neg = to_parent.iter().map(|&x| idx(parent.imp(x, a))).collect();
        let mut oplus = Vec::with_capacity(m * m);
        for &x in &to_parent {
            let nx = parent.imp(x, a);
            for &y in &to_parent {
                oplus.push(idx(parent.imp(nx, y)));
            }
        }
        let names = to_parent.iter().map(|&x| parent.name(x).into()).collect();
        let label = parent.label().map(|l| format!("interval({l}, {})", parent.literal(a)));
        let algebra = Algebra::build(m, oplus, neg, label, names, None);
        Ok(IntervalEmbedding { base: a, algebra, to_parent, from_parent })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn to_parent(&self, x: usize) -> usize {
        self.to_parent[x]
    }

    /// Interval index of a parent element, if it lies above the base.
    pub fn from_parent(&self, x: usize) -> Option<usize> {
        self.from_parent[x]
    }

    /// `F ∩ [a, 1]`, re-indexed into the interval.
    pub fn localize(&self, f: &ElementSet) -> ElementSet {
        ElementSet::from_elements(self.algebra.size(), f.iter().filter_map(|x| self.from_parent[x]))
    }

    /// An interval subset viewed as a parent subset.
    pub fn lift(&self, s: &ElementSet) -> ElementSet {
        s.map(self.from_parent.len(), |x| self.to_parent[x])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;

    #[test]
    fn interval_of_chain_four_is_chain_three() {
        let l4 = Algebra::chain(4).unwrap();
        let iv = IntervalEmbedding::new(&l4, 1).unwrap();
        let a = iv.algebra();
        assert_eq!(a.size(), 3);
        assert!(a.check_axioms().is_empty());
        // ¬'(2/3) = 2/3 → 1/3 = 2/3
        let two_thirds = iv.from_parent(2).unwrap();
        assert_eq!(a.neg(two_thirds), two_thirds);
        assert!(find_isomorphism(a, &Algebra::chain(3).unwrap()).is_some());
        assert_eq!(a.label(), Some("interval(chain 4, 1)"));
    }

    #[test]
    fn interval_at_bottom_is_identity() {
        let c2 = Algebra::chain(2).unwrap();
        let c3 = Algebra::chain(3).unwrap();
        for alg in [c3.clone(), Algebra::product(&[c3, c2]).unwrap()] {
            let iv = IntervalEmbedding::new(&alg, 0).unwrap();
            assert_eq!(iv.algebra(), &alg);
            assert!((0..alg.size()).all(|x| iv.to_parent(x) == x));
        }
    }

    #[test]
    fn interval_of_chain_three_is_boolean() {
        let l3 = Algebra::chain(3).unwrap();
        let iv = IntervalEmbedding::new(&l3, 1).unwrap();
        assert_eq!(iv.algebra(), &Algebra::chain(2).unwrap());
    }

    #[test]
    fn implication_restricts() {
        let c3 = Algebra::chain(3).unwrap();
        let p = Algebra::product(&[c3.clone(), c3]).unwrap();
        for a in p.elements() {
            let iv = IntervalEmbedding::new(&p, a).unwrap();
            let ia = iv.algebra();
            assert!(ia.check_axioms().is_empty());
            for x in ia.elements() {
                assert!(p.leq(a, iv.to_parent(x)));
                for y in ia.elements() {
                    assert_eq!(iv.to_parent(ia.imp(x, y)), p.imp(iv.to_parent(x), iv.to_parent(y)));
                }
            }
            assert_eq!(ia.size(), p.elements().filter(|&x| p.leq(a, x)).count());
        }
    }

    #[test]
    fn out_of_range_base() {
        assert!(IntervalEmbedding::new(&Algebra::chain(3).unwrap(), 3).is_err());
    }
}
