//! Quotients by implication filters and the canonical surjection.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::filters::classify;
use crate::set::ElementSet;

/// The canonical epimorphism `η_Q : L → L/Q` for an implication filter `Q`,
/// where `x ~ y ⇔ x→y ∈ Q and y→x ∈ Q`.
///
/// Classes are numbered by their least member, so the class of 0 is the
/// quotient's bottom; each class is represented by its least member.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    kernel_filter: ElementSet,
    quotient: Algebra,
    class_of: Vec<usize>,
    representative: Vec<usize>,
}

impl QuotientMap {
    pub fn new(parent: &Algebra, q: &ElementSet) -> Result<QuotientMap, Error> {
        if q.universe() != parent.size() {
            return Err(Error::UniverseMismatch { expected: parent.size(), found: q.universe() });
        }
        let c = classify(parent, q);
        if !c.contains_top {
            return Err(Error::NotImplicationFilter("does not contain the top element"));
        }
        if !c.up_closed {
            return Err(Error::NotImplicationFilter("not upward closed"));
        }
        if !c.otimes_closed {
            return Err(Error::NotImplicationFilter("not closed under ⊗"));
        }

        let n = parent.size();
        let mut class_of = vec![usize::MAX; n];
        let mut representative = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = representative.len();
            representative.push(x);
            for y in x..n {
                if q.contains(parent.imp(x, y)) && q.contains(parent.imp(y, x)) {
                    class_of[y] = c;
                }
            }
        }
        let m = representative.len();
        let mut oplus = Vec::with_capacity(m * m);
        for &r in &representative {
            for &s in &representative {
                oplus.push(class_of[parent.oplus(r, s)]);
            }
        }
        let neg = representative.iter().map(|&r| class_of[parent.neg(r)]).collect();
        let names = representative.iter().map(|&r| format!("[{}]", parent.name(r))).collect();
        let label = parent.label().map(|l| {
            let lits: Vec<String> = q.iter().map(|x| parent.literal(x)).collect();
            format!("quotient({l}, {{{}}})", lits.join(","))
        });
        let quotient = Algebra::build(m, oplus, neg, label, names, None);
        Ok(QuotientMap { kernel_filter: q.clone(), quotient, class_of, representative })
    }

    pub fn kernel_filter(&self) -> &ElementSet {
        &self.kernel_filter
    }

    pub fn quotient(&self) -> &Algebra {
        &self.quotient
    }

    /// `η(x)`
    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn representative(&self, class: usize) -> usize {
        self.representative[class]
    }

    pub fn parent_size(&self) -> usize {
        self.class_of.len()
    }

    /// `S/Q = {η(x) | x ∈ S}`
    pub fn image(&self, s: &ElementSet) -> ElementSet {
        s.map(self.quotient.size(), |x| self.class_of[x])
    }

    /// `η⁻¹[T] = {x | η(x) ∈ T}`
    pub fn preimage(&self, t: &ElementSet) -> ElementSet {
        ElementSet::from_predicate(self.parent_size(), |x| t.contains(self.class_of[x]))
    }

    /// `η⁻¹[S/Q]`, the union of the classes meeting `S`.
    pub fn saturate(&self, s: &ElementSet) -> ElementSet {
        self.preimage(&self.image(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::find_isomorphism;

    #[test]
    fn quotient_of_product_by_first_coordinate_top() {
        let c3 = Algebra::chain(3).unwrap();
        let c2 = Algebra::chain(2).unwrap();
        let p = Algebra::product(&[c3.clone(), c2.clone()]).unwrap();
        // P = {(1, y)} in value notation: the congruence keeps the first coordinate
        let q = ElementSet::from_predicate(p.size(), |x| x / 2 == 2);
        let qm = QuotientMap::new(&p, &q).unwrap();
        assert_eq!(qm.quotient().size(), 3);
        assert!(qm.quotient().check_axioms().is_empty());
        assert!(find_isomorphism(qm.quotient(), &c3).is_some());
        for x in p.elements() {
            for y in p.elements() {
                assert_eq!(qm.class_of(x) == qm.class_of(y), x / 2 == y / 2);
            }
        }

        // {(x, 1)} keeps the second coordinate instead
        let q = ElementSet::from_predicate(p.size(), |x| x % 2 == 1);
        let qm = QuotientMap::new(&p, &q).unwrap();
        assert!(find_isomorphism(qm.quotient(), &c2).is_some());
    }

    #[test]
    fn trivial_quotients() {
        let c2 = Algebra::chain(2).unwrap();
        let a = Algebra::product(&[Algebra::chain(3).unwrap(), c2]).unwrap();
        let qm = QuotientMap::new(&a, &ElementSet::singleton(a.size(), a.top())).unwrap();
        assert!(find_isomorphism(qm.quotient(), &a).is_some());
        let qm = QuotientMap::new(&a, &ElementSet::full(a.size())).unwrap();
        assert_eq!(qm.quotient().size(), 1);
        assert!(qm.quotient().check_axioms().is_empty());
    }

    #[test]
    fn eta_is_a_homomorphism() {
        let c2 = Algebra::chain(2).unwrap();
        let c3 = Algebra::chain(3).unwrap();
        let a = Algebra::product(&[c3, c2.clone(), c2]).unwrap();
        for q in crate::filters::enumerate_implication_filters(&a) {
            let qm = QuotientMap::new(&a, &q).unwrap();
            let b = qm.quotient();
            for x in a.elements() {
                assert_eq!(qm.class_of(a.neg(x)), b.neg(qm.class_of(x)));
                for y in a.elements() {
                    assert_eq!(qm.class_of(a.oplus(x, y)), b.oplus(qm.class_of(x), qm.class_of(y)));
                }
            }
            assert_eq!(qm.preimage(&ElementSet::singleton(b.size(), b.top())), q);
            for c in b.elements() {
                assert_eq!(qm.class_of(qm.representative(c)), c);
            }
        }
    }

    #[test]
    fn rejects_non_implication_filters() {
        let l3 = Algebra::chain(3).unwrap();
        let err = QuotientMap::new(&l3, &ElementSet::from_elements(3, [1, 2])).unwrap_err();
        assert_eq!(err, Error::NotImplicationFilter("not closed under ⊗"));
        let err = QuotientMap::new(&l3, &ElementSet::from_elements(3, [1])).unwrap_err();
        assert_eq!(err, Error::NotImplicationFilter("does not contain the top element"));
        let err = QuotientMap::new(&l3, &ElementSet::from_elements(3, [0, 2])).unwrap_err();
        assert_eq!(err, Error::NotImplicationFilter("not upward closed"));
    }
}
