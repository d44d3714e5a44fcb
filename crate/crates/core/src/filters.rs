//! Classification and enumeration of order, lattice and implication filters.

use alloc::vec::Vec;

use crate::algebra::Algebra;
use crate::error::Error;
use crate::set::ElementSet;

/// Default cap on the number of up-sets [`enumerate_order_filters`] will produce.
pub const DEFAULT_UPSET_BUDGET: usize = 1_000_000;

/// Closure properties of a subset, each decided by exhaustive check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct FilterClassification {
    pub nonempty: bool,
    pub up_closed: bool,
    pub contains_top: bool,
    pub meet_closed: bool,
    pub otimes_closed: bool,
    /// Proper and join-splitting: `x∨y ∈ S ⇒ x ∈ S or y ∈ S`.
    pub prime: bool,
    pub proper: bool,
}

impl FilterClassification {
    pub fn order_filter(&self) -> bool {
        self.nonempty && self.up_closed
    }

    pub fn lattice_filter(&self) -> bool {
        self.order_filter() && self.meet_closed
    }

    pub fn implication_filter(&self) -> bool {
        self.contains_top && self.otimes_closed && self.up_closed
    }

    /// Name of the strongest filter kind the set belongs to, if any.
    pub fn kind(&self) -> Option<&'static str> {
        if self.implication_filter() {
            Some("implication filter")
        } else if self.lattice_filter() {
            Some("lattice filter")
        } else if self.order_filter() {
            Some("order filter")
        } else {
            None
        }
    }
}

pub fn classify(alg: &Algebra, s: &ElementSet) -> FilterClassification {
    let n = alg.size();
    let members: Vec<usize> = s.iter().collect();
    let up_closed = members.iter().all(|&x| (0..n).all(|y| !alg.leq(x, y) || s.contains(y)));
    let meet_closed = is_meet_closed(alg, s);
    let otimes_closed = members.iter().all(|&x| members.iter().all(|&y| s.contains(alg.otimes(x, y))));
    let proper = !s.is_full();
    let join_splitting = is_join_splitting(alg, s);
    FilterClassification {
        nonempty: !members.is_empty(),
        up_closed,
        contains_top: s.contains(alg.top()),
        meet_closed,
        otimes_closed,
        prime: proper && join_splitting,
        proper,
    }
}

/// `x, y ∈ S ⇒ x∧y ∈ S`
pub fn is_meet_closed(alg: &Algebra, s: &ElementSet) -> bool {
    s.iter().all(|x| s.iter().all(|y| y < x || s.contains(alg.meet(x, y))))
}

/// `x∨y ∈ S ⇒ x ∈ S or y ∈ S`, with no properness requirement.
pub fn is_join_splitting(alg: &Algebra, s: &ElementSet) -> bool {
    let n = alg.size();
    (0..n).all(|x| s.contains(x) || (x..n).all(|y| s.contains(y) || !s.contains(alg.join(x, y))))
}

/// `[p, 1] = {x | p ≤ x}`
pub fn principal_filter(alg: &Algebra, p: usize) -> ElementSet {
    ElementSet::from_predicate(alg.size(), |x| alg.leq(p, x))
}

/// Smallest up-set containing `s`.
pub fn up_closure(alg: &Algebra, s: &ElementSet) -> ElementSet {
    let mut out = s.clone();
    for x in s {
        for y in alg.elements() {
            if alg.leq(x, y) {
                out.insert(y);
            }
        }
    }
    out
}

/// Elements covering `x` in the order: `x < y` with nothing strictly between.
pub fn upper_covers(alg: &Algebra, x: usize) -> Vec<usize> {
    let above: Vec<usize> = alg.elements().filter(|&y| y != x && alg.leq(x, y)).collect();
    above
        .iter()
        .copied()
        .filter(|&y| !above.iter().any(|&z| z != y && alg.leq(z, y)))
        .collect()
}

/// All nonempty up-sets, ascending by bit pattern.
///
/// Elements are decided from the top down in a linear extension; an element
/// may join the set only when all its upper covers already have, so each
/// up-set is reached exactly once and no branch is dead.
pub fn enumerate_order_filters(alg: &Algebra, budget: usize) -> Result<Vec<ElementSet>, Error> {
    let n = alg.size();
    let mut order: Vec<usize> = alg.elements().collect();
    let up_count: Vec<usize> = order.iter().map(|&x| alg.elements().filter(|&y| alg.leq(x, y)).count()).collect();
    order.sort_by_key(|&x| (up_count[x], x));
    debug_assert_eq!(order[0], alg.top());
    let covers: Vec<Vec<usize>> = alg.elements().map(|x| upper_covers(alg, x)).collect();

    struct Walk<'a> {
        order: &'a [usize],
        covers: &'a [Vec<usize>],
        budget: usize,
        out: Vec<ElementSet>,
    }

    impl Walk<'_> {
        fn descend(&mut self, depth: usize, current: &mut ElementSet) -> Result<(), Error> {
            if depth == self.order.len() {
                if self.out.len() == self.budget {
                    return Err(Error::BudgetExceeded(self.budget));
                }
                self.out.push(current.clone());
                return Ok(());
            }
            let x = self.order[depth];
            self.descend(depth + 1, current)?;
            if self.covers[x].iter().all(|&c| current.contains(c)) {
                current.insert(x);
                self.descend(depth + 1, current)?;
                current.remove(x);
            }
            Ok(())
        }
    }

    let mut walk = Walk { order: &order, covers: &covers, budget, out: Vec::new() };
    let mut current = ElementSet::singleton(n, alg.top());
    walk.descend(1, &mut current)?;
    let mut out = walk.out;
    out.sort();
    Ok(out)
}

/// Order filters that are also meet-closed.
pub fn enumerate_lattice_filters(alg: &Algebra, budget: usize) -> Result<Vec<ElementSet>, Error> {
    Ok(enumerate_order_filters(alg, budget)?
        .into_iter()
        .filter(|f| classify(alg, f).meet_closed)
        .collect())
}

/// All implication filters, ascending by bit pattern.
///
/// In a finite MV-algebra an implication filter is `[e, 1]` for its least
/// element `e`, which is idempotent; conversely every `[e, 1]` with `e`
/// idempotent is ⊗-closed. This avoids enumerating up-sets at all.
pub fn enumerate_implication_filters(alg: &Algebra) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = alg.idempotents().map(|e| principal_filter(alg, e)).collect();
    out.sort();
    out
}

/// Least implication filter containing `s`: close `s ∪ {1}` under ⊗ and
/// upward closure until nothing changes.
pub fn implication_filter_generated(alg: &Algebra, s: &ElementSet) -> ElementSet {
    let mut current = s.clone();
    current.insert(alg.top());
    loop {
        let mut next = up_closure(alg, &current);
        let members: Vec<usize> = next.iter().collect();
        for &x in &members {
            for &y in &members {
                next.insert(alg.otimes(x, y));
            }
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Whether `L ∖ f` is a prime ideal: nonempty, down-closed, ∨-closed and
/// `x∧y ∈ I ⇒ x ∈ I or y ∈ I`.
pub fn is_prime_ideal_complement(alg: &Algebra, f: &ElementSet) -> bool {
    let ideal = f.complement();
    if ideal.is_empty() {
        return false;
    }
    let n = alg.size();
    let down_closed = ideal.iter().all(|x| (0..n).all(|y| !alg.leq(y, x) || ideal.contains(y)));
    let join_closed = ideal.iter().all(|x| ideal.iter().all(|y| ideal.contains(alg.join(x, y))));
    let meet_splitting =
        (0..n).all(|x| (0..n).all(|y| !ideal.contains(alg.meet(x, y)) || ideal.contains(x) || ideal.contains(y)));
    down_closed && join_closed && meet_splitting
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b4() -> Algebra {
        let c2 = Algebra::chain(2).unwrap();
        Algebra::product(&[c2.clone(), c2]).unwrap()
    }

    fn set(alg: &Algebra, tuples: &[&[usize]]) -> ElementSet {
        ElementSet::from_elements(alg.size(), tuples.iter().map(|t| alg.encode_tuple(t).unwrap()))
    }

    #[test]
    fn classify_examples() {
        let b = b4();
        let s = set(&b, &[&[1, 0], &[0, 1], &[1, 1]]);
        let c = classify(&b, &s);
        assert!(c.order_filter() && c.prime && !c.meet_closed);

        let l3 = Algebra::chain(3).unwrap();
        let c = classify(&l3, &ElementSet::from_elements(3, [1, 2]));
        assert!(c.lattice_filter() && c.prime && !c.implication_filter());

        for alg in [b, l3, Algebra::chain(5).unwrap()] {
            let c = classify(&alg, &ElementSet::singleton(alg.size(), alg.top()));
            assert!(c.implication_filter());
        }
    }

    #[test]
    fn empty_and_full_sets() {
        let l3 = Algebra::chain(3).unwrap();
        let e = classify(&l3, &ElementSet::empty(3));
        // vacuously join-splitting, but not a filter of any kind
        assert!(!e.nonempty && !e.order_filter() && e.kind().is_none());
        let f = classify(&l3, &ElementSet::full(3));
        assert!(f.implication_filter() && !f.proper && !f.prime);
    }

    #[test]
    fn order_filter_counts() {
        let l3 = Algebra::chain(3).unwrap();
        let fs = enumerate_order_filters(&l3, DEFAULT_UPSET_BUDGET).unwrap();
        assert_eq!(
            fs,
            vec![
                ElementSet::from_elements(3, [2]),
                ElementSet::from_elements(3, [1, 2]),
                ElementSet::full(3)
            ]
        );
        for k in 2..=7 {
            let c = Algebra::chain(k).unwrap();
            assert_eq!(enumerate_order_filters(&c, DEFAULT_UPSET_BUDGET).unwrap().len(), k);
        }
        assert_eq!(enumerate_order_filters(&b4(), DEFAULT_UPSET_BUDGET).unwrap().len(), 5);
    }

    #[test]
    fn budget_is_enforced() {
        let c2 = Algebra::chain(2).unwrap();
        let cube = Algebra::product(&[c2.clone(), c2.clone(), c2]).unwrap();
        // the Boolean cube has 20 up-sets, one of them empty
        let all = enumerate_order_filters(&cube, DEFAULT_UPSET_BUDGET).unwrap();
        assert_eq!(all.len(), 19);
        assert_eq!(enumerate_order_filters(&cube, 5), Err(Error::BudgetExceeded(5)));
    }

    #[test]
    fn implication_filter_counts() {
        let l3 = Algebra::chain(3).unwrap();
        assert_eq!(
            enumerate_implication_filters(&l3),
            vec![ElementSet::singleton(3, 2), ElementSet::full(3)]
        );
        assert_eq!(enumerate_implication_filters(&b4()).len(), 4);
        assert_eq!(enumerate_implication_filters(&Algebra::chain(2).unwrap()).len(), 2);
    }

    #[test]
    fn principal_filters() {
        let l3 = Algebra::chain(3).unwrap();
        assert_eq!(principal_filter(&l3, 1), ElementSet::from_elements(3, [1, 2]));
        assert_eq!(principal_filter(&l3, 2), ElementSet::singleton(3, 2));
        let c2 = Algebra::chain(2).unwrap();
        let p = Algebra::product(&[l3, c2]).unwrap();
        assert_eq!(principal_filter(&p, p.encode_tuple(&[1, 1]).unwrap()), set(&p, &[&[1, 1], &[2, 1]]));
    }

    #[test]
    fn generated_filters() {
        let b = b4();
        assert_eq!(implication_filter_generated(&b, &set(&b, &[&[1, 0]])), set(&b, &[&[1, 0], &[1, 1]]));
        assert!(implication_filter_generated(&b, &set(&b, &[&[1, 0], &[0, 1]])).is_full());
        assert_eq!(implication_filter_generated(&b, &ElementSet::empty(4)), ElementSet::singleton(4, b.top()));
    }

    #[test]
    fn prime_ideal_complements() {
        let l3 = Algebra::chain(3).unwrap();
        assert!(is_prime_ideal_complement(&l3, &ElementSet::from_elements(3, [1, 2])));
        let b = b4();
        assert!(!is_prime_ideal_complement(&b, &ElementSet::singleton(4, b.top())));
        assert!(!is_prime_ideal_complement(&b, &ElementSet::full(4)));
    }
}
