//! Isomorphism search between finite MV-algebras.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Algebra;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Signature {
    below: usize,
    above: usize,
    self_dual: bool,
    idempotent: bool,
}

fn signatures(a: &Algebra) -> Vec<Signature> {
    a.elements()
        .map(|x| Signature {
            below: a.elements().filter(|&y| a.leq(y, x)).count(),
            above: a.elements().filter(|&y| a.leq(x, y)).count(),
            self_dual: a.neg(x) == x,
            idempotent: a.oplus(x, x) == x,
        })
        .collect()
}

/// Lexicographically least bijection `f` (by element index) with
/// `f(x⊕y) = f(x)⊕f(y)` and `f(¬x) = ¬f(x)`, if any.
///
/// Candidates are pruned by order rank and negation/idempotence signatures;
/// each partial map is checked against every fully assigned `⊕` and `¬`
/// instance before descending.
pub fn find_isomorphism(a: &Algebra, b: &Algebra) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut ms = sa.clone();
    let mut ns = sb.clone();
    let key = |s: &Signature| (s.below, s.above, s.self_dual, s.idempotent);
    ms.sort_by_key(key);
    ns.sort_by_key(key);
    if ms.iter().map(key).ne(ns.iter().map(key)) {
        return None;
    }

    struct Search<'a> {
        a: &'a Algebra,
        b: &'a Algebra,
        sa: Vec<Signature>,
        sb: Vec<Signature>,
        map: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn consistent(&self, x: usize) -> bool {
            let (a, b) = (self.a, self.b);
            let fx = self.map[x].unwrap();
            let negx = a.neg(x);
            if let Some(fnx) = self.map[negx] {
                if fnx != b.neg(fx) {
                    return false;
                }
            }
            for u in 0..a.size() {
                let Some(fu) = self.map[u] else { continue };
                if let Some(fw) = self.map[a.oplus(x, u)] {
                    if fw != b.oplus(fx, fu) {
                        return false;
                    }
                }
                for v in 0..a.size() {
                    if a.oplus(u, v) != x {
                        continue;
                    }
                    if let Some(fv) = self.map[v] {
                        if b.oplus(fu, fv) != fx {
                            return false;
                        }
                    }
                }
            }
            true
        }

        fn descend(&mut self, x: usize) -> bool {
            if x == self.a.size() {
                return true;
            }
            for y in 0..self.b.size() {
                if self.used[y] || self.sa[x] != self.sb[y] {
                    continue;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                if self.consistent(x) && self.descend(x + 1) {
                    return true;
                }
                self.map[x] = None;
                self.used[y] = false;
            }
            false
        }
    }

    let mut s = Search { a, b, sa, sb, map: vec![None; n], used: vec![false; n] };
    if !s.descend(0) {
        return None;
    }
    let map: Vec<usize> = s.map.into_iter().map(Option::unwrap).collect();
    is_isomorphism(a, b, &map).then_some(map)
}

/// Full check that `map` is a bijective `⊕`/`¬` homomorphism from `a` to `b`.
pub fn is_isomorphism(a: &Algebra, b: &Algebra, map: &[usize]) -> bool {
    if a.size() != b.size() || map.len() != a.size() {
        return false;
    }
    let mut seen = vec![false; b.size()];
    for &y in map {
        if y >= b.size() || core::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    a.elements().all(|x| map[a.neg(x)] == b.neg(map[x]))
        && a.elements().all(|x| a.elements().all(|y| map[a.oplus(x, y)] == b.oplus(map[x], map[y])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::IntervalEmbedding;

    #[test]
    fn chain_three_matches_interval() {
        let l3 = Algebra::chain(3).unwrap();
        let iv = IntervalEmbedding::new(&Algebra::chain(4).unwrap(), 1).unwrap();
        assert_eq!(find_isomorphism(&l3, iv.algebra()), Some(vec![0, 1, 2]));
    }

    #[test]
    fn chain_is_not_boolean_square() {
        let c2 = Algebra::chain(2).unwrap();
        let b4 = Algebra::product(&[c2.clone(), c2]).unwrap();
        assert_eq!(find_isomorphism(&Algebra::chain(4).unwrap(), &b4), None);
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let c2 = Algebra::chain(2).unwrap();
        let c3 = Algebra::chain(3).unwrap();
        let a = Algebra::product(&[c2.clone(), c3, c2]).unwrap();
        assert_eq!(find_isomorphism(&a, &a), Some((0..a.size()).collect()));
    }

    #[test]
    fn factor_order_does_not_matter() {
        let c2 = Algebra::chain(2).unwrap();
        let c3 = Algebra::chain(3).unwrap();
        let a = Algebra::product(&[c2.clone(), c3.clone()]).unwrap();
        let b = Algebra::product(&[c3, c2]).unwrap();
        let f = find_isomorphism(&a, &b).unwrap();
        assert!(is_isomorphism(&a, &b, &f));
        // (i, j) ↦ (j, i) is the only isomorphism
        for x in a.elements() {
            assert_eq!(f[x], (x % 3) * 2 + x / 3);
        }
    }

    #[test]
    fn lexicographically_least_automorphism() {
        let c2 = Algebra::chain(2).unwrap();
        let b4 = Algebra::product(&[c2.clone(), c2]).unwrap();
        // swap is also an automorphism, identity is smaller
        assert!(is_isomorphism(&b4, &b4, &[0, 2, 1, 3]));
        assert_eq!(find_isomorphism(&b4, &b4), Some(vec![0, 1, 2, 3]));
    }
}
