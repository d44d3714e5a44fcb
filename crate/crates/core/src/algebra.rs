//! Finite MV-algebras as operation tables.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::set::ElementSet;

/// A finite MV-algebra `(L, ⊕, ¬, 0)` on the elements `0..size`.
///
/// Index `0` is the bottom element and `neg(0)` is the top. The derived
/// operations are tabulated once at construction; nothing downstream
/// re-derives them from `⊕` and `¬`.
#[derive(Clone, Debug)]
pub struct Algebra {
    size: usize,
    top: usize,
    oplus: Vec<usize>,
    neg: Vec<usize>,
    imp: Vec<usize>,
    otimes: Vec<usize>,
    join: Vec<usize>,
    meet: Vec<usize>,
    leq: Vec<bool>,
    label: Option<String>,
    names: Vec<String>,
    factors: Option<Vec<usize>>,
}

impl PartialEq for Algebra {
    /// Algebras are equal when their defining tables are.
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size && self.oplus == other.oplus && self.neg == other.neg
    }
}

impl Eq for Algebra {}

/// Named MV identity (or derived-table invariant) checked by [`Algebra::check_axioms`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    OplusCommutative,
    OplusAssociative,
    OplusIdentity,
    DoubleNegation,
    TopAbsorbing,
    Lukasiewicz,
    OrderAntisymmetric,
    OrderTransitive,
    OrderBounds,
    JoinIsSupremum,
    MeetIsInfimum,
    Residuation,
}

impl Axiom {
    pub fn law(self) -> &'static str {
        match self {
            Axiom::OplusCommutative => "x⊕y = y⊕x",
            Axiom::OplusAssociative => "(x⊕y)⊕z = x⊕(y⊕z)",
            Axiom::OplusIdentity => "x⊕0 = x",
            Axiom::DoubleNegation => "¬¬x = x",
            Axiom::TopAbsorbing => "x⊕¬0 = ¬0",
            Axiom::Lukasiewicz => "¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x",
            Axiom::OrderAntisymmetric => "x≤y ∧ y≤x ⇒ x = y",
            Axiom::OrderTransitive => "x≤y ∧ y≤z ⇒ x≤z",
            Axiom::OrderBounds => "0 ≤ x ≤ ¬0",
            Axiom::JoinIsSupremum => "x∨y is the least upper bound",
            Axiom::MeetIsInfimum => "x∧y is the greatest lower bound",
            Axiom::Residuation => "x⊗z ≤ a ⇔ z ≤ x→a",
        }
    }
}

/// A failed axiom together with the elements that break it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const VARS: [&str; 3] = ["x", "y", "z"];
        write!(f, "{} fails at ", self.axiom.law())?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let var = if self.axiom == Axiom::Residuation { ["x", "z", "a"][i] } else { VARS[i] };
            write!(f, "{var}={w}")?;
        }
        Ok(())
    }
}

impl Algebra {
    /// The Łukasiewicz chain with `k` elements; index `i` stands for `i/(k-1)`.
    pub fn chain(k: usize) -> Result<Algebra, Error> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("chain length must be at least 2, got {k}")));
        }
        let top = k - 1;
        let oplus = (0..k * k).map(|i| core::cmp::min(top, i / k + i % k)).collect();
        let neg = (0..k).map(|i| top - i).collect();
        let names = (0..k).map(|i| i.to_string()).collect();
        Ok(Algebra::build(k, oplus, neg, Some(format!("chain {k}")), names, None))
    }

    /// Direct product; element indices are row-major with the last factor varying fastest.
    pub fn product(factors: &[Algebra]) -> Result<Algebra, Error> {
        if factors.is_empty() {
            return Err(Error::InvalidArgument("product needs at least one factor".into()));
        }
        let sizes: Vec<usize> = factors.iter().map(|a| a.size).collect();
        let size: usize = sizes.iter().product();
        let decode = |mut x: usize| {
            let mut coords = vec![0; sizes.len()];
            for i in (0..sizes.len()).rev() {
                coords[i] = x % sizes[i];
                x /= sizes[i];
            }
            coords
        };
        let encode = |coords: &[usize]| coords.iter().zip(&sizes).fold(0, |acc, (c, s)| acc * s + c);
        let coords: Vec<Vec<usize>> = (0..size).map(decode).collect();

        let mut oplus = Vec::with_capacity(size * size);
        let mut buf = vec![0; sizes.len()];
        for x in 0..size {
            for y in 0..size {
                for (i, f) in factors.iter().enumerate() {
                    buf[i] = f.oplus(coords[x][i], coords[y][i]);
                }
                oplus.push(encode(&buf));
            }
        }
        let neg = (0..size)
            .map(|x| {
                for (i, f) in factors.iter().enumerate() {
                    buf[i] = f.neg(coords[x][i]);
                }
                encode(&buf)
            })
            .collect();
        let names = coords
            .iter()
            .map(|c| {
                let parts: Vec<&str> = c.iter().zip(factors).map(|(&ci, f)| f.names[ci].as_str()).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let label = factors
            .iter()
            .map(|f| f.label.clone())
            .collect::<Option<Vec<_>>>()
            .map(|ls| format!("product({})", ls.join(", ")));
        Ok(Algebra::build(size, oplus, neg, label, names, Some(sizes)))
    }

    /// Builds an algebra from raw `⊕` (row-major) and `¬` tables, rejecting
    /// anything that is not an MV-algebra.
    pub fn from_tables(size: usize, oplus: Vec<usize>, neg: Vec<usize>) -> Result<Algebra, Error> {
        let alg = Algebra::from_tables_unchecked(size, oplus, neg)?;
        let violations = alg.check_axioms();
        if violations.is_empty() {
            Ok(alg)
        } else {
            Err(Error::AxiomViolations(violations))
        }
    }

    /// Like [`Algebra::from_tables`] but only validates dimensions and ranges,
    /// so that axiom checking can be run (and reported) separately.
    pub fn from_tables_unchecked(size: usize, oplus: Vec<usize>, neg: Vec<usize>) -> Result<Algebra, Error> {
        if size == 0 {
            return Err(Error::InvalidArgument("algebra size must be positive".into()));
        }
        if oplus.len() != size * size {
            return Err(Error::DimensionMismatch { table: "oplus", expected: size * size, found: oplus.len() });
        }
        if neg.len() != size {
            return Err(Error::DimensionMismatch { table: "neg", expected: size, found: neg.len() });
        }
        for (table, entries) in [("oplus", &oplus), ("neg", &neg)] {
            if let Some((position, &value)) = entries.iter().enumerate().find(|(_, &v)| v >= size) {
                return Err(Error::OutOfRange { table, position, value, size });
            }
        }
        let names = (0..size).map(|i| i.to_string()).collect();
        Ok(Algebra::build(size, oplus, neg, None, names, None))
    }

    pub(crate) fn build(
        size: usize,
        oplus: Vec<usize>,
        neg: Vec<usize>,
        label: Option<String>,
        names: Vec<String>,
        factors: Option<Vec<usize>>,
    ) -> Algebra {
        let n = size;
        let top = neg[0];
        let imp: Vec<usize> = (0..n * n).map(|i| oplus[neg[i / n] * n + i % n]).collect();
        let otimes = (0..n * n).map(|i| neg[oplus[neg[i / n] * n + neg[i % n]]]).collect();
        let join: Vec<usize> = (0..n * n).map(|i| imp[imp[i] * n + i % n]).collect();
        let meet = (0..n * n).map(|i| neg[join[neg[i / n] * n + neg[i % n]]]).collect();
        let leq = imp.iter().map(|&v| v == top).collect();
        Algebra { size, top, oplus, neg, imp, otimes, join, meet, leq, label, names, factors }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        0
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn oplus(&self, x: usize, y: usize) -> usize {
        self.oplus[x * self.size + y]
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    /// `x → y = ¬x ⊕ y`
    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.size + y]
    }

    /// `x ⊗ y = ¬(¬x ⊕ ¬y)`
    #[inline]
    pub fn otimes(&self, x: usize, y: usize) -> usize {
        self.otimes[x * self.size + y]
    }

    /// `x ∨ y = (x → y) → y`
    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size + y]
    }

    /// `x ∧ y = ¬(¬x ∨ ¬y)`
    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.size
    }

    pub fn oplus_table(&self) -> &[usize] {
        &self.oplus
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Algebra {
        self.label = Some(label.into());
        self
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Sizes of the immediate factors when built by [`Algebra::product`].
    pub fn factors(&self) -> Option<&[usize]> {
        self.factors.as_deref()
    }

    /// Encodes per-factor coordinates of a product element as a flat index.
    pub fn encode_tuple(&self, coords: &[usize]) -> Option<usize> {
        let sizes = self.factors.as_ref()?;
        if coords.len() != sizes.len() || coords.iter().zip(sizes).any(|(c, s)| c >= s) {
            return None;
        }
        Some(coords.iter().zip(sizes).fold(0, |acc, (c, s)| acc * s + c))
    }

    /// Element literal for `x` in the definition language: a tuple of
    /// per-factor indices for products, the plain index otherwise.
    pub fn literal(&self, x: usize) -> String {
        match &self.factors {
            Some(sizes) => {
                let mut coords = vec![0; sizes.len()];
                let mut rest = x;
                for i in (0..sizes.len()).rev() {
                    coords[i] = rest % sizes[i];
                    rest /= sizes[i];
                }
                let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
                format!("({})", parts.join(","))
            }
            None => x.to_string(),
        }
    }

    /// Formats a set with element names, e.g. `{(0,1), (1,1)}`.
    pub fn format_set(&self, set: &ElementSet) -> String {
        let parts: Vec<&str> = set.iter().map(|x| self.name(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// True when `≤` is a total order.
    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    /// Elements `x` with `x ⊕ x = x` (the Boolean skeleton).
    pub fn idempotents(&self) -> impl Iterator<Item = usize> + '_ {
        self.elements().filter(move |&x| self.oplus(x, x) == x)
    }

    /// Exhaustively checks the MV identities and the derived-table invariants.
    /// At most one violation is reported per axiom.
    pub fn check_axioms(&self) -> Vec<Violation> {
        let n = self.size;
        let mut out = Vec::new();
        let mut first = |axiom: Axiom, witness: Option<Vec<usize>>| {
            if let Some(witness) = witness {
                out.push(Violation { axiom, witness });
            }
        };
        let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
        let triples = || pairs().flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)));
        let zero = 0;
        let one = self.neg(zero);

        first(
            Axiom::OplusCommutative,
            pairs().find(|&(x, y)| self.oplus(x, y) != self.oplus(y, x)).map(|(x, y)| vec![x, y]),
        );
        first(
            Axiom::OplusAssociative,
            triples()
                .find(|&(x, y, z)| self.oplus(self.oplus(x, y), z) != self.oplus(x, self.oplus(y, z)))
                .map(|(x, y, z)| vec![x, y, z]),
        );
        first(Axiom::OplusIdentity, (0..n).find(|&x| self.oplus(x, zero) != x).map(|x| vec![x]));
        first(Axiom::DoubleNegation, (0..n).find(|&x| self.neg(self.neg(x)) != x).map(|x| vec![x]));
        first(Axiom::TopAbsorbing, (0..n).find(|&x| self.oplus(x, one) != one).map(|x| vec![x]));
        first(
            Axiom::Lukasiewicz,
            pairs()
                .find(|&(x, y)| {
                    self.oplus(self.neg(self.oplus(self.neg(x), y)), y)
                        != self.oplus(self.neg(self.oplus(self.neg(y), x)), x)
                })
                .map(|(x, y)| vec![x, y]),
        );
        first(
            Axiom::OrderAntisymmetric,
            pairs().find(|&(x, y)| x != y && self.leq(x, y) && self.leq(y, x)).map(|(x, y)| vec![x, y]),
        );
        first(
            Axiom::OrderTransitive,
            triples()
                .find(|&(x, y, z)| self.leq(x, y) && self.leq(y, z) && !self.leq(x, z))
                .map(|(x, y, z)| vec![x, y, z]),
        );
        first(
            Axiom::OrderBounds,
            (0..n).find(|&x| !self.leq(zero, x) || !self.leq(x, self.top)).map(|x| vec![x]),
        );
        first(
            Axiom::JoinIsSupremum,
            pairs()
                .find(|&(x, y)| {
                    let j = self.join(x, y);
                    !self.leq(x, j)
                        || !self.leq(y, j)
                        || (0..n).any(|z| self.leq(x, z) && self.leq(y, z) && !self.leq(j, z))
                })
                .map(|(x, y)| vec![x, y]),
        );
        first(
            Axiom::MeetIsInfimum,
            pairs()
                .find(|&(x, y)| {
                    let m = self.meet(x, y);
                    !self.leq(m, x)
                        || !self.leq(m, y)
                        || (0..n).any(|z| self.leq(z, x) && self.leq(z, y) && !self.leq(z, m))
                })
                .map(|(x, y)| vec![x, y]),
        );
        first(
            Axiom::Residuation,
            triples()
                .find(|&(x, z, a)| self.leq(self.otimes(x, z), a) != self.leq(z, self.imp(x, a)))
                .map(|(x, z, a)| vec![x, z, a]),
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_two_is_boolean() {
        let b = Algebra::chain(2).unwrap();
        assert_eq!(b.oplus(1, 1), 1);
        assert_eq!(b.neg(0), 1);
        assert!(b.check_axioms().is_empty());
    }

    #[test]
    fn chain_three_tables() {
        let l3 = Algebra::chain(3).unwrap();
        assert_eq!(l3.oplus(1, 1), 2);
        assert_eq!(l3.neg(1), 1);
        assert_eq!(l3.otimes(1, 1), 0);
        assert_eq!(l3.imp(1, 0), 1);
    }

    #[test]
    fn chain_four_otimes() {
        let l4 = Algebra::chain(4).unwrap();
        assert_eq!(l4.otimes(2, 1), 0);
        assert_eq!(l4.otimes(2, 2), 1);
    }

    #[test]
    fn chain_rejects_short() {
        assert!(matches!(Algebra::chain(1), Err(Error::InvalidArgument(_))));
        assert!(matches!(Algebra::chain(0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn chain_order_is_index_order() {
        let l5 = Algebra::chain(5).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(l5.leq(x, y), x <= y);
            }
        }
        assert!(l5.is_chain());
        assert!(l5.check_axioms().is_empty());
    }

    #[test]
    fn product_examples() {
        let c2 = Algebra::chain(2).unwrap();
        let c3 = Algebra::chain(3).unwrap();
        let b4 = Algebra::product(&[c2.clone(), c2.clone()]).unwrap();
        let e10 = b4.encode_tuple(&[1, 0]).unwrap();
        assert_eq!(b4.neg(e10), b4.encode_tuple(&[0, 1]).unwrap());
        assert_eq!(b4.name(e10), "(1,0)");
        assert_eq!(b4.label(), Some("product(chain 2, chain 2)"));

        let p = Algebra::product(&[c3.clone(), c2]).unwrap();
        assert_eq!(p.size(), 6);
        let half_one = p.encode_tuple(&[1, 1]).unwrap();
        assert_eq!(p.otimes(half_one, half_one), p.encode_tuple(&[0, 1]).unwrap());

        let q = Algebra::product(&[c3.clone(), c3]).unwrap();
        let j = q.join(q.encode_tuple(&[2, 0]).unwrap(), q.encode_tuple(&[0, 2]).unwrap());
        assert_eq!(j, q.encode_tuple(&[2, 2]).unwrap());
        assert!(!q.is_chain());
        assert!(q.check_axioms().is_empty());
    }

    #[test]
    fn product_rejects_empty() {
        assert!(Algebra::product(&[]).is_err());
    }

    #[test]
    fn from_tables_round_trip() {
        let l3 = Algebra::chain(3).unwrap();
        let t = Algebra::from_tables(3, l3.oplus_table().to_vec(), l3.neg_table().to_vec()).unwrap();
        assert_eq!(t, l3);
    }

    #[test]
    fn from_tables_rejects_broken_negation() {
        let l3 = Algebra::chain(3).unwrap();
        let mut neg = l3.neg_table().to_vec();
        neg[1] = 2;
        match Algebra::from_tables(3, l3.oplus_table().to_vec(), neg) {
            Err(Error::AxiomViolations(v)) => {
                // ¬¬1 = ¬2 = 0 ≠ 1
                assert!(v.iter().any(|v| v.axiom == Axiom::DoubleNegation && v.witness == [1]));
            }
            other => panic!("expected axiom violation, got {other:?}"),
        }
    }

    #[test]
    fn from_tables_shape_errors() {
        assert!(matches!(
            Algebra::from_tables(2, vec![0, 1, 1], vec![1, 0]),
            Err(Error::DimensionMismatch { table: "oplus", .. })
        ));
        assert!(matches!(
            Algebra::from_tables(2, vec![0, 1, 1, 1], vec![1]),
            Err(Error::DimensionMismatch { table: "neg", .. })
        ));
        assert!(matches!(
            Algebra::from_tables(2, vec![0, 1, 1, 5], vec![1, 0]),
            Err(Error::OutOfRange { table: "oplus", position: 3, value: 5, .. })
        ));
    }

    #[test]
    fn mutated_sum_is_detected() {
        let l3 = Algebra::chain(3).unwrap();
        let mut oplus = l3.oplus_table().to_vec();
        oplus[4] = 1; // 1 ⊕ 1 := 1
        let broken = Algebra::from_tables_unchecked(3, oplus, l3.neg_table().to_vec()).unwrap();
        let v = broken.check_axioms();
        assert!(v.iter().any(|v| matches!(v.axiom, Axiom::Lukasiewicz | Axiom::TopAbsorbing)), "{v:?}");
    }

    #[test]
    fn one_element_algebra_is_valid() {
        let one = Algebra::from_tables(1, vec![0], vec![0]).unwrap();
        assert!(one.check_axioms().is_empty());
        assert_eq!(one.top(), 0);
    }

    #[test]
    fn identities_hold_on_products() {
        let c2 = Algebra::chain(2).unwrap();
        let c3 = Algebra::chain(3).unwrap();
        let a = Algebra::product(&[c3, c2.clone(), c2]).unwrap();
        for x in a.elements() {
            for y in a.elements() {
                assert_eq!(a.meet(x, y), a.neg(a.join(a.neg(x), a.neg(y))));
                assert_eq!(a.imp(a.imp(x, y), y), a.join(x, y));
            }
        }
    }
}
