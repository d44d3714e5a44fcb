use alloc::format;
use alloc::vec::Vec;

use super::context::{FilterInfo, Scope};
use super::{Failure, Tally, Variant};
use crate::error::Error;
use crate::filters::{
    classify, implication_filter_generated, is_join_splitting, is_meet_closed, is_prime_ideal_complement,
    principal_filter,
};
use crate::iso::{find_isomorphism, is_isomorphism};
use crate::quotient::QuotientMap;
use crate::set::ElementSet;
use crate::spectrum::{
    kernel_by_definition, kernel_by_intersection, kernel_by_products, negated_complement, subordinate,
    SubordinateFamily,
};

type Check = fn(&Scope<'_>, &mut Tally) -> Result<(), Failure>;

/// One executable claim: a hypothesis and conclusion iterated over a scope.
pub struct Statement {
    pub id: &'static str,
    pub variant: Option<Variant>,
    pub description: &'static str,
    /// Known gap in the claim as worded; a counterexample is reported but
    /// does not count as a failure.
    pub expected_counterexample: bool,
    /// Hits are split into the two proof cases of the join theorem.
    pub splits_cases: bool,
    check: Check,
}

impl Statement {
    /// Counts instances and hypothesis hits into `tally`, stopping at the
    /// first instance whose conclusion fails.
    pub fn check(&self, scope: &Scope<'_>, tally: &mut Tally) -> Result<(), Failure> {
        (self.check)(scope, tally)
    }

    /// `T-06` matches every variant of `T-06`; `T-07` matches all its clauses.
    pub fn matches(&self, pattern: &str) -> bool {
        let pattern = pattern.trim();
        if let Some((id, variant)) = pattern.split_once(':') {
            return self.matches(id) && self.variant.map(Variant::as_str) == Some(variant.trim());
        }
        self.id == pattern || (self.id.starts_with(pattern) && self.id[pattern.len()..].starts_with('('))
    }
}

impl core::fmt::Debug for Statement {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Statement").field("id", &self.id).field("variant", &self.variant).finish()
    }
}

const fn statement(id: &'static str, description: &'static str, check: Check) -> Statement {
    Statement { id, variant: None, description, expected_counterexample: false, splits_cases: false, check }
}

const fn stated(id: &'static str, description: &'static str, check: Check) -> Statement {
    Statement {
        id,
        variant: Some(Variant::PaperStated),
        description,
        expected_counterexample: true,
        splits_cases: false,
        check,
    }
}

const fn repaired(id: &'static str, description: &'static str, check: Check) -> Statement {
    Statement {
        id,
        variant: Some(Variant::Repaired),
        description,
        expected_counterexample: false,
        splits_cases: false,
        check,
    }
}

static REGISTRY: [Statement; 41] = [
    stated("T-00", "lattice filter F: the subordinates {F_a} are linearly ordered", t00_stated),
    repaired("T-00", "prime lattice filter F: the subordinates {F_a} are linearly ordered", t00_repaired),
    statement("T-01", "order filter F, a ∉ F: F_a is an order filter containing 1 but not a", t01),
    statement("T-02", "F_a is join-splitting if F is meet-closed, meet-closed if F is prime", t02),
    statement("T-03", "a ≤ b: F_b ⊆ F_a", t03),
    statement("T-04", "a, b ∉ F: F_{a∨b} ⊆ F_a ∩ F_b and F_a ∪ F_b ⊆ F_{a∧b}", t04),
    statement("T-05", "F ⊆ G order filters, a ∉ G: G_a ⊆ F_a", t05),
    stated("T-06", "order filter F, a ∉ F: (F_a)_a = F", t06_stated),
    repaired("T-06", "prime lattice filter F, a ∉ F: (F_a)_a = F", t06_repaired),
    stated("T-07(1)", "proper order filter F: F⁺ is a prime lattice filter", t07_1_stated),
    repaired("T-07(1)", "prime lattice filter F: F⁺ is a prime lattice filter", t07_1_repaired),
    statement("T-07(2)", "F ⊆ G order filters: G⁺ ⊆ F⁺", t07_2),
    statement("T-07(3)", "order filter F: F⁺⁺ = F", t07_3),
    statement("T-08", "F⁺ = (L∖F)*; the complement of a prime lattice filter is a prime ideal", t08),
    statement("T-09", "K(F) is an implication filter inside F, prime when F is prime", t09),
    statement("T-10", "implication filter F: K(F) = F", t10),
    statement("T-11", "K(F) = {z | ∀f∈F f⊗z ∈ F} = ⋂_{a∉F} F_a", t11),
    statement("T-12", "K([p,1]) = {q | q⊗p = p}", t12),
    statement("T-13", "linearly ordered L, p > 0: K([p,1]) = {1}", t13),
    statement("T-14", "η_P⁻¹[F/P] = F iff P ⊆ K(F)", t14),
    statement("T-15", "order filter F: K(F) = K(F⁺)", t15),
    statement("T-16", "a ≤ b: (F_b)^{≥a} = (F^{≥a})_b computed in [a,1]", t16),
    statement("T-17", "prime F, a ∉ F: K_{[a,1]}(F^{≥a}) = K(F)^{≥a}", t17),
    statement("T-18", "prime F, a ∉ F: K_{[a,1]}(F^{≥a}) = K_{[a,1]}(F_a^{≥a})", t18),
    statement("T-19", "prime F, a ∉ F: K(F) = K(F_a)", t19),
    statement("T-20", "prime F, K = K(F): (F/K)_{η(a)} = F_a/K", t20),
    statement("T-21", "prime F: F_a = η⁻¹[(F/K)_{η(a)}]; η(a) ≤ η(b) ⇒ F_b ⊆ F_a", t21),
    statement("T-22", "prime F: F_a = F_0 ⇒ η(a) = η(0)", t22),
    statement("T-23", "prime F, F_a ⊆ F_b: F_b = F_{a∧b} and F_a = F_{a∨b}", t23),
    statement("T-24", "prime F, a, b ∉ F: F_a ⊆ F_b ⇒ η(a) ≥ η(b), with equality for equal subordinates", t24),
    statement("T-25", "prime implication filter P: P_a = η⁻¹[(η(a), 1]] and {P_a} has |L/P| members", t25),
    statement("T-26", "implication filters P, Q: P ∨ Q = J(P, Q)", t26),
    statement("T-27", "P prime implication filter, J(F,P) proper: K(F) ⊆ K(J(F,P))", t27),
    statement("T-28", "η_Q⁻¹[K(F/Q)] = K(η_Q⁻¹[F/Q])", t28),
    Statement {
        id: "T-29",
        variant: None,
        description: "prime lattice F, prime implication P, J(F,P) ≠ L: K(J(F,P)) = K(F) ∨ P",
        expected_counterexample: false,
        splits_cases: true,
        check: t29,
    },
    statement("T-30", "under the join hypotheses, P' = P ∨ K(F): P'/P ⊆ K(F/P)", t30),
    statement("T-31", "under the join hypotheses: (L/P)/(P'/P) ≅ L/P' naturally, carrying F/P onto F/P'", t31),
    stated("T-32", "order filter F: F = ⋂_{m minimal prime} J(F, m)", t32_stated),
    repaired("T-32", "lattice filter F: F = ⋂_{m minimal prime} J(F, m)", t32_repaired),
    stated("T-33", "order filter F: K(F) = ⋂_{m minimal prime} K(J(F, m))", t33_stated),
    repaired("T-33", "lattice filter F: K(F) = ⋂_{m minimal prime} K(J(F, m))", t33_repaired),
];

/// Every statement in id order, paper-stated before repaired.
pub fn registry() -> &'static [Statement] {
    &REGISTRY
}

/// Statements matching any of `patterns` (all of them when empty), in
/// registry order. Unknown patterns are reported back.
pub fn select<S: AsRef<str>>(patterns: &[S]) -> Result<Vec<&'static Statement>, Error> {
    if patterns.is_empty() {
        return Ok(registry().iter().collect());
    }
    for p in patterns {
        if !registry().iter().any(|s| s.matches(p.as_ref())) {
            return Err(Error::InvalidArgument(format!("unknown statement id {:?}", p.as_ref())));
        }
    }
    Ok(registry().iter().filter(|s| patterns.iter().any(|p| s.matches(p.as_ref()))).collect())
}

fn quotient_for_kernel<'a>(scope: &Scope<'a>, f: &FilterInfo) -> Result<&'a QuotientMap, Failure> {
    scope.ctx.quotient_by(f.kernel()).ok_or_else(|| {
        Failure::Internal(Error::Inconsistent(format!(
            "kernel {} of {} is not an implication filter",
            scope.alg().format_set(f.kernel()),
            scope.alg().format_set(f.set())
        )))
    })
}

fn check_family_total(scope: &Scope<'_>, t: &mut Tally, hyp: fn(&FilterInfo) -> bool) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !hyp(f) {
            continue;
        }
        t.hit();
        let family = SubordinateFamily::new(alg, f.set());
        if family.is_total() {
            continue;
        }
        let k = family.len();
        for i in 0..k {
            for j in i + 1..k {
                if !family.includes(i, j) && !family.includes(j, i) {
                    let (mi, mj) = (&family.members()[i], &family.members()[j]);
                    return Err(scope
                        .witness()
                        .filter(alg, "F", f.set())
                        .element(alg, "a", mi.representative)
                        .element(alg, "b", mj.representative)
                        .filter(alg, "F_a", &mi.set)
                        .filter(alg, "F_b", &mj.set)
                        .note("F_a and F_b are incomparable")
                        .into());
                }
            }
        }
    }
    Ok(())
}

fn t00_stated(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_family_total(s, t, FilterInfo::is_lattice)
}

fn t00_repaired(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_family_total(s, t, FilterInfo::is_prime_lattice)
}

fn t01(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            t.instance();
            if !f.is_order() || f.contains(a) {
                continue;
            }
            t.hit();
            let fa = f.sub(a);
            let problem = if !scope.ctx.is_order_filter(fa) {
                "F_a is not an order filter"
            } else if fa.contains(a) {
                "a ∈ F_a"
            } else if !fa.contains(alg.top()) {
                "1 ∉ F_a"
            } else {
                continue;
            };
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .element(alg, "a", a)
                .filter(alg, "F_a", fa)
                .note(problem)
                .into());
        }
    }
    Ok(())
}

fn t02(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            t.instance();
            let outside = f.is_order() && !f.contains(a);
            let meet_closed = outside && f.class().meet_closed;
            let prime = outside && f.is_prime_lattice();
            if !meet_closed && !prime {
                continue;
            }
            t.hit();
            let fa = f.sub(a);
            let problem = if meet_closed && !is_join_splitting(alg, fa) {
                "F is meet-closed but F_a is not join-splitting"
            } else if prime && !is_meet_closed(alg, fa) {
                "F is prime but F_a is not meet-closed"
            } else {
                continue;
            };
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .element(alg, "a", a)
                .filter(alg, "F_a", fa)
                .note(problem)
                .into());
        }
    }
    Ok(())
}

fn t03(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            for b in scope.elements() {
                t.instance();
                if !f.is_order() || !alg.leq(a, b) {
                    continue;
                }
                t.hit();
                if !f.sub(b).is_subset(f.sub(a)) {
                    return Err(scope
                        .witness()
                        .filter(alg, "F", f.set())
                        .element(alg, "a", a)
                        .element(alg, "b", b)
                        .filter(alg, "F_a", f.sub(a))
                        .filter(alg, "F_b", f.sub(b))
                        .note("a ≤ b but F_b ⊄ F_a")
                        .into());
                }
            }
        }
    }
    Ok(())
}

fn t04(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            for b in scope.elements().filter(|&b| b <= a) {
                t.instance();
                if !f.is_order() || f.contains(a) || f.contains(b) {
                    continue;
                }
                t.hit();
                let (fa, fb) = (f.sub(a), f.sub(b));
                let up = f.sub(alg.join(a, b)).is_subset(&fa.intersection(fb));
                let down = fa.union(fb).is_subset(f.sub(alg.meet(a, b)));
                if !(up && down) {
                    return Err(scope
                        .witness()
                        .filter(alg, "F", f.set())
                        .element(alg, "a", a)
                        .element(alg, "b", b)
                        .note(if up { "F_a ∪ F_b ⊄ F_{a∧b}" } else { "F_{a∨b} ⊄ F_a ∩ F_b" })
                        .into());
                }
            }
        }
    }
    Ok(())
}

fn t05(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for g in scope.filters {
            for a in scope.elements() {
                t.instance();
                if !f.is_order() || !g.is_order() || !f.set().is_subset(g.set()) || g.contains(a) {
                    continue;
                }
                t.hit();
                if !g.sub(a).is_subset(f.sub(a)) {
                    return Err(scope
                        .witness()
                        .filter(alg, "F", f.set())
                        .filter(alg, "G", g.set())
                        .element(alg, "a", a)
                        .filter(alg, "F_a", f.sub(a))
                        .filter(alg, "G_a", g.sub(a))
                        .note("G_a ⊄ F_a")
                        .into());
                }
            }
        }
    }
    Ok(())
}

fn check_double_subordinate(scope: &Scope<'_>, t: &mut Tally, hyp: fn(&FilterInfo) -> bool) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            t.instance();
            if !hyp(f) || f.contains(a) {
                continue;
            }
            t.hit();
            let twice = subordinate(alg, f.sub(a), a);
            if &twice != f.set() {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .element(alg, "a", a)
                    .filter(alg, "F_a", f.sub(a))
                    .filter(alg, "(F_a)_a", &twice)
                    .note("(F_a)_a ≠ F")
                    .into());
            }
        }
    }
    Ok(())
}

fn t06_stated(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_double_subordinate(s, t, FilterInfo::is_order)
}

fn t06_repaired(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_double_subordinate(s, t, FilterInfo::is_prime_lattice)
}

fn check_plus_prime_lattice(scope: &Scope<'_>, t: &mut Tally, hyp: fn(&FilterInfo) -> bool) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !hyp(f) {
            continue;
        }
        t.hit();
        let c = classify(alg, f.plus());
        let problem = if !c.order_filter() {
            "F⁺ is not an order filter"
        } else if !c.meet_closed {
            "F⁺ is not meet-closed"
        } else if !c.prime {
            "F⁺ is not prime"
        } else {
            continue;
        };
        return Err(scope.witness().filter(alg, "F", f.set()).filter(alg, "F+", f.plus()).note(problem).into());
    }
    Ok(())
}

fn t07_1_stated(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_plus_prime_lattice(s, t, |f| f.is_order() && f.is_proper())
}

fn t07_1_repaired(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_plus_prime_lattice(s, t, FilterInfo::is_prime_lattice)
}

fn t07_2(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for g in scope.filters {
            t.instance();
            if !f.is_order() || !g.is_order() || !f.set().is_subset(g.set()) {
                continue;
            }
            t.hit();
            if !g.plus().is_subset(f.plus()) {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "G", g.set())
                    .filter(alg, "F+", f.plus())
                    .filter(alg, "G+", g.plus())
                    .note("G⁺ ⊄ F⁺")
                    .into());
            }
        }
    }
    Ok(())
}

fn t07_3(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !f.is_order() {
            continue;
        }
        t.hit();
        let twice = subordinate(alg, f.plus(), alg.bottom());
        if &twice != f.set() {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "F+", f.plus())
                .filter(alg, "F++", &twice)
                .note("F⁺⁺ ≠ F")
                .into());
        }
    }
    Ok(())
}

fn t08(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !f.is_order() {
            continue;
        }
        t.hit();
        let star = negated_complement(alg, f.set());
        if &star != f.plus() {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "F+", f.plus())
                .filter(alg, "(L∖F)*", &star)
                .note("F⁺ ≠ (L∖F)*")
                .into());
        }
        if f.is_prime_lattice() && !is_prime_ideal_complement(alg, f.set()) {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .note("F is a prime lattice filter but L∖F is not a prime ideal")
                .into());
        }
    }
    Ok(())
}

fn t09(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !f.is_order() {
            continue;
        }
        t.hit();
        let k = f.kernel();
        let c = classify(alg, k);
        let problem = if !c.implication_filter() {
            "K(F) is not an implication filter"
        } else if !k.is_subset(f.set()) {
            "K(F) ⊄ F"
        } else if f.is_prime_lattice() && !c.prime {
            "F is prime but K(F) is not"
        } else {
            continue;
        };
        return Err(scope.witness().filter(alg, "F", f.set()).filter(alg, "K(F)", k).note(problem).into());
    }
    Ok(())
}

fn t10(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !f.is_implication() {
            continue;
        }
        t.hit();
        if f.kernel() != f.set() {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "K(F)", f.kernel())
                .note("K(F) ≠ F")
                .into());
        }
    }
    Ok(())
}

fn t11(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !f.is_order() {
            continue;
        }
        t.hit();
        let by_def = kernel_by_definition(alg, f.set());
        let by_products = kernel_by_products(alg, f.set());
        let by_intersection = kernel_by_intersection(alg, f.set());
        if by_def != by_products || by_def != by_intersection {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "K(F)", &by_def)
                .filter(alg, "{z | F⊗z ⊆ F}", &by_products)
                .filter(alg, "⋂ F_a", &by_intersection)
                .note("kernel formulas disagree")
                .into());
        }
    }
    Ok(())
}

fn t12(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for p in scope.elements() {
        t.instance();
        t.hit();
        let f = principal_filter(alg, p);
        let k = kernel_by_definition(alg, &f);
        let stab = ElementSet::from_predicate(alg.size(), |q| alg.otimes(q, p) == p);
        if k != stab {
            return Err(scope
                .witness()
                .element(alg, "p", p)
                .filter(alg, "K([p,1])", &k)
                .filter(alg, "{q | q⊗p = p}", &stab)
                .note("K([p,1]) ≠ {q | q⊗p = p}")
                .into());
        }
    }
    Ok(())
}

fn t13(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for p in scope.elements() {
        t.instance();
        if !scope.ctx.is_chain() || p == alg.bottom() {
            continue;
        }
        t.hit();
        let k = kernel_by_definition(alg, &principal_filter(alg, p));
        if k != ElementSet::singleton(alg.size(), alg.top()) {
            return Err(scope
                .witness()
                .element(alg, "p", p)
                .filter(alg, "K([p,1])", &k)
                .note("K([p,1]) ≠ {1} in a chain")
                .into());
        }
    }
    Ok(())
}

/// Implication filter indices, descending by bit pattern.
fn implication_desc(scope: &Scope<'_>) -> core::iter::Rev<core::ops::Range<usize>> {
    (0..scope.ctx.implication_filters().len()).rev()
}

/// Prime implication filter indices, descending by bit pattern.
fn primes_desc<'a>(scope: &Scope<'a>) -> impl Iterator<Item = usize> + 'a {
    scope.ctx.prime_implication().iter().rev().copied()
}

fn t14(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for i in implication_desc(scope) {
            t.instance();
            if !f.is_order() {
                continue;
            }
            t.hit();
            let p = &scope.ctx.implication_filters()[i];
            let saturated = scope.ctx.quotient(i).saturate(f.set());
            let lhs = &saturated == f.set();
            let rhs = p.is_subset(f.kernel());
            if lhs != rhs {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "P", p)
                    .filter(alg, "J(F,P)", &saturated)
                    .filter(alg, "K(F)", f.kernel())
                    .note(if lhs { "J(F,P) = F but P ⊄ K(F)" } else { "P ⊆ K(F) but J(F,P) ≠ F" })
                    .into());
            }
        }
    }
    Ok(())
}

fn t15(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !f.is_order() {
            continue;
        }
        t.hit();
        let kp = kernel_by_definition(alg, f.plus());
        if &kp != f.kernel() {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "F+", f.plus())
                .filter(alg, "K(F)", f.kernel())
                .filter(alg, "K(F+)", &kp)
                .note("K(F) ≠ K(F⁺)")
                .into());
        }
    }
    Ok(())
}

fn t16(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for a in scope.elements() {
        let iv = scope.ctx.interval(a);
        for f in scope.filters {
            let local = iv.localize(f.set());
            for b in scope.elements() {
                t.instance();
                if !f.is_order() || !alg.leq(a, b) {
                    continue;
                }
                t.hit();
                let g = iv.localize(f.sub(b));
                let h = subordinate(iv.algebra(), &local, iv.from_parent(b).expect("b ≥ a"));
                if g != h {
                    return Err(scope
                        .witness()
                        .filter(alg, "F", f.set())
                        .element(alg, "a", a)
                        .element(alg, "b", b)
                        .filter(alg, "(F_b)^{≥a}", &iv.lift(&g))
                        .filter(alg, "(F^{≥a})_b", &iv.lift(&h))
                        .note("(F_b)^{≥a} ≠ (F^{≥a})_b")
                        .into());
                }
            }
        }
    }
    Ok(())
}

fn check_local_kernel(scope: &Scope<'_>, t: &mut Tally, against_subordinate: bool) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            t.instance();
            if !f.is_prime_lattice() || f.contains(a) {
                continue;
            }
            t.hit();
            let iv = scope.ctx.interval(a);
            let lhs = kernel_by_definition(iv.algebra(), &iv.localize(f.set()));
            let (rhs, name) = if against_subordinate {
                (kernel_by_definition(iv.algebra(), &iv.localize(f.sub(a))), "K_[a,1](F_a^{≥a})")
            } else {
                (iv.localize(f.kernel()), "K(F)^{≥a}")
            };
            if lhs != rhs {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .element(alg, "a", a)
                    .filter(alg, "K_[a,1](F^{≥a})", &iv.lift(&lhs))
                    .filter(alg, name, &iv.lift(&rhs))
                    .note(format!("K_[a,1](F^{{≥a}}) ≠ {name}"))
                    .into());
            }
        }
    }
    Ok(())
}

fn t17(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_local_kernel(s, t, false)
}

fn t18(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_local_kernel(s, t, true)
}

fn t19(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            t.instance();
            if !f.is_prime_lattice() || f.contains(a) {
                continue;
            }
            t.hit();
            let ka = kernel_by_definition(alg, f.sub(a));
            if &ka != f.kernel() {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .element(alg, "a", a)
                    .filter(alg, "K(F)", f.kernel())
                    .filter(alg, "K(F_a)", &ka)
                    .note("K(F) ≠ K(F_a)")
                    .into());
            }
        }
    }
    Ok(())
}

/// Subordinates of `F/K` at every class of `L/K`.
fn quotient_subordinates(qm: &QuotientMap, f: &FilterInfo) -> (ElementSet, Vec<ElementSet>) {
    let lq = qm.quotient();
    let fq = qm.image(f.set());
    let subs = lq.elements().map(|c| subordinate(lq, &fq, c)).collect();
    (fq, subs)
}

fn t20(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        if !f.is_prime_lattice() {
            t.instances += alg.size() as u64;
            continue;
        }
        let qm = quotient_for_kernel(scope, f)?;
        let (_, qsubs) = quotient_subordinates(qm, f);
        for a in scope.elements() {
            t.instance();
            t.hit();
            let rhs = qm.image(f.sub(a));
            if qsubs[qm.class_of(a)] != rhs {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "K", f.kernel())
                    .element(alg, "a", a)
                    .filter(alg, "η⁻¹[(F/K)_η(a)]", &qm.preimage(&qsubs[qm.class_of(a)]))
                    .filter(alg, "η⁻¹[F_a/K]", &qm.preimage(&rhs))
                    .note("(F/K)_η(a) ≠ F_a/K")
                    .into());
            }
        }
    }
    Ok(())
}

fn t21(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        if !f.is_prime_lattice() {
            t.instances += (alg.size() * alg.size()) as u64;
            continue;
        }
        let qm = quotient_for_kernel(scope, f)?;
        let lq = qm.quotient();
        let (_, qsubs) = quotient_subordinates(qm, f);
        for a in scope.elements() {
            let pre = qm.preimage(&qsubs[qm.class_of(a)]);
            if &pre != f.sub(a) {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "K", f.kernel())
                    .element(alg, "a", a)
                    .filter(alg, "F_a", f.sub(a))
                    .filter(alg, "η⁻¹[(F/K)_η(a)]", &pre)
                    .note("F_a ≠ η⁻¹[(F/K)_η(a)]")
                    .into());
            }
            for b in scope.elements() {
                t.instance();
                t.hit();
                let (ea, eb) = (qm.class_of(a), qm.class_of(b));
                let problem = if lq.leq(ea, eb) && !f.sub(b).is_subset(f.sub(a)) {
                    "η(a) ≤ η(b) but F_b ⊄ F_a"
                } else if ea == eb && f.sub(a) != f.sub(b) {
                    "η(a) = η(b) but F_a ≠ F_b"
                } else {
                    continue;
                };
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "K", f.kernel())
                    .element(alg, "a", a)
                    .element(alg, "b", b)
                    .note(problem)
                    .into());
            }
        }
    }
    Ok(())
}

fn t22(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        if !f.is_prime_lattice() {
            t.instances += alg.size() as u64;
            continue;
        }
        let qm = quotient_for_kernel(scope, f)?;
        for a in scope.elements() {
            t.instance();
            if f.sub(a) != f.plus() {
                continue;
            }
            t.hit();
            if qm.class_of(a) != qm.class_of(alg.bottom()) {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "K", f.kernel())
                    .element(alg, "a", a)
                    .note("F_a = F_0 but η(a) ≠ η(0)")
                    .into());
            }
        }
    }
    Ok(())
}

fn t23(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for a in scope.elements() {
            for b in scope.elements() {
                t.instance();
                if !f.is_prime_lattice() || !f.sub(a).is_subset(f.sub(b)) {
                    continue;
                }
                t.hit();
                let problem = if f.sub(b) != f.sub(alg.meet(a, b)) {
                    "F_b ≠ F_{a∧b}"
                } else if f.sub(a) != f.sub(alg.join(a, b)) {
                    "F_a ≠ F_{a∨b}"
                } else {
                    continue;
                };
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .element(alg, "a", a)
                    .element(alg, "b", b)
                    .note(problem)
                    .into());
            }
        }
    }
    Ok(())
}

fn t24(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        if !f.is_prime_lattice() {
            t.instances += (alg.size() * alg.size()) as u64;
            continue;
        }
        let qm = quotient_for_kernel(scope, f)?;
        let lq = qm.quotient();
        for a in scope.elements() {
            for b in scope.elements() {
                t.instance();
                if f.contains(a) || f.contains(b) || !f.sub(a).is_subset(f.sub(b)) {
                    continue;
                }
                t.hit();
                let (ea, eb) = (qm.class_of(a), qm.class_of(b));
                let problem = if f.sub(a) == f.sub(b) && ea != eb {
                    "F_a = F_b but η(a) ≠ η(b)"
                } else if !lq.leq(eb, ea) {
                    "F_a ⊆ F_b but η(a) ≱ η(b)"
                } else {
                    continue;
                };
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "K", f.kernel())
                    .element(alg, "a", a)
                    .element(alg, "b", b)
                    .filter(alg, "F_a", f.sub(a))
                    .filter(alg, "F_b", f.sub(b))
                    .note(problem)
                    .into());
            }
        }
    }
    Ok(())
}

fn t25(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for i in primes_desc(scope) {
        t.instance();
        t.hit();
        let p = &scope.ctx.implication_filters()[i];
        let qm = scope.ctx.quotient(i);
        let lq = qm.quotient();
        for a in scope.elements().filter(|&a| !p.contains(a)) {
            let ea = qm.class_of(a);
            let above = ElementSet::from_predicate(lq.size(), |c| c != ea && lq.leq(ea, c));
            let pa = subordinate(alg, p, a);
            let pre = qm.preimage(&above);
            if pa != pre {
                return Err(scope
                    .witness()
                    .filter(alg, "P", p)
                    .element(alg, "a", a)
                    .filter(alg, "P_a", &pa)
                    .filter(alg, "η⁻¹[(η(a), 1]]", &pre)
                    .note("P_a ≠ η⁻¹[(η(a), 1]]")
                    .into());
            }
        }
        let family = SubordinateFamily::new(alg, p);
        if family.len() != lq.size() {
            return Err(scope
                .witness()
                .filter(alg, "P", p)
                .note(format!("{} distinct subordinates but |L/P| = {}", family.len(), lq.size()))
                .into());
        }
    }
    Ok(())
}

fn t26(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    let filters = scope.ctx.implication_filters();
    for i in implication_desc(scope) {
        for j in implication_desc(scope) {
            t.instance();
            t.hit();
            let joined = implication_filter_generated(alg, &filters[i].union(&filters[j]));
            let saturated = scope.ctx.quotient(j).saturate(&filters[i]);
            if joined != saturated {
                return Err(scope
                    .witness()
                    .filter(alg, "P", &filters[i])
                    .filter(alg, "Q", &filters[j])
                    .filter(alg, "P∨Q", &joined)
                    .filter(alg, "J(P,Q)", &saturated)
                    .note("P ∨ Q ≠ J(P, Q)")
                    .into());
            }
        }
    }
    Ok(())
}

fn t27(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for i in primes_desc(scope) {
            t.instance();
            if !f.is_order() {
                continue;
            }
            let j = scope.ctx.quotient(i).saturate(f.set());
            if j.is_full() {
                continue;
            }
            t.hit();
            let kj = kernel_by_definition(alg, &j);
            if !f.kernel().is_subset(&kj) {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "P", &scope.ctx.implication_filters()[i])
                    .filter(alg, "K(F)", f.kernel())
                    .filter(alg, "K(J(F,P))", &kj)
                    .note("K(F) ⊄ K(J(F,P))")
                    .into());
            }
        }
    }
    Ok(())
}

fn t28(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for i in implication_desc(scope) {
            t.instance();
            if !f.is_order() {
                continue;
            }
            t.hit();
            let qm = scope.ctx.quotient(i);
            let lhs = qm.preimage(&kernel_by_definition(qm.quotient(), &qm.image(f.set())));
            let rhs = kernel_by_definition(alg, &qm.saturate(f.set()));
            if lhs != rhs {
                return Err(scope
                    .witness()
                    .filter(alg, "F", f.set())
                    .filter(alg, "Q", &scope.ctx.implication_filters()[i])
                    .filter(alg, "η⁻¹[K(F/Q)]", &lhs)
                    .filter(alg, "K(η⁻¹[F/Q])", &rhs)
                    .note("η_Q⁻¹[K(F/Q)] ≠ K(η_Q⁻¹[F/Q])")
                    .into());
            }
        }
    }
    Ok(())
}

/// Instances of the join theorem's hypotheses: prime lattice `F`, prime
/// implication `P` (by index) and `J(F,P) ≠ L`, with `P' = P ∨ K(F)`.
fn for_join_hypotheses<'a>(
    scope: &Scope<'a>,
    t: &mut Tally,
    mut body: impl FnMut(&FilterInfo, usize, &ElementSet, &ElementSet) -> Result<(), Failure>,
) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        for i in primes_desc(scope) {
            t.instance();
            if !f.is_prime_lattice() {
                continue;
            }
            let j = scope.ctx.quotient(i).saturate(f.set());
            if j.is_full() {
                continue;
            }
            t.hit();
            let p = &scope.ctx.implication_filters()[i];
            if p.is_subset(f.kernel()) {
                t.cases.case1 += 1;
            } else {
                t.cases.case2 += 1;
            }
            let p_prime = implication_filter_generated(alg, &p.union(f.kernel()));
            body(f, i, &j, &p_prime)?;
        }
    }
    Ok(())
}

fn t29(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for_join_hypotheses(scope, t, |f, i, j, p_prime| {
        let kj = kernel_by_definition(alg, j);
        if &kj != p_prime {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "P", &scope.ctx.implication_filters()[i])
                .filter(alg, "K(J(F,P))", &kj)
                .filter(alg, "K(F)∨P", p_prime)
                .note("K(J(F,P)) ≠ K(F) ∨ P")
                .into());
        }
        Ok(())
    })
}

fn t30(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for_join_hypotheses(scope, t, |f, i, _, p_prime| {
        let qm = scope.ctx.quotient(i);
        let lhs = qm.image(p_prime);
        let rhs = kernel_by_definition(qm.quotient(), &qm.image(f.set()));
        if !lhs.is_subset(&rhs) {
            return Err(scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "P", &scope.ctx.implication_filters()[i])
                .filter(alg, "P'", p_prime)
                .filter(alg, "η⁻¹[K(F/P)]", &qm.preimage(&rhs))
                .note("P'/P ⊄ K(F/P)")
                .into());
        }
        Ok(())
    })
}

fn t31(scope: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    let alg = scope.alg();
    for_join_hypotheses(scope, t, |f, i, _, p_prime| {
        let fail = |note: &str| -> Failure {
            scope
                .witness()
                .filter(alg, "F", f.set())
                .filter(alg, "P", &scope.ctx.implication_filters()[i])
                .filter(alg, "P'", p_prime)
                .note(note)
                .into()
        };
        let q_p = scope.ctx.quotient(i);
        let lp = q_p.quotient();
        let Ok(second) = QuotientMap::new(lp, &q_p.image(p_prime)) else {
            return Err(fail("P'/P is not an implication filter of L/P"));
        };
        let q_pp = scope.ctx.quotient_by(p_prime).ok_or_else(|| {
            Failure::Internal(Error::Inconsistent(format!(
                "generated filter {} is not an implication filter",
                alg.format_set(p_prime)
            )))
        })?;
        let (twice, once) = (second.quotient(), q_pp.quotient());
        if find_isomorphism(twice, once).is_none() {
            return Err(fail("(L/P)/(P'/P) and L/P' are not isomorphic"));
        }
        let psi: Vec<usize> =
            twice.elements().map(|c| q_pp.class_of(q_p.representative(second.representative(c)))).collect();
        let natural = alg.elements().all(|x| psi[second.class_of(q_p.class_of(x))] == q_pp.class_of(x));
        if !natural || !is_isomorphism(twice, once, &psi) {
            return Err(fail("the natural map (L/P)/(P'/P) → L/P' is not an isomorphism"));
        }
        let carried = second.image(&q_p.image(f.set())).map(once.size(), |c| psi[c]);
        if carried != q_pp.image(f.set()) {
            return Err(fail("the natural isomorphism does not carry F/P onto F/P'"));
        }
        Ok(())
    })
}

fn check_minimal_prime_meet(
    scope: &Scope<'_>,
    t: &mut Tally,
    hyp: fn(&FilterInfo) -> bool,
    kernels: bool,
) -> Result<(), Failure> {
    let alg = scope.alg();
    for f in scope.filters {
        t.instance();
        if !hyp(f) {
            continue;
        }
        t.hit();
        let mut meet = ElementSet::full(alg.size());
        for &m in scope.ctx.minimal_primes() {
            let j = scope.ctx.quotient(m).saturate(f.set());
            meet = meet.intersection(&if kernels { kernel_by_definition(alg, &j) } else { j });
        }
        let (target, name) = if kernels { (f.kernel(), "K(F)") } else { (f.set(), "F") };
        if &meet != target {
            let mut w = scope.witness().filter(alg, "F", f.set());
            if kernels {
                w = w.filter(alg, "K(F)", f.kernel()).filter(alg, "⋂ K(J(F,m))", &meet);
            } else {
                w = w.filter(alg, "⋂ J(F,m)", &meet);
            }
            return Err(w.note(format!("intersection over minimal primes ≠ {name}")).into());
        }
    }
    Ok(())
}

fn t32_stated(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_minimal_prime_meet(s, t, FilterInfo::is_order, false)
}

fn t32_repaired(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_minimal_prime_meet(s, t, FilterInfo::is_lattice, false)
}

fn t33_stated(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_minimal_prime_meet(s, t, FilterInfo::is_order, true)
}

fn t33_repaired(s: &Scope<'_>, t: &mut Tally) -> Result<(), Failure> {
    check_minimal_prime_meet(s, t, FilterInfo::is_lattice, true)
}
