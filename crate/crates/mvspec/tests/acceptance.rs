//! Acceptance criteria A1 to A10, one PASS/FAIL line each.

mod common;

use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{expected_position, fixture, fixtures, malformed_fixtures, mvspec};
use mvspec::dsl::{algebra_from_expr, load, serialize_algebra};
use mvspec::runner::{run_theorems, thread_count, RunOptions};
use mvspec_core::filters::{
    classify, enumerate_implication_filters, enumerate_order_filters, DEFAULT_UPSET_BUDGET,
};
use mvspec_core::harness::{
    default_suite_algebras, run_all, select, ProductOfChains, Status, StatementReport, Suite, SuiteConfig, Witness,
};
use mvspec_core::spectrum::{kernel_by_definition, kernel_by_intersection, kernel_by_products, plus, subordinate};
use mvspec_core::{Algebra, ElementSet, QuotientMap, SubordinateFamily};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t <= limit, || format!("{what} took {t:.2?}, limit {limit:?}"))
}

fn chain(k: usize) -> Algebra {
    Algebra::chain(k).unwrap()
}

fn a1_axioms() -> Result<String, String> {
    let start = Instant::now();
    let mut checked = 0;
    for a in (2..=7).map(chain).chain(default_suite_algebras()) {
        let v = a.check_axioms();
        ensure(v.is_empty(), || format!("{:?}: {}", a.label(), v[0]))?;
        checked += 1;
    }
    let c3 = chain(3);
    let (oplus, neg) = (c3.oplus_table().to_vec(), c3.neg_table().to_vec());
    let mut mutants = 0;
    let mut detected = 0;
    for i in 0..oplus.len() + neg.len() {
        for v in 0..3 {
            let (mut o, mut n) = (oplus.clone(), neg.clone());
            let slot = if i < o.len() { &mut o[i] } else { &mut n[i - oplus.len()] };
            if *slot == v {
                continue;
            }
            *slot = v;
            mutants += 1;
            let m = Algebra::from_tables_unchecked(3, o, n).map_err(|e| e.to_string())?;
            if !m.check_axioms().is_empty() {
                detected += 1;
            }
        }
    }
    ensure(mutants == 24 && detected == mutants, || format!("{detected}/{mutants} mutants detected"))?;
    within(start, Duration::from_secs(1), "A1")?;
    Ok(format!("{checked} algebras satisfy the axioms; {detected}/{mutants} single-entry mutants of chain 3 rejected"))
}

fn a2_counts() -> Result<String, String> {
    let order = |a: &Algebra| enumerate_order_filters(a, DEFAULT_UPSET_BUDGET).map(|v| v.len()).map_err(|e| e.to_string());
    for k in 2..=6 {
        let n = order(&chain(k))?;
        ensure(n == k, || format!("chain {k} has {n} order filters"))?;
    }
    let b4 = Algebra::product(&[chain(2), chain(2)]).unwrap();
    let (o, i, c) = (order(&b4)?, enumerate_implication_filters(&b4).len(), enumerate_implication_filters(&chain(3)).len());
    ensure((o, i, c) == (5, 4, 2), || format!("2×2: {o} order, {i} implication; chain 3: {c} implication"))?;
    Ok("chain k: k order filters (k = 2..6); 2×2: 5 order, 4 implication; chain 3: 2 implication".into())
}

fn a3_kernels() -> Result<String, String> {
    let start = Instant::now();
    let mut filters = 0;
    for a in default_suite_algebras() {
        for f in enumerate_order_filters(&a, DEFAULT_UPSET_BUDGET).map_err(|e| e.to_string())? {
            let d = kernel_by_definition(&a, &f);
            let p = kernel_by_products(&a, &f);
            let i = kernel_by_intersection(&a, &f);
            ensure(d == p && p == i, || format!("{:?} F={}: kernels disagree", a.label(), a.format_set(&f)))?;
            filters += 1;
        }
    }
    within(start, Duration::from_secs(10), "A3")?;
    Ok(format!("three kernel computations agree on all {filters} order filters of the suite"))
}

fn default_reports() -> Result<(Vec<StatementReport>, Duration), String> {
    let start = Instant::now();
    let suite = Suite::build(&SuiteConfig::default()).map_err(|e| e.to_string())?;
    let stmts = select::<&str>(&[]).map_err(|e| e.to_string())?;
    let reports = run_all(&stmts, &suite).map_err(|e| e.to_string())?;
    Ok((reports, start.elapsed()))
}

fn a4_registry() -> Result<String, String> {
    let (reports, t) = default_reports()?;
    let mut green = 0;
    for r in reports.iter().filter(|r| !r.expected_counterexample) {
        ensure(r.status == Status::Verified && r.hypothesis_hits > 0, || {
            format!("{} is {} with {} hits", r.display_id(), r.status, r.hypothesis_hits)
        })?;
        green += 1;
    }
    for id in ["T-06", "T-07(1)"] {
        let repaired = reports.iter().find(|r| r.id == id && r.variant.is_some_and(|v| v.as_str() == "repaired"));
        ensure(repaired.is_some_and(|r| r.status == Status::Verified), || format!("{id} repaired not verified"))?;
    }
    ensure(t <= Duration::from_secs(60), || format!("full run took {t:.2?}"))?;
    Ok(format!("{green} statements verified with hypothesis hits in {:.2?}", t))
}

fn set_by_names(alg: &Algebra, names: &[String]) -> Result<ElementSet, String> {
    let mut s = ElementSet::empty(alg.size());
    for n in names {
        let x = alg.elements().find(|&x| alg.name(x) == n).ok_or_else(|| format!("no element {n}"))?;
        s.insert(x);
    }
    Ok(s)
}

fn witness_of<'a>(reports: &'a [StatementReport], id: &str) -> Result<&'a Witness, String> {
    reports
        .iter()
        .find(|r| r.id == id && r.expected_counterexample)
        .and_then(|r| r.witness.as_ref())
        .ok_or_else(|| format!("no paper-stated witness for {id}"))
}

fn names(w: &Witness, filter: &str) -> Result<Vec<String>, String> {
    w.find_filter(filter).map(|f| f.names.clone()).ok_or_else(|| format!("witness lacks {filter}"))
}

fn a5_discrepancies() -> Result<String, String> {
    let (reports, _) = default_reports()?;

    let w = witness_of(&reports, "T-06")?;
    ensure(w.algebra == "product(chain 2, chain 2)", || format!("T-06 witness in {}", w.algebra))?;
    ensure(names(w, "F")? == ["(1,1)"], || "T-06 F".into())?;
    let a_name = &w.find_element("a").ok_or("no a")?.display;
    ensure(a_name == "(1,0)", || format!("T-06 a = {a_name}"))?;
    ensure(names(w, "(F_a)_a")? == ["(0,1)", "(1,1)"], || "T-06 (F_a)_a".into())?;
    // replay from the label alone
    let alg = algebra_from_expr(&w.algebra).map_err(|e| e.to_string())?;
    let f = set_by_names(&alg, &names(w, "F")?)?;
    let a = alg.elements().find(|&x| alg.name(x) == a_name).unwrap();
    let ffa = subordinate(&alg, &subordinate(&alg, &f, a), a);
    ensure(ffa == set_by_names(&alg, &names(w, "(F_a)_a")?)? && ffa != f, || "T-06 replay".into())?;

    let w = witness_of(&reports, "T-07(1)")?;
    let mut fnames = names(w, "F")?;
    fnames.sort();
    ensure(fnames == ["(0,1)", "(1,0)", "(1,1)"], || format!("T-07(1) F = {fnames:?}"))?;
    ensure(names(w, "F+")? == ["(1,1)"], || "T-07(1) F+".into())?;
    let alg = algebra_from_expr(&w.algebra).map_err(|e| e.to_string())?;
    let f = set_by_names(&alg, &fnames)?;
    let p = plus(&alg, &f).map_err(|e| e.to_string())?;
    ensure(p == set_by_names(&alg, &names(w, "F+")?)? && !classify(&alg, &p).prime, || "T-07(1) replay".into())?;

    Ok("T-06: F={(1,1)}, a=(1,0), (F_a)_a={(0,1),(1,1)}; T-07(1): F={(0,1),(1,0),(1,1)}, F+={(1,1)} not prime; both replayed".into())
}

fn a6_vacuity() -> Result<String, String> {
    let (reports, _) = default_reports()?;
    let r = reports.iter().find(|r| r.id == "T-29").ok_or("no T-29")?;
    let c = r.cases.ok_or("T-29 has no case split")?;
    ensure(c.case1 + c.case2 == r.hypothesis_hits, || "cases do not partition the hits".into())?;
    ensure(c.case2 == 0 && c.case2_vacuous(), || format!("case 2 = {}", c.case2))?;
    let json = mvspec::report::report_json(&Default::default(), std::slice::from_ref(r));
    ensure(json.contains("\"case2_vacuous\": true"), || "flag missing from JSON".into())?;
    Ok(format!("T-29: case 1 = {}, case 2 = 0, flagged as a vacuous sub-case", c.case1))
}

fn a7_correspondence() -> Result<String, String> {
    let mut primes = 0;
    for a in default_suite_algebras() {
        for f in enumerate_order_filters(&a, DEFAULT_UPSET_BUDGET).map_err(|e| e.to_string())? {
            let c = classify(&a, &f);
            if !(c.lattice_filter() && c.prime) {
                continue;
            }
            primes += 1;
            let family = SubordinateFamily::new(&a, &f);
            let k = kernel_by_definition(&a, &f);
            let q = QuotientMap::new(&a, &k).map_err(|e| e.to_string())?;
            let mut classes: Vec<usize> = f.complement().iter().map(|x| q.class_of(x)).collect();
            classes.sort_unstable();
            classes.dedup();
            let nonempty = family.nonempty_members().count();
            ensure(nonempty == classes.len() && family.is_total(), || {
                format!("{:?} F={}: {} members, {} classes", a.label(), a.format_set(&f), nonempty, classes.len())
            })?;
            ensure(family.len() == nonempty + 1, || "the empty member is missing".into())?;
        }
    }
    ensure(primes > 0, || "no prime lattice filters in the suite".into())?;
    Ok(format!("{primes} prime lattice filters: nonempty subordinates match classes η(a), a ∉ F, and are totally ordered"))
}

fn a8_determinism() -> Result<String, String> {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let p = dir.path().join(format!("run{i}.json"));
        let o = mvspec(&["theorems", "--samples", "1000", "--seed", "42", "--json", p.to_str().unwrap()]);
        ensure(o.status.code() == Some(0), || format!("theorems exited {:?}", o.status.code()))?;
        outputs.push((std::fs::read(&p).map_err(|e| e.to_string())?, o.stdout));
    }
    ensure(outputs[0] == outputs[1], || "theorems output differs between runs".into())?;

    let mut dots = Vec::new();
    for _ in 0..2 {
        let hasse = mvspec(&["render", "valid/grammar.mv", "--algebra", "C", "--filter", "K"]);
        let fam = dir.path().join("fam.dot");
        mvspec(&["spectrum", "valid/grammar.mv", "--filter", "H", "--dot", fam.to_str().unwrap()]);
        dots.push((hasse.stdout, std::fs::read(&fam).map_err(|e| e.to_string())?));
    }
    ensure(dots[0] == dots[1] && !dots[0].0.is_empty(), || "DOT output differs between runs".into())?;
    Ok(format!("two 1000-sample runs gave identical JSON ({} bytes); DOT output identical", outputs[0].0.len()))
}

fn a9_dsl() -> Result<String, String> {
    let env = load(&fixture("golden/suite_tables.mv")).map_err(|e| e.to_string())?;
    let suite = default_suite_algebras();
    ensure(env.algebras().len() == suite.len(), || "golden file size".into())?;
    for ((name, parsed), original) in env.algebras().iter().zip(&suite) {
        let again = load(&format!("algebra X = {}", serialize_algebra(parsed))).map_err(|e| e.to_string())?;
        let x = again.algebra("X").unwrap();
        ensure(parsed == original && x == original, || format!("{name} does not round trip"))?;
    }
    let cases = malformed_fixtures();
    ensure(cases.len() >= 10, || format!("only {} malformed fixtures", cases.len()))?;
    for (name, text) in &cases {
        let (line, column) = expected_position(text);
        let o = mvspec(&["check", fixtures().join("malformed").join(name).to_str().unwrap()]);
        let err = String::from_utf8_lossy(&o.stderr);
        ensure(o.status.code() == Some(2) && err.contains(&format!("line {line}, column {column}:")), || {
            format!("{name}: exit {:?}, {err}", o.status.code())
        })?;
    }
    Ok(format!("{} suite algebras round trip; {} malformed fixtures exit 2 with line/column", suite.len(), cases.len()))
}

fn a10_random() -> Result<String, String> {
    let stmts = select::<&str>(&[]).map_err(|e| e.to_string())?;
    let empty = Suite::build(&SuiteConfig::with_algebras(Vec::new())).map_err(|e| e.to_string())?;
    let opts = RunOptions {
        samples: 10_000,
        seed: 42,
        generator: ProductOfChains::default(),
        threads: thread_count()?,
        timings: false,
    };
    let start = Instant::now();
    let reports = run_theorems(&stmts, &empty, &opts).map_err(|e| e.to_string())?;
    for r in &reports {
        if r.expected_counterexample {
            continue;
        }
        ensure(r.witness.is_none(), || format!("{}: {:?}", r.display_id(), r.witness))?;
        ensure(r.samples == 10_000, || format!("{} saw {} samples", r.display_id(), r.samples))?;
    }
    let t06 = reports.iter().find(|r| r.id == "T-06" && r.expected_counterexample).unwrap();
    let at = t06.witness.as_ref().and_then(|w| w.sample).ok_or("no T-06 witness")?;
    ensure(at < 1000, || format!("T-06 witness only at sample {at}"))?;
    Ok(format!(
        "10000 samples (seed 42, size ≤ 64): no counterexample to green statements; T-06 witness at sample {at}; {:.1?}",
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("A1", a1_axioms),
        ("A2", a2_counts),
        ("A3", a3_kernels),
        ("A4", a4_registry),
        ("A5", a5_discrepancies),
        ("A6", a6_vacuity),
        ("A7", a7_correspondence),
        ("A8", a8_determinism),
        ("A9", a9_dsl),
        ("A10", a10_random),
    ];
    let mut failed = 0;
    for (id, check) in criteria {
        let result = panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("{id:<3} PASS  {detail}"),
            Err(why) => {
                failed += 1;
                println!("{id:<3} FAIL  {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
