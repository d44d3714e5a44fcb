mod common;

use std::fs;

use common::{expected_position, golden, malformed_fixtures, mvspec, mvspec_env, stderr, stdout};

fn code(o: &std::process::Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn check_exit_codes() {
    let ok = mvspec(&["check", "valid/grammar.mv"]);
    assert_eq!(code(&ok), 0, "{}", stderr(&ok));
    assert!(stdout(&ok).contains("Corner: ok, 4 elements"));

    let only = mvspec(&["check", "valid/grammar.mv", "--algebra", "Q"]);
    assert_eq!(stdout(&only), "Q: ok, 3 elements\n");

    let broken = mvspec(&["check", "valid/broken_negation.mv"]);
    assert_eq!(code(&broken), 1);
    let err = stderr(&broken);
    assert!(err.contains("line 3, column 15"), "{err}");
    assert!(err.contains("¬¬x = x fails at x=1"), "{err}");

    assert_eq!(code(&mvspec(&["check", "valid/grammar.mv", "--algebra", "Nope"])), 2);
    assert_eq!(code(&mvspec(&["check", "no/such/file.mv"])), 2);
    assert_eq!(code(&mvspec(&["check"])), 2);
    assert_eq!(code(&mvspec(&["frobnicate"])), 2);
}

#[test]
fn malformed_files_exit_2_with_position() {
    for (name, text) in malformed_fixtures() {
        let (line, column) = expected_position(&text);
        let o = mvspec(&["check", &format!("malformed/{name}")]);
        assert_eq!(code(&o), 2, "{name}");
        let err = stderr(&o);
        assert!(err.contains(&format!("line {line}, column {column}:")), "{name}: {err}");
    }
}

#[test]
fn spectrum_of_the_top_filter_of_chain_3() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("family.dot");
    let o = mvspec(&["spectrum", "valid/grammar.mv", "--algebra", "L3", "--filter", "F", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("K(F) = {2}\n"));
    assert!(out.contains("F+ = {1, 2}\n"));
    assert!(out.contains("subordinate family: 3 distinct, totally ordered\n"));
    golden("spectrum_chain3.txt", &out);
    golden("family_chain3.dot", &fs::read_to_string(dot).unwrap());
}

#[test]
fn spectrum_edge_cases() {
    let all = mvspec(&["spectrum", "valid/grammar.mv", "--filter", "All"]);
    assert_eq!(code(&all), 0);
    let out = stdout(&all);
    assert!(out.contains("K(F) = {0, 1, 2}\n"));
    assert!(out.contains("subordinate family: 1 distinct"));
    assert!(out.contains("F_0 = ∅"));

    let up = mvspec(&["spectrum", "valid/grammar.mv", "--filter", "Up"]);
    assert_eq!(code(&up), 1);
    assert!(stderr(&up).contains("not upward closed"));

    let wrong = mvspec(&["spectrum", "valid/grammar.mv", "--algebra", "B", "--filter", "F"]);
    assert_eq!(code(&wrong), 2);
}

#[test]
fn list_filters() {
    let o = mvspec(&["list-filters", "valid/grammar.mv", "--algebra", "B", "--kind", "implication"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with('{')).count(), 4);
    golden("list_b4_implication.txt", &out);

    let o = mvspec(&["list-filters", "valid/grammar.mv", "--algebra", "L3", "--kind", "order"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('{')).count(), 3);

    let o = mvspec(&["list-filters", "valid/grammar.mv", "--algebra", "L3", "--kind", "implication", "--prime"]);
    assert_eq!(stdout(&o), "{2}  implication filter, prime\n1 prime implication filter(s) of L3\n");

    let o = mvspec(&["list-filters", "valid/grammar.mv", "--algebra", "B", "--budget", "2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn render() {
    let c3 = mvspec(&["render", "valid/grammar.mv", "--algebra", "L3"]);
    assert_eq!(code(&c3), 0);
    golden("hasse_chain3.dot", &stdout(&c3));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b4.dot");
    let b4 = mvspec(&["render", "valid/grammar.mv", "--algebra", "B", "--filter", "H", "--dot", path.to_str().unwrap()]);
    assert_eq!(code(&b4), 0);
    assert!(stdout(&b4).is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches(" -> ").count(), 4);
    assert_eq!(text.matches("fillcolor").count(), 3);
    golden("hasse_b4.dot", &text);

    let again = mvspec(&["render", "valid/grammar.mv", "--algebra", "B", "--filter", "H"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn theorems_single_statement() {
    let o = mvspec(&["theorems", "--only", "T-11"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("T-11"));
    assert!(out.contains("verified"));
    assert!(out.contains("summary: verified 1, counterexamples 0 (0 unexpected), vacuous 0"));
}

#[test]
fn theorems_expected_gap_still_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("t06.json");
    let o = mvspec(&["theorems", "--only", "T-06", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("T-06 [paper-stated]  counterexample (expected)"));
    assert!(out.contains("T-06 [repaired]      verified"));
    golden("theorems_t06.txt", &out);
    let text = fs::read_to_string(&json).unwrap();
    golden("theorems_t06.json", &text);

    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let w = &v["statements"][0]["witness"];
    assert_eq!(w["algebra"], "product(chain 2, chain 2)");
    assert_eq!(v["summary"]["counterexamples"], 1);
    assert!(v["statements"][1]["witness"].is_null());
    assert!(v["statements"][0]["elapsed_ms"].is_null());
}

#[test]
fn theorems_on_a_file_suite() {
    let o = mvspec(&["theorems", "valid/grammar.mv", "--only", "T-06:paper-stated,T-13"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    // the witness comes from the file, labelled by binding name
    assert!(out.contains("witness in B:"), "{out}");

    let both = mvspec(&["theorems", "valid/grammar.mv", "--suite", "builtin", "--only", "T-06:paper-stated"]);
    assert!(stdout(&both).contains("witness in product(chain 2, chain 2):"));
}

#[test]
fn theorems_json_is_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, threads: &str| {
        let p = dir.path().join(name);
        let o = mvspec_env(
            &["theorems", "--only", "T-06,T-26,T-29", "--samples", "500", "--seed", "7", "--json", p.to_str().unwrap()],
            &[("MVSPEC_THREADS", threads)],
        );
        assert_eq!(code(&o), 0, "{}", stderr(&o));
        fs::read(p).unwrap()
    };
    let a = run("a.json", "1");
    let b = run("b.json", "1");
    let c = run("c.json", "4");
    assert_eq!(a, b);
    assert_eq!(a, c);
    let v: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(v["suite"]["seed"], 7);
    assert_eq!(v["statements"][2]["samples"], 500);
}

#[test]
fn theorems_usage_errors() {
    assert_eq!(code(&mvspec(&["theorems", "--only", "T-99"])), 2);
    assert_eq!(code(&mvspec(&["theorems", "--max-size", "1"])), 2);
    assert_eq!(code(&mvspec_env(&["theorems", "--only", "T-11"], &[("MVSPEC_THREADS", "0")])), 2);
    assert_eq!(code(&mvspec(&["theorems", "--suite", "other"])), 2);
}

#[test]
fn registry_listing() {
    let o = mvspec(&["theorems", "--list"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 41);
    assert!(out.contains("T-07(1):repaired"));
}
