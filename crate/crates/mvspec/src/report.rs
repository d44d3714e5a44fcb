//! JSON and plain-text theorem reports.

use std::fmt::Write;

use mvspec_core::harness::{Status, StatementReport, Witness};
use serde::Serialize;

/// Echo of the run configuration, written at the top of the JSON report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteEcho {
    /// `"builtin"`, a file path, or both joined with `+`.
    pub source: String,
    pub algebras: Vec<String>,
    pub upset_budget: usize,
    pub samples: u64,
    pub seed: u64,
    pub max_sample_size: usize,
    pub only: Vec<String>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    suite: &'a SuiteEcho,
    statements: Vec<JsonStatement<'a>>,
    summary: Summary,
}

#[derive(Serialize)]
struct JsonStatement<'a> {
    id: &'a str,
    variant: Option<&'static str>,
    status: &'static str,
    instances: u64,
    hypothesis_hits: u64,
    elapsed_ms: Option<u64>,
    partial: bool,
    samples: u64,
    expected_counterexample: bool,
    cases: Option<JsonCases>,
    witness: Option<JsonWitness<'a>>,
}

#[derive(Serialize)]
struct JsonCases {
    case1: u64,
    case2: u64,
    case2_vacuous: bool,
}

#[derive(Serialize)]
struct JsonWitness<'a> {
    algebra: &'a str,
    filters: Vec<JsonSet<'a>>,
    elements: Vec<JsonElement<'a>>,
    note: &'a str,
    sample: Option<u64>,
}

#[derive(Serialize)]
struct JsonSet<'a> {
    name: &'a str,
    elements: &'a [String],
    indices: &'a [usize],
}

#[derive(Serialize)]
struct JsonElement<'a> {
    name: &'a str,
    element: &'a str,
    index: usize,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub counterexamples: usize,
    pub vacuous: usize,
}

impl Summary {
    pub fn of(reports: &[StatementReport]) -> Summary {
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        Summary {
            verified: count(Status::Verified),
            counterexamples: count(Status::Counterexample),
            vacuous: count(Status::Vacuous),
        }
    }
}

fn json_witness(w: &Witness) -> JsonWitness<'_> {
    JsonWitness {
        algebra: &w.algebra,
        filters: w.filters.iter().map(|f| JsonSet { name: &f.name, elements: &f.names, indices: &f.indices }).collect(),
        elements: w
            .elements
            .iter()
            .map(|e| JsonElement { name: &e.name, element: &e.display, index: e.index })
            .collect(),
        note: &w.note,
        sample: w.sample,
    }
}

/// Pretty-printed JSON with a fixed key order and a trailing newline.
pub fn report_json(suite: &SuiteEcho, reports: &[StatementReport]) -> String {
    let statements = reports
        .iter()
        .map(|r| JsonStatement {
            id: r.id,
            variant: r.variant.map(|v| v.as_str()),
            status: r.status.as_str(),
            instances: r.instances,
            hypothesis_hits: r.hypothesis_hits,
            elapsed_ms: r.elapsed_ms,
            partial: r.partial,
            samples: r.samples,
            expected_counterexample: r.expected_counterexample,
            cases: r.cases.map(|c| JsonCases { case1: c.case1, case2: c.case2, case2_vacuous: c.case2_vacuous() }),
            witness: r.witness.as_ref().map(json_witness),
        })
        .collect();
    let doc = JsonReport { suite, statements, summary: Summary::of(reports) };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

pub fn format_witness(w: &Witness) -> String {
    let mut parts: Vec<String> = w.filters.iter().map(|f| format!("{} = {{{}}}", f.name, f.names.join(", "))).collect();
    parts.extend(w.elements.iter().map(|e| format!("{} = {}", e.name, e.display)));
    let mut s = format!("in {}", w.algebra);
    if let Some(i) = w.sample {
        write!(s, " (sample {i})").unwrap();
    }
    write!(s, ": {}", parts.join("; ")).unwrap();
    if !w.note.is_empty() {
        write!(s, " ({})", w.note).unwrap();
    }
    s
}

/// One line per statement, witnesses indented below, then a summary line.
pub fn report_text(reports: &[StatementReport]) -> String {
    let width = reports.iter().map(|r| r.display_id().chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        let id = r.display_id();
        let pad = width - id.chars().count();
        let status = match (r.status, r.expected_counterexample) {
            (Status::Counterexample, true) => "counterexample (expected)".to_string(),
            (Status::Counterexample, false) => "COUNTEREXAMPLE".to_string(),
            (s, _) => s.to_string(),
        };
        write!(out, "{id}{:pad$}  {status:<25}  instances {:>8}  hits {:>7}", "", r.instances, r.hypothesis_hits)
            .unwrap();
        if r.samples > 0 {
            write!(out, "  samples {}", r.samples).unwrap();
        }
        if let Some(c) = r.cases {
            write!(out, "  case 1: {}  case 2: {}", c.case1, c.case2).unwrap();
            if c.case2_vacuous() {
                out.push_str(" (vacuous sub-case)");
            }
        }
        if let Some(ms) = r.elapsed_ms {
            write!(out, "  {ms} ms").unwrap();
        }
        if r.partial {
            out.push_str("  [partial]");
        }
        out.push('\n');
        if let Some(w) = &r.witness {
            writeln!(out, "    witness {}", format_witness(w)).unwrap();
        }
    }
    let s = Summary::of(reports);
    let unexpected = reports.iter().filter(|r| r.is_unexpected_failure()).count();
    writeln!(
        out,
        "summary: verified {}, counterexamples {} ({} unexpected), vacuous {}",
        s.verified, s.counterexamples, unexpected, s.vacuous
    )
    .unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let j = report_json(&SuiteEcho::default(), &[]);
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["statements"], serde_json::json!([]));
        assert_eq!(v["summary"], serde_json::json!({"verified": 0, "counterexamples": 0, "vacuous": 0}));
        let keys: Vec<&str> = ["\"suite\"", "\"statements\"", "\"summary\""].to_vec();
        let at: Vec<usize> = keys.iter().map(|k| j.find(k).unwrap()).collect();
        assert!(at.windows(2).all(|w| w[0] < w[1]));
    }
}
