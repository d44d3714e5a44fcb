//! Graphviz output: Hasse diagrams and subordinate families.

use std::fmt::Write;

use mvspec_core::{Algebra, ElementSet, SubordinateFamily};

const FILL: &str = "#9ecae1";

/// What to draw besides the bare Hasse diagram.
#[derive(Clone, Copy, Debug)]
pub enum Highlight<'a> {
    /// Fill the nodes of this set.
    Set(&'a ElementSet),
    /// Draw the family as an inclusion diagram instead of the algebra.
    Family(&'a SubordinateFamily),
}

/// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
pub fn covers(alg: &Algebra) -> Vec<(usize, usize)> {
    let lt = |x: usize, y: usize| x != y && alg.leq(x, y);
    let mut out = Vec::new();
    for x in alg.elements() {
        for y in alg.elements() {
            if lt(x, y) && !alg.elements().any(|z| lt(x, z) && lt(z, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn render_dot(alg: &Algebra, highlight: Option<Highlight<'_>>) -> String {
    match highlight {
        Some(Highlight::Family(family)) => render_family(alg, family),
        Some(Highlight::Set(set)) => render_hasse(alg, Some(set)),
        None => render_hasse(alg, None),
    }
}

fn header(out: &mut String, name: &str) {
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
}

fn render_hasse(alg: &Algebra, highlight: Option<&ElementSet>) -> String {
    let mut out = String::new();
    header(&mut out, alg.label().unwrap_or("algebra"));
    for x in alg.elements() {
        write!(out, "  n{x} [label={}", quote(alg.name(x))).unwrap();
        if highlight.is_some_and(|s| s.contains(x)) {
            write!(out, ", style=filled, fillcolor=\"{FILL}\"").unwrap();
        }
        out.push_str("];\n");
    }
    for (x, y) in covers(alg) {
        writeln!(out, "  n{x} -> n{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn set_label(alg: &Algebra, set: &ElementSet) -> String {
    if set.is_empty() {
        "∅".to_string()
    } else {
        alg.format_set(set)
    }
}

fn render_family(alg: &Algebra, family: &SubordinateFamily) -> String {
    let mut out = String::new();
    header(&mut out, &format!("subordinates of {}", set_label(alg, family.base())));
    for (i, m) in family.members().iter().enumerate() {
        let label = format!("F_{} = {}", alg.name(m.representative), set_label(alg, &m.set));
        writeln!(out, "  m{i} [label={}];", quote(&label)).unwrap();
    }
    for (i, j) in family.covers() {
        writeln!(out, "  m{i} -> m{j};").unwrap();
    }
    out.push_str("}\n");
    out
}
