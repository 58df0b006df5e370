//! Graphviz export of Hasse diagrams.

use std::fmt::Write;

use crate::bitset::ElementSet;
use crate::poset::FinitePoset;

/// A plain DOT digraph of the cover relation, drawn bottom to top, with
/// elements of equal height on one rank. Members of `c` are hollow and all
/// other elements filled. `labels` defaults to the element indices.
pub fn export_dot(p: &FinitePoset, c: Option<&ElementSet>, labels: Option<&[String]>) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    let label = |x: usize| labels.and_then(|l| l.get(x).cloned()).unwrap_or_else(|| x.to_string());
    for x in p.elements() {
        let style = match c {
            Some(c) if c.contains(x) => "style=solid, fillcolor=white",
            Some(_) => "style=filled, fillcolor=black, fontcolor=white",
            None => "style=solid",
        };
        let _ = writeln!(out, "  n{x} [label=\"{}\", {style}];", escape(&label(x)));
    }
    let heights = p.heights();
    let top = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=top {
        let row: Vec<String> = p
            .elements()
            .filter(|&x| heights[x] == h)
            .map(|x| format!("n{x}"))
            .collect();
        if row.len() > 1 {
            let _ = writeln!(out, "  {{ rank=same; {}; }}", row.join("; "));
        }
    }
    for (a, b) in p.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
