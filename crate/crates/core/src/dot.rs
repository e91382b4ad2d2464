//! Graphviz output with a fixed node and edge order.

use std::fmt::Write;

use crate::digraph::{Digraph, EdgeLabel};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotStyle {
    pub name: String,
    /// Print edge labels when present.
    pub labels: bool,
    /// Orbit-index labels are printed as `d_s` instead of the bare index.
    pub orbit_prefix: bool,
}

impl Default for DotStyle {
    fn default() -> Self {
        DotStyle {
            name: "G".into(),
            labels: true,
            orbit_prefix: true,
        }
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Nodes in ascending order, then edges sorted by `(source, target)`.
pub fn export_dot(g: &Digraph, style: &DotStyle) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(&style.name)).unwrap();
    for v in 0..g.vertex_count() {
        writeln!(out, "  {v};").unwrap();
    }
    for (s, t, label) in g.edges() {
        let text = match label {
            Some(_) if !style.labels => None,
            Some(EdgeLabel::Word(w)) => Some(w.to_string()),
            Some(EdgeLabel::OrbitIndex(i)) if style.orbit_prefix => Some(format!("d_{i}")),
            Some(EdgeLabel::OrbitIndex(i)) => Some(i.to_string()),
            None => None,
        };
        match text {
            Some(l) => writeln!(out, "  {s} -> {t} [label=\"{}\"];", escape(&l)).unwrap(),
            None => writeln!(out, "  {s} -> {t};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
