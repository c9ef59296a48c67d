//! Graphviz export.

use std::fmt::Write;

use crate::dfa::Dfa;

/// Renders `dfa` as a DOT digraph.
///
/// Accepting states are double circles; an invisible node points at the start
/// state. Symbols sharing a (source, target) pair are merged into one
/// comma-joined edge label. Nodes and edges are emitted in ascending state
/// order and edges in alphabet order of their first symbol, so the output is
/// byte-stable.
pub fn export_dot(dfa: &Dfa, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    out.push_str("  rankdir=LR;\n");
    out.push_str("  __start [shape=point, style=invis];\n");
    for q in dfa.states() {
        let shape = if dfa.is_accepting(q) { "doublecircle" } else { "circle" };
        writeln!(out, "  q{q} [shape={shape}, label=\"{q}\"];").unwrap();
    }
    writeln!(out, "  __start -> q{};", dfa.start()).unwrap();
    for q in dfa.states() {
        let mut edges: Vec<(usize, Vec<&str>)> = Vec::new();
        for (column, symbol) in dfa.alphabet().iter().enumerate() {
            let target = dfa.target(q, column).index();
            match edges.iter_mut().find(|(t, _)| *t == target) {
                Some((_, labels)) => labels.push(symbol.as_str()),
                None => edges.push((target, vec![symbol.as_str()])),
            }
        }
        for (target, labels) in edges {
            writeln!(out, "  q{q} -> q{target} [label=\"{}\"];", labels.join(",")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
