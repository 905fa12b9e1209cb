//! Graphviz export.

use std::fmt::Write;

use transynth::Transducer;

#[derive(Debug, Clone, Copy, Default)]
pub struct DotOptions {
    /// Route every undefined transition to a single `nil` node.
    pub show_nil_sink: bool,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes appear in state order; parallel edges are merged into one edge whose
/// label lists its symbols in alphabet order.
pub fn to_dot(t: &Transducer, opts: DotOptions) -> String {
    let mut out = String::from("digraph transducer {\n  rankdir=LR;\n");
    out.push_str("  start [shape=point];\n  start -> 0;\n");
    for q in 0..t.n_states() {
        let label = match t.output_symbol(q) {
            Some(o) => format!("{q}:{o}"),
            None => q.to_string(),
        };
        writeln!(out, "  {q} [shape=circle, label={}];", quote(&label)).unwrap();
    }
    let has_undefined = t.delta_table().iter().any(Option::is_none);
    if opts.show_nil_sink && has_undefined {
        out.push_str("  nil [shape=box, label=\"nil\"];\n");
    }
    for q in 0..t.n_states() {
        // target -> symbols, in order of first symbol
        let mut edges: Vec<(Option<usize>, Vec<&str>)> = Vec::new();
        for (a, sym) in t.inputs().iter().enumerate() {
            let target = t.successor(q, a);
            if target.is_none() && !opts.show_nil_sink {
                continue;
            }
            match edges.iter_mut().find(|(d, _)| *d == target) {
                Some((_, syms)) => syms.push(sym.as_str()),
                None => edges.push((target, vec![sym.as_str()])),
            }
        }
        for (target, syms) in edges {
            let dst = target.map_or_else(|| "nil".to_string(), |d| d.to_string());
            writeln!(out, "  {q} -> {dst} [label={}];", quote(&syms.join(","))).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
