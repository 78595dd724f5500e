//! Graphviz renderings. FDAG arcs carry their frequencies; SDFA arcs are
//! labelled `action(p)` and each state shows its termination probability,
//! with the state name as an external label.

use std::fmt::Write;

use crate::discovery::{Fdag, Node};
use crate::model::Sdfa;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Fixed six decimals with trailing zeros removed.
pub(crate) fn short_decimal(x: f64) -> String {
    let s = format!("{x:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

pub fn fdag_to_dot(g: &Fdag) -> String {
    let mut out = String::from("digraph fdag {\n  rankdir=LR;\n");
    let id = |n: Node| quote(g.node_label(n));
    let mut nodes = vec![Node::Input];
    nodes.extend(g.alphabet().sorted_ids().into_iter().map(Node::Action));
    nodes.push(Node::Output);
    for n in nodes {
        let name = match n {
            Node::Input => "i",
            Node::Output => "o",
            Node::Action(a) => g.alphabet().label(a),
        };
        let label = match g.node_freq(n) {
            Some(f) => format!("{name}\n{f}"),
            None => name.to_owned(),
        };
        let shape = if matches!(n, Node::Action(_)) {
            "box, style=rounded"
        } else {
            "circle"
        };
        writeln!(out, "  {} [shape={shape}, label={}];", id(n), quote(&label)).unwrap();
    }
    let mut arcs: Vec<(Node, Node, u64)> = g.arcs().collect();
    arcs.sort_by(|a, b| {
        let key = |n: Node| (matches!(n, Node::Output), g.node_label(n).to_owned());
        (key(a.0), key(a.1)).cmp(&(key(b.0), key(b.1)))
    });
    for (s, t, f) in arcs {
        writeln!(out, "  {} -> {} [label=\"{f}\"];", id(s), id(t)).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn sdfa_to_dot(a: &Sdfa) -> String {
    let mut out = String::from("digraph sdfa {\n  rankdir=LR;\n  __start [shape=point];\n");
    let mut states: Vec<_> = a.states().filter(|&s| s != a.initial()).collect();
    states.sort_by(|x, y| a.state_label(*x).cmp(a.state_label(*y)));
    states.insert(0, a.initial());
    for &s in &states {
        writeln!(
            out,
            "  {} [shape=circle, label={}, xlabel={}];",
            quote(a.state_label(s)),
            quote(&short_decimal(a.termination(s))),
            quote(a.state_label(s))
        )
        .unwrap();
    }
    writeln!(out, "  __start -> {};", quote(a.state_label(a.initial()))).unwrap();
    for &s in &states {
        let mut outgoing: Vec<_> = a.outgoing(s).collect();
        outgoing.sort_by(|x, y| a.alphabet().label(x.0).cmp(a.alphabet().label(y.0)));
        for (act, target, p) in outgoing {
            let label = format!("{}({})", a.alphabet().label(act), short_decimal(p));
            writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(a.state_label(s)),
                quote(a.state_label(target)),
                quote(&label)
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}
