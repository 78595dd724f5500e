use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{
    ActionId, Alphabet, Diagnostic, DiagnosticKind, EventLog, INPUT_SENTINEL, OUTPUT_SENTINEL,
};

/// A node of a frequency directed action graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Input,
    Action(ActionId),
    Output,
}

/// Frequency directed action graph: actions, directly-follows arcs with
/// frequencies, node frequencies, and distinguished input/output nodes.
/// The arc from input straight to output is allowed and carries empty traces.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Fdag {
    alphabet: Alphabet,
    arcs: BTreeMap<(Node, Node), u64>,
    node_freq: BTreeMap<Node, u64>,
}

impl Fdag {
    /// Assembles a graph from labelled parts, checking structure. Arc
    /// endpoints use the `__input__`/`__output__` sentinels; every action in
    /// `actions` must take part in some arc.
    pub fn from_parts<'a, A, R, F>(actions: A, arcs: R, node_freq: F) -> Result<Fdag>
    where
        A: IntoIterator<Item = &'a str>,
        R: IntoIterator<Item = (&'a str, &'a str, u64)>,
        F: IntoIterator<Item = (&'a str, u64)>,
    {
        let mut g = Fdag::default();
        for a in actions {
            if g.alphabet.get(a).is_some() {
                return Err(Error::Model(format!("action {a:?} listed twice")));
            }
            g.alphabet
                .intern(a)
                .map_err(|_| Error::Model(format!("invalid action label {a:?}")))?;
        }
        for (from, to, freq) in arcs {
            let s = g.node(from)?;
            let t = g.node(to)?;
            if t == Node::Input {
                return Err(Error::Model(format!(
                    "arc {from:?} -> {to:?} enters the input node"
                )));
            }
            if s == Node::Output {
                return Err(Error::Model(format!(
                    "arc {from:?} -> {to:?} leaves the output node"
                )));
            }
            if freq == 0 {
                return Err(Error::Model(format!(
                    "arc {from:?} -> {to:?} has frequency 0"
                )));
            }
            if g.arcs.insert((s, t), freq).is_some() {
                return Err(Error::Model(format!("arc {from:?} -> {to:?} listed twice")));
            }
        }
        for (label, freq) in node_freq {
            let n = g.node(label)?;
            g.node_freq.insert(n, freq);
        }
        for (id, label) in g.alphabet.iter() {
            let n = Node::Action(id);
            if !g.arcs.keys().any(|&(s, t)| s == n || t == n) {
                return Err(Error::Model(format!(
                    "action {label:?} takes part in no arc"
                )));
            }
        }
        Ok(g)
    }

    fn node(&self, label: &str) -> Result<Node> {
        match label {
            INPUT_SENTINEL => Ok(Node::Input),
            OUTPUT_SENTINEL => Ok(Node::Output),
            _ => self
                .alphabet
                .get(label)
                .map(Node::Action)
                .ok_or_else(|| Error::Model(format!("arc references unknown action {label:?}"))),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn node_label(&self, n: Node) -> &str {
        match n {
            Node::Input => INPUT_SENTINEL,
            Node::Output => OUTPUT_SENTINEL,
            Node::Action(a) => self.alphabet.label(a),
        }
    }

    pub fn arc(&self, from: Node, to: Node) -> u64 {
        self.arcs.get(&(from, to)).copied().unwrap_or(0)
    }

    /// Arc frequency by labels, 0 when absent.
    pub fn arc_between(&self, from: &str, to: &str) -> u64 {
        match (self.node(from), self.node(to)) {
            (Ok(s), Ok(t)) => self.arc(s, t),
            _ => 0,
        }
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Node, Node, u64)> + '_ {
        self.arcs.iter().map(|(&(s, t), &f)| (s, t, f))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn outgoing(&self, from: Node) -> impl Iterator<Item = (Node, u64)> + '_ {
        self.arcs
            .range((from, Node::Input)..=(from, Node::Output))
            .map(|(&(_, t), &f)| (t, f))
    }

    pub fn node_freq(&self, n: Node) -> Option<u64> {
        self.node_freq.get(&n).copied()
    }

    pub fn node_freqs(&self) -> impl Iterator<Item = (Node, u64)> + '_ {
        self.node_freq.iter().map(|(&n, &f)| (n, f))
    }

    /// Flow conservation warnings: nodes whose recorded frequency differs
    /// from their total inflow or outflow.
    pub fn flow_warnings(&self) -> Vec<Diagnostic> {
        let mut inflow: BTreeMap<Node, u64> = BTreeMap::new();
        let mut outflow: BTreeMap<Node, u64> = BTreeMap::new();
        for (s, t, f) in self.arcs() {
            *outflow.entry(s).or_default() += f;
            *inflow.entry(t).or_default() += f;
        }
        let mut out = Vec::new();
        for (n, freq) in self.node_freqs() {
            let inf = inflow.get(&n).copied().unwrap_or(0);
            let outf = outflow.get(&n).copied().unwrap_or(0);
            let bad_in = n != Node::Input && inf != freq;
            let bad_out = n != Node::Output && outf != freq;
            if bad_in || bad_out {
                out.push(Diagnostic {
                    severity: crate::model::Severity::Warning,
                    kind: DiagnosticKind::FlowImbalance,
                    state: Some(self.node_label(n).to_owned()),
                    message: format!("frequency {freq} but inflow {inf} and outflow {outf}"),
                });
            }
        }
        out
    }
}

/// Directly-follows graph of `e`, with every count weighted by trace
/// multiplicity.
pub fn build_fdag(e: &EventLog) -> Fdag {
    let mut arcs: BTreeMap<(Node, Node), u64> = BTreeMap::new();
    let mut node_freq: BTreeMap<Node, u64> = BTreeMap::new();
    for (trace, m) in e.variants() {
        let mut prev = Node::Input;
        for &a in trace.actions() {
            let n = Node::Action(a);
            *arcs.entry((prev, n)).or_default() += m;
            *node_freq.entry(n).or_default() += m;
            prev = n;
        }
        *arcs.entry((prev, Node::Output)).or_default() += m;
    }
    node_freq.insert(Node::Input, e.total());
    node_freq.insert(Node::Output, e.total());
    Fdag {
        alphabet: e.alphabet().clone(),
        arcs,
        node_freq,
    }
}
