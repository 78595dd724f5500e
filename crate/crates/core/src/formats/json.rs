//! JSON model files.
//!
//! FDAG: `{"actions": [..], "arcs": [{"from", "to", "freq"}], "node_freq": {..}}`
//! with `__input__`/`__output__` naming the input and output nodes.
//!
//! SDFA: `{"states": [..], "initial": "..", "transitions": [{"from", "action", "to", "prob"}]}`.
//! Probabilities are written as shortest round-trip decimal strings. On load
//! they may also be JSON numbers or exact `"n/d"` fractions.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::discovery::{fdag_to_sdfa, Fdag};
use crate::error::{Error, Result};
use crate::model::Sdfa;

#[derive(Debug, Serialize, Deserialize)]
struct FdagFile {
    actions: Vec<String>,
    arcs: Vec<ArcRecord>,
    #[serde(default)]
    node_freq: BTreeMap<String, u64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ArcRecord {
    from: String,
    to: String,
    freq: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct SdfaFile {
    states: Vec<String>,
    initial: String,
    transitions: Vec<TransitionRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TransitionRecord {
    from: String,
    action: String,
    to: String,
    prob: Value,
}

/// A model file after loading.
#[derive(Debug, Clone)]
pub enum Model {
    Fdag(Fdag),
    Sdfa(Sdfa),
}

impl Model {
    /// The automaton to score: FDAGs are converted.
    pub fn into_sdfa(self) -> Result<Sdfa> {
        match self {
            Model::Fdag(g) => fdag_to_sdfa(&g),
            Model::Sdfa(a) => Ok(a),
        }
    }
}

pub fn load_model(path: &Path) -> Result<Model> {
    let text = fs::read_to_string(path).map_err(|source| Error::File {
        path: path.to_owned(),
        source,
    })?;
    model_from_json(&text)
}

/// Parses either schema, telling them apart by their `arcs` or
/// `transitions` key.
pub fn model_from_json(text: &str) -> Result<Model> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Model("model file must be a JSON object".to_owned()))?;
    if obj.contains_key("arcs") {
        let f: FdagFile = serde_json::from_value(value)?;
        Ok(Model::Fdag(fdag_from_file(f)?))
    } else if obj.contains_key("transitions") {
        let f: SdfaFile = serde_json::from_value(value)?;
        Ok(Model::Sdfa(sdfa_from_file(f)?))
    } else {
        Err(Error::Model(
            "model file has neither \"arcs\" (FDAG) nor \"transitions\" (SDFA)".to_owned(),
        ))
    }
}

fn fdag_from_file(f: FdagFile) -> Result<Fdag> {
    Fdag::from_parts(
        f.actions.iter().map(String::as_str),
        f.arcs
            .iter()
            .map(|a| (a.from.as_str(), a.to.as_str(), a.freq)),
        f.node_freq.iter().map(|(k, &v)| (k.as_str(), v)),
    )
}

fn sdfa_from_file(f: SdfaFile) -> Result<Sdfa> {
    let mut b = Sdfa::builder();
    for s in &f.states {
        b.state(s);
    }
    if !f.states.contains(&f.initial) {
        return Err(Error::Model(format!(
            "initial state {:?} is not listed",
            f.initial
        )));
    }
    b.initial(&f.initial);
    for t in &f.transitions {
        for s in [&t.from, &t.to] {
            if !f.states.contains(s) {
                return Err(Error::Model(format!(
                    "transition references unknown state {s:?}"
                )));
            }
        }
        let p = parse_probability(&t.prob).ok_or_else(|| {
            Error::Model(format!(
                "transition {:?} --{}--> {:?}: invalid probability {}",
                t.from, t.action, t.to, t.prob
            ))
        })?;
        if p <= 0.0 {
            return Err(Error::Model(format!(
                "transition {:?} --{}--> {:?} has probability {p}; omit zero-probability transitions",
                t.from, t.action, t.to
            )));
        }
        b.transition(&t.from, &t.action, &t.to, p)?;
    }
    b.build()
}

fn parse_probability(v: &Value) -> Option<f64> {
    let p = match v {
        Value::Number(n) => n.as_f64()?,
        Value::String(s) => {
            let s = s.trim();
            match s.split_once('/') {
                Some((n, d)) => {
                    let n: u64 = n.trim().parse().ok()?;
                    let d: u64 = d.trim().parse().ok()?;
                    if d == 0 {
                        return None;
                    }
                    n as f64 / d as f64
                }
                None => s.parse().ok()?,
            }
        }
        _ => return None,
    };
    p.is_finite().then_some(p)
}

pub fn fdag_to_json(g: &Fdag) -> String {
    let mut actions: Vec<String> = g.alphabet().iter().map(|(_, l)| l.to_owned()).collect();
    actions.sort();
    let mut arcs: Vec<ArcRecord> = g
        .arcs()
        .map(|(s, t, freq)| ArcRecord {
            from: g.node_label(s).to_owned(),
            to: g.node_label(t).to_owned(),
            freq,
        })
        .collect();
    let rank = |label: &str| match label {
        crate::model::INPUT_SENTINEL => 0,
        crate::model::OUTPUT_SENTINEL => 2,
        _ => 1,
    };
    arcs.sort_by(|a, b| {
        (rank(&a.from), &a.from, rank(&a.to), &a.to).cmp(&(
            rank(&b.from),
            &b.from,
            rank(&b.to),
            &b.to,
        ))
    });
    let node_freq = g
        .node_freqs()
        .map(|(n, f)| (g.node_label(n).to_owned(), f))
        .collect();
    pretty(&FdagFile {
        actions,
        arcs,
        node_freq,
    })
}

pub fn sdfa_to_json(a: &Sdfa) -> String {
    let initial = a.state_label(a.initial()).to_owned();
    let mut states: Vec<String> = a
        .states()
        .filter(|&s| s != a.initial())
        .map(|s| a.state_label(s).to_owned())
        .collect();
    states.sort();
    states.insert(0, initial.clone());
    let mut transitions: Vec<TransitionRecord> = a
        .transitions()
        .map(|t| TransitionRecord {
            from: t.from.to_owned(),
            action: t.action.to_owned(),
            to: t.to.to_owned(),
            prob: Value::String(format!("{}", t.probability)),
        })
        .collect();
    let pos = |s: &str| states.iter().position(|x| x == s).unwrap_or(usize::MAX);
    transitions.sort_by(|x, y| (pos(&x.from), &x.action).cmp(&(pos(&y.from), &y.action)));
    pretty(&SdfaFile {
        states,
        initial,
        transitions,
    })
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("model records always serialize");
    s.push('\n');
    s
}
