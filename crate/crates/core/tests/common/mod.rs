#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use entrel::model::{EventLog, Sdfa};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

const LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Random SDFA with at most `max_states` states over the first
/// `max_actions` labels. Probabilities are normalised weights, and some
/// states get no termination mass.
pub fn random_sdfa(rng: &mut StdRng, max_states: usize, max_actions: usize) -> Sdfa {
    let n = rng.random_range(1..=max_states);
    let k = rng.random_range(1..=max_actions);
    let mut b = Sdfa::builder();
    b.initial("s0");
    for i in 0..n {
        let from = format!("s{i}");
        b.state(&from);
        let mut arcs: Vec<(usize, usize, f64)> = Vec::new();
        for a in 0..k {
            if rng.random_bool(0.6) {
                arcs.push((a, rng.random_range(0..n), rng.random_range(0.05..1.0)));
            }
        }
        let stop = if arcs.is_empty() || rng.random_bool(0.7) {
            rng.random_range(0.05..1.0)
        } else {
            0.0
        };
        let total: f64 = arcs.iter().map(|a| a.2).sum::<f64>() + stop;
        for (a, to, w) in arcs {
            b.transition(&from, LABELS[a], &format!("s{to}"), w / total)
                .unwrap();
        }
    }
    b.build().unwrap()
}

/// Random log with 1..=max_variants distinct traces over the first
/// `max_actions` labels, lengths 0..=max_len.
pub fn random_log(
    rng: &mut StdRng,
    max_variants: usize,
    max_actions: usize,
    max_len: usize,
) -> EventLog {
    let want = rng.random_range(1..=max_variants);
    let k = rng.random_range(1..=max_actions);
    let mut variants: HashMap<Vec<&str>, u64> = HashMap::new();
    for _ in 0..want * 4 {
        if variants.len() == want {
            break;
        }
        let len = rng.random_range(0..=max_len);
        let t: Vec<&str> = (0..len).map(|_| LABELS[rng.random_range(0..k)]).collect();
        variants
            .entry(t)
            .or_insert_with(|| rng.random_range(1..=50));
    }
    EventLog::from_variants(variants).unwrap()
}

/// Trace probability computed straight from the transition list: a product
/// of probabilities times the residual mass of the final state.
pub struct Oracle {
    states: HashMap<String, usize>,
    actions: HashMap<String, usize>,
    delta: Vec<Vec<Option<(usize, f64)>>>,
    residual: Vec<f64>,
    initial: usize,
}

impl Oracle {
    pub fn new(a: &Sdfa) -> Self {
        let states: HashMap<String, usize> = a
            .states()
            .enumerate()
            .map(|(i, s)| (a.state_label(s).to_owned(), i))
            .collect();
        let mut actions = HashMap::new();
        for t in a.transitions() {
            let n = actions.len();
            actions.entry(t.action.to_owned()).or_insert(n);
        }
        let mut delta = vec![vec![None; actions.len()]; states.len()];
        let mut out_mass = vec![0.0; states.len()];
        for t in a.transitions() {
            let from = states[t.from];
            delta[from][actions[t.action]] = Some((states[t.to], t.probability));
            out_mass[from] += t.probability;
        }
        let residual = out_mass
            .iter()
            .map(|m| {
                let r: f64 = (1.0 - m).clamp(0.0, 1.0);
                if r < 1e-12 {
                    0.0
                } else {
                    r
                }
            })
            .collect();
        Oracle {
            initial: states[a.state_label(a.initial())],
            states,
            actions,
            delta,
            residual,
        }
    }

    pub fn probability<S: AsRef<str>>(&self, trace: &[S]) -> f64 {
        let mut state = self.initial;
        let mut p = 1.0;
        for a in trace {
            let Some(&action) = self.actions.get(a.as_ref()) else {
                return 0.0;
            };
            match self.delta[state][action] {
                Some((to, q)) => {
                    p *= q;
                    state = to;
                }
                None => return 0.0,
            }
        }
        p * self.residual[state]
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }
}

/// Every word over `labels` of length at most `max_len`.
pub fn all_words<'a>(labels: &[&'a str], max_len: usize) -> Vec<Vec<&'a str>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in labels {
                let mut v: Vec<&str> = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn relative_eq(a: f64, b: f64, tol: f64) -> bool {
    a == b || (a - b).abs() <= tol * a.abs().max(b.abs())
}
