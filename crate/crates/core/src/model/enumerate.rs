use super::language::StochasticLanguage;
use super::sdfa::{Sdfa, StateId};

/// Every trace of length at most `max_length` with positive probability,
/// found by breadth-first path expansion. Probabilities are plain products
/// along each path, independent of the log-domain replay.
pub fn enumerate_language(a: &Sdfa, max_length: usize) -> StochasticLanguage {
    let mut lang = StochasticLanguage::new();
    let mut frontier: Vec<(StateId, Vec<String>, f64)> = vec![(a.initial(), Vec::new(), 1.0)];
    for depth in 0..=max_length {
        let mut next = Vec::new();
        for (state, prefix, mass) in frontier {
            let term = a.termination(state);
            if term > 0.0 {
                lang.insert(prefix.clone(), mass * term);
            }
            if depth == max_length {
                continue;
            }
            for (action, target, p) in a.outgoing(state) {
                if p > 0.0 {
                    let mut t = prefix.clone();
                    t.push(a.alphabet().label(action).to_owned());
                    next.push((target, t, mass * p));
                }
            }
        }
        frontier = next;
    }
    lang
}
