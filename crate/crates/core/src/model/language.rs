use std::collections::BTreeMap;

use crate::numeric::CompensatedSum;

/// Support of a stochastic language: every trace with positive probability,
/// keyed by its action labels.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StochasticLanguage {
    probabilities: BTreeMap<Vec<String>, f64>,
}

impl StochasticLanguage {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `p` for `trace`; non-positive values are not part of the support
    /// and are dropped.
    pub fn insert(&mut self, trace: Vec<String>, p: f64) {
        if p > 0.0 {
            self.probabilities.insert(trace, p);
        }
    }

    pub fn get<S: AsRef<str>>(&self, trace: &[S]) -> f64 {
        let key: Vec<String> = trace.iter().map(|s| s.as_ref().to_owned()).collect();
        self.probabilities.get(&key).copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[String], f64)> + '_ {
        self.probabilities.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn total_mass(&self) -> f64 {
        self.probabilities
            .values()
            .copied()
            .collect::<CompensatedSum>()
            .value()
    }

    /// Largest absolute probability difference over the union of supports.
    pub fn max_abs_difference(&self, other: &StochasticLanguage) -> f64 {
        let mut worst: f64 = 0.0;
        for (k, &p) in &self.probabilities {
            let q = other.probabilities.get(k).copied().unwrap_or(0.0);
            worst = worst.max((p - q).abs());
        }
        for (k, &q) in &other.probabilities {
            if !self.probabilities.contains_key(k) {
                worst = worst.max(q);
            }
        }
        worst
    }
}
