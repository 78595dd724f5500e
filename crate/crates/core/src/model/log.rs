use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use super::alphabet::{ActionId, Alphabet};
use super::language::StochasticLanguage;
use crate::error::{Error, Result};

/// A finite sequence of actions, with ids relative to some [`Alphabet`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Trace(Vec<ActionId>);

impl Trace {
    pub fn new(actions: Vec<ActionId>) -> Self {
        Trace(actions)
    }

    pub fn empty() -> Self {
        Trace(Vec::new())
    }

    pub fn actions(&self) -> &[ActionId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels<'a>(&'a self, alphabet: &'a Alphabet) -> impl Iterator<Item = &'a str> + 'a {
        self.0.iter().map(move |&id| alphabet.label(id))
    }
}

impl From<Vec<ActionId>> for Trace {
    fn from(v: Vec<ActionId>) -> Self {
        Trace(v)
    }
}

/// A finite multiset of traces together with the alphabet of the actions
/// that occur in it.
#[derive(Debug, Clone)]
pub struct EventLog {
    alphabet: Alphabet,
    variants: HashMap<Trace, u64>,
    total: u64,
}

impl EventLog {
    pub fn builder() -> EventLogBuilder {
        EventLogBuilder::default()
    }

    /// Builds a log from `(labels, multiplicity)` pairs.
    pub fn from_variants<I, T, S>(variants: I) -> Result<Self>
    where
        I: IntoIterator<Item = (T, u64)>,
        T: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut b = EventLog::builder();
        for (labels, m) in variants {
            b.add_trace(labels, m)?;
        }
        Ok(b.build())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Total number of traces, `|E|`.
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn variant_count(&self) -> usize {
        self.variants.len()
    }

    pub fn total_events(&self) -> u64 {
        self.variants.iter().map(|(t, &m)| t.len() as u64 * m).sum()
    }

    pub fn multiplicity(&self, trace: &Trace) -> u64 {
        self.variants.get(trace).copied().unwrap_or(0)
    }

    pub fn multiplicity_of<S: AsRef<str>>(&self, labels: &[S]) -> u64 {
        let mut ids = Vec::with_capacity(labels.len());
        for l in labels {
            match self.alphabet.get(l.as_ref()) {
                Some(id) => ids.push(id),
                None => return 0,
            }
        }
        self.multiplicity(&Trace(ids))
    }

    /// Variants in unspecified order.
    pub fn variants(&self) -> impl Iterator<Item = (&Trace, u64)> + '_ {
        self.variants.iter().map(|(t, &m)| (t, m))
    }

    /// Variants sorted lexicographically by action labels; a proper prefix
    /// sorts before its extensions.
    pub fn canonical_variants(&self) -> Vec<(&Trace, u64)> {
        let ranks = self.alphabet.label_ranks();
        let mut v: Vec<(&Trace, u64)> = self.variants().collect();
        v.sort_by(|a, b| compare_by_rank(a.0, b.0, &ranks));
        v
    }

    pub(crate) fn trace_order(&self) -> impl Fn(&Trace, &Trace) -> Ordering {
        let ranks = self.alphabet.label_ranks();
        move |a, b| compare_by_rank(a, b, &ranks)
    }

    pub fn labels_of(&self, trace: &Trace) -> Vec<String> {
        trace.labels(&self.alphabet).map(str::to_owned).collect()
    }

    /// The log as a label-keyed multiset, independent of id assignment.
    pub fn to_label_multiset(&self) -> BTreeMap<Vec<String>, u64> {
        self.variants
            .iter()
            .map(|(t, &m)| (self.labels_of(t), m))
            .collect()
    }

    /// Maximum-likelihood stochastic language, `m(t) / |E|`.
    pub fn language(&self) -> Result<StochasticLanguage> {
        if self.total == 0 {
            return Err(Error::EmptyLog);
        }
        let total = self.total as f64;
        let mut lang = StochasticLanguage::new();
        for (t, m) in self.variants() {
            lang.insert(self.labels_of(t), m as f64 / total);
        }
        Ok(lang)
    }

    /// Same variants with every multiplicity multiplied by `factor`.
    pub fn scaled(&self, factor: u64) -> EventLog {
        EventLog {
            alphabet: self.alphabet.clone(),
            variants: self
                .variants
                .iter()
                .map(|(t, &m)| (t.clone(), m * factor))
                .collect(),
            total: self.total * factor,
        }
    }

    /// Sub-log of the given variants of `self`, with a freshly interned
    /// alphabet so that it holds only actions that still occur.
    pub(crate) fn restricted<'a, I>(&self, kept: I) -> EventLog
    where
        I: IntoIterator<Item = (&'a Trace, u64)>,
    {
        let mut b = EventLog::builder();
        for (t, m) in kept {
            b.add_trace(t.labels(&self.alphabet), m)
                .expect("labels already validated");
        }
        b.build()
    }
}

impl PartialEq for EventLog {
    fn eq(&self, other: &Self) -> bool {
        self.total == other.total
            && self.variants.len() == other.variants.len()
            && self.to_label_multiset() == other.to_label_multiset()
    }
}

fn compare_by_rank(a: &Trace, b: &Trace, ranks: &[u32]) -> Ordering {
    let ka = a.0.iter().map(|id| ranks[id.index()]);
    let kb = b.0.iter().map(|id| ranks[id.index()]);
    ka.cmp(kb)
}

/// Accumulates traces into an [`EventLog`].
#[derive(Debug, Default)]
pub struct EventLogBuilder {
    alphabet: Alphabet,
    variants: HashMap<Trace, u64>,
    total: u64,
    scratch: Vec<ActionId>,
}

impl EventLogBuilder {
    /// Adds `multiplicity` copies of the trace. A zero multiplicity is a
    /// no-op and interns nothing.
    pub fn add_trace<I, S>(&mut self, labels: I, multiplicity: u64) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        if multiplicity == 0 {
            return Ok(());
        }
        let labels: Vec<S> = labels.into_iter().collect();
        for l in &labels {
            super::alphabet::validate_action_label(l.as_ref())?;
        }
        self.scratch.clear();
        for l in &labels {
            let id = self.alphabet.intern(l.as_ref())?;
            self.scratch.push(id);
        }
        let trace = Trace(std::mem::take(&mut self.scratch));
        *self.variants.entry(trace).or_insert(0) += multiplicity;
        self.total += multiplicity;
        Ok(())
    }

    pub fn build(self) -> EventLog {
        EventLog {
            alphabet: self.alphabet,
            variants: self.variants,
            total: self.total,
        }
    }
}
