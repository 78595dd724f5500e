use std::collections::{HashMap, VecDeque};
use std::fmt;

use super::alphabet::{ActionId, Alphabet};
use super::log::Trace;
use crate::error::{Error, Result};
use crate::numeric::{neg_log2, Bits, Probability, MASS_TOLERANCE, TERMINATION_CLIFF};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(u32);

impl StateId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    fn from_index(i: usize) -> Self {
        StateId(u32::try_from(i).expect("too many states"))
    }
}

#[derive(Debug, Clone, Copy)]
struct Transition {
    action: ActionId,
    target: StateId,
    probability: Probability,
    // -log2(probability); NaN for non-positive probabilities, which replay
    // treats as absent.
    cost: Bits,
}

/// A transition as seen from outside: labels resolved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionRef<'a> {
    pub from: &'a str,
    pub action: &'a str,
    pub to: &'a str,
    pub probability: Probability,
}

/// Stochastic deterministic finite automaton.
///
/// States carry opaque text labels. Termination probabilities are derived
/// from the outgoing mass of each state and are never stored by callers.
#[derive(Debug, Clone)]
pub struct Sdfa {
    state_labels: Vec<String>,
    state_index: HashMap<String, StateId>,
    alphabet: Alphabet,
    initial: StateId,
    // Per state, sorted by action id.
    outgoing: Vec<Vec<Transition>>,
    termination: Vec<Probability>,
    termination_cost: Vec<Option<Bits>>,
    outgoing_mass: Vec<f64>,
}

impl Sdfa {
    pub fn builder() -> SdfaBuilder {
        SdfaBuilder::default()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn state_count(&self) -> usize {
        self.state_labels.len()
    }

    pub fn transition_count(&self) -> usize {
        self.outgoing.iter().map(Vec::len).sum()
    }

    pub fn states(&self) -> impl ExactSizeIterator<Item = StateId> {
        (0..self.state_labels.len()).map(StateId::from_index)
    }

    pub fn state_label(&self, s: StateId) -> &str {
        &self.state_labels[s.index()]
    }

    pub fn state_by_label(&self, label: &str) -> Option<StateId> {
        self.state_index.get(label).copied()
    }

    /// Derived probability of ending a trace in `s`.
    pub fn termination(&self, s: StateId) -> Probability {
        self.termination[s.index()]
    }

    /// Transition target and probability for `(s, action)`, if present.
    pub fn step(&self, s: StateId, action: ActionId) -> Option<(StateId, Probability)> {
        self.find(s, action).map(|t| (t.target, t.probability))
    }

    /// Outgoing transitions of `s` as `(action, target, probability)`.
    pub fn outgoing(
        &self,
        s: StateId,
    ) -> impl Iterator<Item = (ActionId, StateId, Probability)> + '_ {
        self.outgoing[s.index()]
            .iter()
            .map(|t| (t.action, t.target, t.probability))
    }

    pub fn transitions(&self) -> impl Iterator<Item = TransitionRef<'_>> + '_ {
        self.states().flat_map(move |s| {
            self.outgoing[s.index()].iter().map(move |t| TransitionRef {
                from: self.state_label(s),
                action: self.alphabet.label(t.action),
                to: self.state_label(t.target),
                probability: t.probability,
            })
        })
    }

    #[inline]
    fn find(&self, s: StateId, action: ActionId) -> Option<&Transition> {
        let out = &self.outgoing[s.index()];
        out.binary_search_by_key(&action, |t| t.action)
            .ok()
            .map(|i| &out[i])
    }

    /// `-log2 L(t)` accumulated along the unique path of `trace` (ids in this
    /// automaton's alphabet), or `None` when the trace is impossible.
    pub fn neg_log2_probability(&self, trace: &[ActionId]) -> Option<Bits> {
        self.replay_bits(trace.iter().map(|&a| Some(a)))
    }

    pub fn trace_probability(&self, trace: &[ActionId]) -> Probability {
        self.neg_log2_probability(trace)
            .map_or(0.0, |bits| (-bits).exp2())
    }

    /// Label-based replay; unknown labels make the trace impossible.
    pub fn neg_log2_probability_of<S: AsRef<str>>(&self, labels: &[S]) -> Option<Bits> {
        self.replay_bits(labels.iter().map(|l| self.alphabet.get(l.as_ref())))
    }

    pub fn probability_of<S: AsRef<str>>(&self, labels: &[S]) -> Probability {
        self.neg_log2_probability_of(labels)
            .map_or(0.0, |bits| (-bits).exp2())
    }

    #[inline]
    fn replay_bits<I>(&self, actions: I) -> Option<Bits>
    where
        I: IntoIterator<Item = Option<ActionId>>,
    {
        let mut state = self.initial;
        let mut bits = 0.0;
        for a in actions {
            let t = self.find(state, a?)?;
            if t.probability.is_nan() || t.probability <= 0.0 {
                return None;
            }
            bits += t.cost;
            state = t.target;
        }
        self.termination_cost[state.index()].map(|c| bits + c)
    }

    /// Binds this automaton to a foreign alphabet (usually a log's) so traces
    /// over that alphabet replay without label lookups.
    pub fn replayer<'a>(&'a self, alphabet: &Alphabet) -> Replayer<'a> {
        let translation = alphabet
            .iter()
            .map(|(_, label)| self.alphabet.get(label))
            .collect();
        Replayer {
            sdfa: self,
            translation,
        }
    }

    /// Checks the probability constraints and reports structural warnings.
    pub fn validate(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        for s in self.states() {
            let label = self.state_label(s);
            for t in &self.outgoing[s.index()] {
                if t.probability.is_nan() || t.probability <= 0.0 {
                    out.push(Diagnostic::error(
                        Some(label),
                        DiagnosticKind::NonPositiveProbability,
                        format!(
                            "transition on {:?} has probability {}",
                            self.alphabet.label(t.action),
                            t.probability
                        ),
                    ));
                }
            }
            let mass = self.outgoing_mass[s.index()];
            if mass > 1.0 + MASS_TOLERANCE {
                out.push(Diagnostic::error(
                    Some(label),
                    DiagnosticKind::MassExceeded,
                    format!("outgoing probability mass {mass} exceeds 1"),
                ));
            }
        }

        let reachable = self.reachable_from_initial();
        for s in self.states() {
            if !reachable[s.index()] {
                out.push(Diagnostic::warning(
                    Some(self.state_label(s)),
                    DiagnosticKind::Unreachable,
                    "state is unreachable from the initial state".to_owned(),
                ));
            }
        }

        let can_terminate = self.can_reach_termination();
        for s in self.states() {
            if !can_terminate[s.index()] {
                out.push(Diagnostic::warning(
                    Some(self.state_label(s)),
                    DiagnosticKind::MassLeak,
                    "no state with positive termination is reachable; probability mass leaks"
                        .to_owned(),
                ));
            }
        }
        out
    }

    fn reachable_from_initial(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial.index()] = true;
        while let Some(s) = queue.pop_front() {
            for t in &self.outgoing[s.index()] {
                if t.probability > 0.0 && !seen[t.target.index()] {
                    seen[t.target.index()] = true;
                    queue.push_back(t.target);
                }
            }
        }
        seen
    }

    fn can_reach_termination(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for s in self.states() {
            for t in &self.outgoing[s.index()] {
                if t.probability > 0.0 {
                    reverse[t.target.index()].push(s);
                }
            }
        }
        let mut ok = vec![false; n];
        let mut queue = VecDeque::new();
        for s in self.states() {
            if self.termination(s) > 0.0 {
                ok[s.index()] = true;
                queue.push_back(s);
            }
        }
        while let Some(s) = queue.pop_front() {
            for &p in &reverse[s.index()] {
                if !ok[p.index()] {
                    ok[p.index()] = true;
                    queue.push_back(p);
                }
            }
        }
        ok
    }
}

/// An [`Sdfa`] paired with a translation from another alphabet.
#[derive(Debug, Clone)]
pub struct Replayer<'a> {
    sdfa: &'a Sdfa,
    translation: Vec<Option<ActionId>>,
}

impl Replayer<'_> {
    pub fn neg_log2_probability(&self, trace: &Trace) -> Option<Bits> {
        self.sdfa
            .replay_bits(trace.actions().iter().map(|a| self.translation[a.index()]))
    }

    pub fn trace_probability(&self, trace: &Trace) -> Probability {
        self.neg_log2_probability(trace)
            .map_or(0.0, |bits| (-bits).exp2())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    MassExceeded,
    NonPositiveProbability,
    Unreachable,
    MassLeak,
    /// FDAG node whose inflow or outflow differs from its recorded frequency.
    FlowImbalance,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub state: Option<String>,
    pub message: String,
}

impl Diagnostic {
    pub(crate) fn error(state: Option<&str>, kind: DiagnosticKind, message: String) -> Self {
        Diagnostic {
            severity: Severity::Error,
            kind,
            state: state.map(str::to_owned),
            message,
        }
    }

    pub(crate) fn warning(state: Option<&str>, kind: DiagnosticKind, message: String) -> Self {
        Diagnostic {
            severity: Severity::Warning,
            kind,
            state: state.map(str::to_owned),
            message,
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        match &self.state {
            Some(s) => write!(f, "{sev}: {s:?}: {}", self.message),
            None => write!(f, "{sev}: {}", self.message),
        }
    }
}

/// Returns only the error-severity diagnostics of `a`.
pub fn constraint_errors(a: &Sdfa) -> Vec<Diagnostic> {
    a.validate()
        .into_iter()
        .filter(Diagnostic::is_error)
        .collect()
}

#[derive(Debug, Default)]
pub struct SdfaBuilder {
    state_labels: Vec<String>,
    state_index: HashMap<String, StateId>,
    alphabet: Alphabet,
    initial: Option<StateId>,
    outgoing: Vec<Vec<Transition>>,
}

impl SdfaBuilder {
    /// Adds a state, or returns the existing one with this label.
    pub fn state(&mut self, label: &str) -> StateId {
        if let Some(&s) = self.state_index.get(label) {
            return s;
        }
        let s = StateId::from_index(self.state_labels.len());
        self.state_labels.push(label.to_owned());
        self.state_index.insert(label.to_owned(), s);
        self.outgoing.push(Vec::new());
        s
    }

    pub fn initial(&mut self, label: &str) -> &mut Self {
        let s = self.state(label);
        self.initial = Some(s);
        self
    }

    /// Adds `from --action(p)--> to`, creating states as needed. Fails when
    /// `(from, action)` already has a transition or `p` is not finite.
    pub fn transition(
        &mut self,
        from: &str,
        action: &str,
        to: &str,
        p: Probability,
    ) -> Result<&mut Self> {
        if !p.is_finite() {
            return Err(Error::Model(format!(
                "transition {from:?} --{action}--> {to:?} has non-finite probability"
            )));
        }
        let a = self.alphabet.intern(action)?;
        let s = self.state(from);
        let t = self.state(to);
        let out = &mut self.outgoing[s.index()];
        match out.binary_search_by_key(&a, |tr| tr.action) {
            Ok(_) => Err(Error::Model(format!(
                "nondeterministic: state {from:?} has two transitions on {action:?}"
            ))),
            Err(pos) => {
                out.insert(
                    pos,
                    Transition {
                        action: a,
                        target: t,
                        probability: p,
                        cost: if p > 0.0 { neg_log2(p) } else { f64::NAN },
                    },
                );
                Ok(self)
            }
        }
    }

    pub fn build(self) -> Result<Sdfa> {
        let initial = self
            .initial
            .ok_or_else(|| Error::Model("SDFA has no initial state".to_owned()))?;
        let mut termination = Vec::with_capacity(self.outgoing.len());
        let mut termination_cost = Vec::with_capacity(self.outgoing.len());
        let mut outgoing_mass = Vec::with_capacity(self.outgoing.len());
        for out in &self.outgoing {
            let mass: f64 = out
                .iter()
                .map(|t| t.probability)
                .collect::<crate::numeric::CompensatedSum>()
                .value();
            let mut term = (1.0 - mass).clamp(0.0, 1.0);
            if term < TERMINATION_CLIFF {
                term = 0.0;
            }
            outgoing_mass.push(mass);
            termination.push(term);
            termination_cost.push((term > 0.0).then(|| neg_log2(term)));
        }
        Ok(Sdfa {
            state_labels: self.state_labels,
            state_index: self.state_index,
            alphabet: self.alphabet,
            initial,
            outgoing: self.outgoing,
            termination,
            termination_cost,
            outgoing_mass,
        })
    }
}
