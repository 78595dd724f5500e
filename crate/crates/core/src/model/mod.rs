//! Traces, logs, stochastic languages, and stochastic deterministic finite
//! automata.

mod alphabet;
mod enumerate;
mod language;
mod log;
mod sdfa;

pub use alphabet::{validate_action_label, ActionId, Alphabet, INPUT_SENTINEL, OUTPUT_SENTINEL};
pub use enumerate::enumerate_language;
pub use language::StochasticLanguage;
pub use log::{EventLog, EventLogBuilder, Trace};
pub use sdfa::{
    constraint_errors, Diagnostic, DiagnosticKind, Replayer, Sdfa, SdfaBuilder, Severity, StateId,
    TransitionRef,
};

/// Maximum-likelihood language of a log; fails on an empty log.
pub fn language_of_log(e: &EventLog) -> crate::Result<StochasticLanguage> {
    e.language()
}
