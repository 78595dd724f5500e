//! Log filtering, directly-follows graph construction, and conversion of
//! graphs and logs into automata.

mod convert;
mod fdag;
mod pta;

pub use convert::{fdag_to_sdfa, ExactConversion, ExactTermination, ExactTransition};
pub use fdag::{build_fdag, Fdag, Node};
pub use pta::prefix_tree_sdfa;

use std::fmt;

use crate::error::{Error, Result};
use crate::model::{EventLog, Sdfa};
use crate::numeric::tolerant_ceil;

/// Fraction of the log's traces that survive variant filtering, in (0, 1].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Threshold(f64);

impl Threshold {
    pub const FULL: Threshold = Threshold(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value > 0.0 && value <= 1.0 {
            Ok(Threshold(value))
        } else {
            Err(Error::Domain(format!(
                "threshold {value} is outside (0, 1]"
            )))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Threshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Keeps the most frequent variants until they cover at least
/// `ceil(k * |E|)` traces. Ties in frequency are broken by canonical trace
/// order, so the result does not depend on map iteration order.
pub fn filter_log(e: &EventLog, k: Threshold) -> EventLog {
    if k.value() >= 1.0 {
        return e.clone();
    }
    let required = tolerant_ceil(k.value() * e.total() as f64);
    let order = e.trace_order();
    let mut variants: Vec<_> = e.variants().collect();
    variants.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| order(a.0, b.0)));

    let mut covered = 0u64;
    let mut keep = 0;
    for (_, m) in &variants {
        if covered >= required {
            break;
        }
        covered += m;
        keep += 1;
    }
    e.restricted(variants.into_iter().take(keep))
}

/// Number of states plus number of transitions.
pub fn model_size(a: &Sdfa) -> usize {
    a.state_count() + a.transition_count()
}
