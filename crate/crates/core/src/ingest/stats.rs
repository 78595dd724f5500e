use serde::Serialize;

use crate::model::EventLog;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogStats {
    pub traces: u64,
    pub events: u64,
    pub variants: usize,
    pub alphabet_size: usize,
    pub min_trace_length: usize,
    pub max_trace_length: usize,
    pub mean_trace_length: f64,
}

pub fn log_stats(e: &EventLog) -> LogStats {
    let events = e.total_events();
    let lengths = || e.variants().map(|(t, _)| t.len());
    LogStats {
        traces: e.total(),
        events,
        variants: e.variant_count(),
        alphabet_size: e.alphabet().len(),
        min_trace_length: lengths().min().unwrap_or(0),
        max_trace_length: lengths().max().unwrap_or(0),
        mean_trace_length: if e.total() == 0 {
            0.0
        } else {
            events as f64 / e.total() as f64
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::{e1, e2};

    #[test]
    fn stats_of_running_examples() {
        let s = log_stats(&e1());
        assert_eq!(
            (s.traces, s.variants, s.alphabet_size, s.events),
            (64, 7, 5, 62)
        );
        assert_eq!((s.min_trace_length, s.max_trace_length), (0, 5));
        assert_eq!(s.mean_trace_length, 62.0 / 64.0);
        let s = log_stats(&e2());
        assert_eq!((s.traces, s.variants, s.alphabet_size), (1000, 8, 5));
    }

    #[test]
    fn empty_log_is_all_zeros() {
        let s = log_stats(&EventLog::builder().build());
        assert_eq!(
            s,
            LogStats {
                traces: 0,
                events: 0,
                variants: 0,
                alphabet_size: 0,
                min_trace_length: 0,
                max_trace_length: 0,
                mean_trace_length: 0.0,
            }
        );
    }
}
