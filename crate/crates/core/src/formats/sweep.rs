//! Threshold sweeps: filter, discover, convert, and score at each threshold.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::discovery::{build_fdag, fdag_to_sdfa, filter_log, Threshold};
use crate::error::{Error, Result};
use crate::model::EventLog;
use crate::relevance::relevance;

pub const SWEEP_HEADER: [&str; 9] = [
    "threshold",
    "states",
    "edges",
    "size",
    "rho",
    "selector_bits",
    "background_bits",
    "model_bits",
    "relevance",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub threshold: f64,
    pub states: usize,
    pub edges: usize,
    pub size: usize,
    pub rho: f64,
    pub selector_bits: f64,
    pub background_bits: f64,
    pub model_bits: f64,
    pub relevance: f64,
}

/// Parses `start:end:step`, a comma list, or a single value into an
/// ascending, non-empty list of thresholds.
pub fn parse_thresholds(spec: &str) -> Result<Vec<Threshold>> {
    let bad = |why: &str| Error::Domain(format!("threshold list {spec:?}: {why}"));
    let num = |s: &str| s.trim().parse::<f64>().map_err(|_| bad("not a number"));
    let values: Vec<f64> = if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, end, step] = parts[..] else {
            return Err(bad("expected start:end:step"));
        };
        let (start, end, step) = (num(start)?, num(end)?, num(step)?);
        if step.is_nan() || step <= 0.0 || end < start {
            return Err(bad("step must be positive and end >= start"));
        }
        let n = ((end - start) / step).round();
        if (start + n * step - end).abs() > 1e-9 {
            return Err(bad("end is not reachable from start in whole steps"));
        }
        (0..=n as u64)
            .map(|i| round12(start + i as f64 * step))
            .collect()
    } else {
        spec.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(num)
            .collect::<Result<_>>()?
    };
    if values.is_empty() {
        return Err(bad("empty"));
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(bad("thresholds must be strictly ascending"));
    }
    values.into_iter().map(Threshold::new).collect()
}

fn round12(x: f64) -> f64 {
    (x * 1e12).round() / 1e12
}

/// One row per threshold, in the given order. Thresholds are evaluated in
/// parallel; the model at each threshold is scored against the full log.
pub fn sweep(e: &EventLog, thresholds: &[Threshold]) -> Result<Vec<SweepRow>> {
    if e.is_empty() {
        return Err(Error::EmptyLog);
    }
    thresholds
        .par_iter()
        .map(|&k| {
            let model = fdag_to_sdfa(&build_fdag(&filter_log(e, k)))?;
            let r = relevance(e, &model)?;
            let (states, edges) = (model.state_count(), model.transition_count());
            Ok(SweepRow {
                threshold: k.value(),
                states,
                edges,
                size: states + edges,
                rho: r.rho,
                selector_bits: r.selector_bits,
                background_bits: r.background_bits,
                model_bits: r.model_bits,
                relevance: r.relevance,
            })
        })
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            format!("{:.6}", r.threshold),
            r.states.to_string(),
            r.edges.to_string(),
            r.size.to_string(),
            format!("{:.6}", r.rho),
            format!("{:.6}", r.selector_bits),
            format!("{:.6}", r.background_bits),
            format!("{:.6}", r.model_bits),
            format!("{:.6}", r.relevance),
        ])?;
    }
    w.flush()?;
    Ok(())
}
