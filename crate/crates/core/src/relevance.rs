//! Entropic relevance of an SDFA to an event log.
//!
//! Every log trace is coded either by the automaton (when it has positive
//! probability there) or symbol by symbol with an equiprobable background
//! code over the log's alphabet plus an end marker. A biased selector bit per
//! trace chooses between the two. All reported figures are bits per trace.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{constraint_errors, EventLog, Replayer, Sdfa, Trace};
use crate::numeric::{Bits, CompensatedSum, Probability};

/// Binary entropy `H0(p)` in bits, with `H0(0) = H0(1) = 0`.
pub fn h0(p: Probability) -> Result<Bits> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("probability {p} is outside [0, 1]")));
    }
    if p == 0.0 || p == 1.0 {
        return Ok(0.0);
    }
    let q = 1.0 - p;
    Ok(-p * p.log2() - q * q.log2())
}

/// Equiprobable code over an alphabet augmented with an end-of-trace symbol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BackgroundModel {
    alphabet_size: usize,
    symbol_bits: Bits,
}

impl BackgroundModel {
    pub fn new(alphabet_size: usize) -> Self {
        BackgroundModel {
            alphabet_size,
            symbol_bits: (1.0 + alphabet_size as f64).log2(),
        }
    }

    /// Background code over the actions of the log being scored.
    pub fn for_log(e: &EventLog) -> Self {
        Self::new(e.alphabet().len())
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    /// `(1 + len) * log2(1 + |alphabet|)`.
    pub fn bits(&self, trace_len: usize) -> Bits {
        (1 + trace_len) as f64 * self.symbol_bits
    }
}

pub fn background_bits(trace: &Trace, bg: &BackgroundModel) -> Bits {
    bg.bits(trace.len())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceCost {
    pub bits: Bits,
    pub fits: bool,
}

/// Compression cost of one trace, excluding the selector.
pub fn trace_cost(trace: &Trace, bg: &BackgroundModel, model: &Replayer<'_>) -> TraceCost {
    match model.neg_log2_probability(trace) {
        Some(bits) => TraceCost { bits, fits: true },
        None => TraceCost {
            bits: bg.bits(trace.len()),
            fits: false,
        },
    }
}

/// As [`trace_cost`] for a trace given by labels.
pub fn trace_cost_of<S: AsRef<str>>(labels: &[S], bg: &BackgroundModel, model: &Sdfa) -> TraceCost {
    match model.neg_log2_probability_of(labels) {
        Some(bits) => TraceCost { bits, fits: true },
        None => TraceCost {
            bits: bg.bits(labels.len()),
            fits: false,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariantCost {
    pub trace: Vec<String>,
    pub multiplicity: u64,
    pub fits: bool,
    pub cost_bits: Bits,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RelevanceReport {
    pub rho: Probability,
    pub selector_bits: Bits,
    pub background_bits: Bits,
    pub model_bits: Bits,
    pub relevance: Bits,
    pub fitting_traces: u64,
    pub nonfitting_traces: u64,
    /// In canonical trace order.
    pub per_variant: Vec<VariantCost>,
}

/// Fraction of log traces with positive probability under `a`.
pub fn rho(e: &EventLog, a: &Sdfa) -> Result<Probability> {
    if e.is_empty() {
        return Err(Error::EmptyLog);
    }
    let r = a.replayer(e.alphabet());
    let fitting: u64 = e
        .variants()
        .filter(|(t, _)| r.neg_log2_probability(t).is_some())
        .map(|(_, m)| m)
        .sum();
    Ok(fitting as f64 / e.total() as f64)
}

/// Entropic relevance of `a` to `e` with its constituents. Each distinct
/// variant is replayed once; its cost is weighted by relative frequency.
pub fn relevance(e: &EventLog, a: &Sdfa) -> Result<RelevanceReport> {
    if e.is_empty() {
        return Err(Error::EmptyLog);
    }
    let errors = constraint_errors(a);
    if !errors.is_empty() {
        return Err(Error::InvalidSdfa(errors));
    }
    let bg = BackgroundModel::for_log(e);
    let replayer = a.replayer(e.alphabet());
    let variants = e.canonical_variants();
    let costs: Vec<TraceCost> = variants
        .par_iter()
        .with_min_len(256)
        .map(|(t, _)| trace_cost(t, &bg, &replayer))
        .collect();

    let total = e.total() as f64;
    let mut model = CompensatedSum::new();
    let mut background = CompensatedSum::new();
    let mut fitting = 0u64;
    let mut per_variant = Vec::with_capacity(variants.len());
    for ((trace, m), cost) in variants.iter().zip(&costs) {
        let weight = *m as f64 / total;
        if cost.fits {
            fitting += m;
            model.add(weight * cost.bits);
        } else {
            background.add(weight * cost.bits);
        }
        per_variant.push(VariantCost {
            trace: e.labels_of(trace),
            multiplicity: *m,
            fits: cost.fits,
            cost_bits: cost.bits,
        });
    }
    let rho = fitting as f64 / total;
    let selector_bits = h0(rho)?;
    let model_bits = model.value();
    let background_bits = background.value();
    Ok(RelevanceReport {
        rho,
        selector_bits,
        background_bits,
        model_bits,
        relevance: selector_bits + background_bits + model_bits,
        fitting_traces: fitting,
        nonfitting_traces: e.total() - fitting,
        per_variant,
    })
}

/// Shannon entropy of the log's variant distribution: no automaton scores a
/// lower relevance on `e`.
pub fn relevance_lower_bound(e: &EventLog) -> Result<Bits> {
    if e.is_empty() {
        return Err(Error::EmptyLog);
    }
    let total = e.total() as f64;
    let mut acc = CompensatedSum::new();
    for (_, m) in e.canonical_variants() {
        let p = m as f64 / total;
        acc.add(-p * p.log2());
    }
    Ok(acc.value().max(0.0))
}
