//! Pareto frontier over (model size, relevance); smaller is better on both.

use std::cmp::Ordering;
use std::io::{Read, Write};

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParetoPoint {
    pub model: String,
    pub method: String,
    pub size: u64,
    pub relevance: f64,
    pub dominated: bool,
}

impl ParetoPoint {
    pub fn new(method: &str, model: &str, size: u64, relevance: f64) -> Self {
        ParetoPoint {
            model: model.to_owned(),
            method: method.to_owned(),
            size,
            relevance,
            dominated: false,
        }
    }
}

fn rank(a: &ParetoPoint, b: &ParetoPoint) -> Ordering {
    a.size
        .cmp(&b.size)
        .then(a.relevance.total_cmp(&b.relevance))
        .then_with(|| a.method.cmp(&b.method))
        .then_with(|| a.model.cmp(&b.model))
}

/// Sets `dominated` on every point that some other point matches or beats
/// in both size and relevance, strictly in at least one.
pub fn mark_dominated(points: &mut [ParetoPoint]) {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| rank(&points[i], &points[j]));
    // Lowest relevance among points of strictly smaller size.
    let mut best_smaller = f64::INFINITY;
    let mut i = 0;
    while i < order.len() {
        let size = points[order[i]].size;
        let group_min = points[order[i]].relevance;
        let mut j = i;
        while j < order.len() && points[order[j]].size == size {
            let p = &mut points[order[j]];
            p.dominated = best_smaller <= p.relevance || group_min < p.relevance;
            j += 1;
        }
        best_smaller = best_smaller.min(group_min);
        i = j;
    }
}

/// Non-dominated points in ascending size (ties by lower relevance). Points
/// with identical coordinates collapse to the first by method, then model.
pub fn frontier(points: &[ParetoPoint]) -> Vec<ParetoPoint> {
    let mut all = points.to_vec();
    mark_dominated(&mut all);
    let mut front: Vec<ParetoPoint> = all.into_iter().filter(|p| !p.dominated).collect();
    front.sort_by(rank);
    front.dedup_by(|b, a| a.size == b.size && a.relevance == b.relevance);
    front
}

/// Reads points from a sweep-style CSV. `size` and `relevance` are
/// required; `method` defaults to `default_method`; the model id comes from
/// a `model` column, else `method@threshold`, else `method#row`.
pub fn read_points<R: Read>(input: R, default_method: &str) -> Result<Vec<ParetoPoint>> {
    let mut r = csv::Reader::from_reader(input);
    let headers = r.headers()?.clone();
    let find = |name: &str| headers.iter().position(|h| h.trim() == name);
    let need = |name: &str| find(name).ok_or_else(|| Error::MissingColumn(name.to_owned()));
    let size_col = need("size")?;
    let rel_col = need("relevance")?;
    let method_col = find("method");
    let model_col = find("model");
    let threshold_col = find("threshold");

    let mut points = Vec::new();
    for (row, rec) in r.records().enumerate() {
        let rec = rec?;
        let cell = |c: usize| rec.get(c).unwrap_or_default().trim();
        let bad =
            |col: &str, v: &str| Error::Domain(format!("row {}: invalid {col} {v:?}", row + 2));
        let size: u64 = cell(size_col)
            .parse()
            .map_err(|_| bad("size", cell(size_col)))?;
        let relevance: f64 = cell(rel_col)
            .parse()
            .ok()
            .filter(|v: &f64| v.is_finite())
            .ok_or_else(|| bad("relevance", cell(rel_col)))?;
        let method = method_col
            .map(cell)
            .filter(|m| !m.is_empty())
            .unwrap_or(default_method);
        let model = match (model_col, threshold_col) {
            (Some(c), _) if !cell(c).is_empty() => cell(c).to_owned(),
            (_, Some(c)) => format!("{method}@{}", cell(c)),
            _ => format!("{method}#{}", row + 1),
        };
        points.push(ParetoPoint::new(method, &model, size, relevance));
    }
    Ok(points)
}

pub fn write_frontier_csv<W: Write>(points: &[ParetoPoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["method", "model", "size", "relevance"])?;
    for p in points {
        w.write_record([
            p.method.clone(),
            p.model.clone(),
            p.size.to_string(),
            format!("{:.6}", p.relevance),
        ])?;
    }
    w.flush()?;
    Ok(())
}
