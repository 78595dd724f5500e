//! Small numeric helpers shared by replay and scoring.

pub type Probability = f64;
pub type Bits = f64;

/// Tolerance on the per-state outgoing mass constraint.
pub const MASS_TOLERANCE: f64 = 1e-9;

/// Termination mass below this value is treated as zero.
pub const TERMINATION_CLIFF: f64 = 1e-12;

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// `-log2(p)` for `p` in (0, 1].
#[inline]
pub fn neg_log2(p: f64) -> Bits {
    let bits = -p.log2();
    // -log2(1.0) is -0.0
    if bits == 0.0 {
        0.0
    } else {
        bits
    }
}

/// Smallest integer `n` with `n >= x`, treating values within a relative
/// 1e-9 of an integer as that integer.
pub(crate) fn tolerant_ceil(x: f64) -> u64 {
    let r = x.round();
    if (x - r).abs() <= 1e-9 * x.abs().max(1.0) {
        r.max(0.0) as u64
    } else {
        x.ceil().max(0.0) as u64
    }
}
