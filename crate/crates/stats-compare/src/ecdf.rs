//! Empirical distribution functions and the max-CDF-distance statistic.

use serde::Serialize;

use crate::error::{Result, StatsError};

/// Sorted samples with right-continuous step CDF.
#[derive(Debug, Clone)]
pub struct EmpiricalCdf {
    samples: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(mut samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(StatsError::EmptySample);
        }
        samples.sort_by(|a, b| a.total_cmp(b));
        Ok(Self { samples })
    }

    pub fn n(&self) -> usize {
        self.samples.len()
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    /// F_hat(x) = #{s <= x} / n.
    pub fn eval(&self, x: f64) -> f64 {
        let k = self.samples.partition_point(|&s| s <= x);
        k as f64 / self.samples.len() as f64
    }
}

/// Comparison of an empirical CDF against a theoretical one.
#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    /// Max absolute CDF difference, both one-sided values at every jump.
    pub delta: f64,
    pub n: usize,
    #[serde(rename = "L")]
    pub l: Option<usize>,
    /// Distribution-free 99% critical value for this sample size.
    pub dk_critical: f64,
    pub pass: bool,
}

impl ComparisonReport {
    /// Recompute the pass flag against an explicit threshold.
    pub fn with_threshold(mut self, threshold: f64) -> Self {
        self.pass = self.delta <= threshold;
        self
    }

    pub fn with_l(mut self, l: usize) -> Self {
        self.l = Some(l);
        self
    }
}

/// 99% critical value of the one-sample max-CDF-distance statistic,
/// distribution-free (Stephens' small-sample scaling of the Kolmogorov
/// distribution quantile 1.62762).
pub fn dk_critical_99(n: usize) -> f64 {
    let sn = (n as f64).sqrt();
    1.62762 / (sn + 0.12 + 0.11 / sn)
}

/// Supremum distance between the empirical CDF and a monotone theory CDF,
/// taking both one-sided values at every jump.
pub fn max_cdf_distance<F>(emp: &EmpiricalCdf, theory: F) -> Result<ComparisonReport>
where
    F: Fn(f64) -> f64,
{
    let n = emp.n();
    let nf = n as f64;
    let mut delta: f64 = 0.0;
    let mut prev_f = f64::NEG_INFINITY;
    let samples = emp.samples();
    let mut i = 0;
    while i < n {
        let x = samples[i];
        // group ties: the jump at x spans [lower, upper]
        let mut j = i;
        while j < n && samples[j] == x {
            j += 1;
        }
        let f = theory(x);
        // left limit, so step-function theories (self-comparison) work too
        let f_left = theory(x.next_down());
        if !(0.0..=1.0).contains(&f) || f + 1e-12 < prev_f || f_left > f + 1e-12 {
            return Err(StatsError::NonMonotoneTheory { at: x });
        }
        prev_f = f;
        let lower = i as f64 / nf;
        let upper = j as f64 / nf;
        delta = delta.max((f_left - lower).abs()).max((upper - f).abs());
        i = j;
    }
    let dk = dk_critical_99(n);
    Ok(ComparisonReport { delta, n, l: None, dk_critical: dk, pass: delta <= dk })
}
