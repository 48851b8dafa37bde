//! Ordered sequence of elementary maps realizing the discrete flow.

use crate::driving::DrivingPath;

/// One step of the chain: slit map with step size `h` and driving value `xi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlitStep {
    pub h: f64,
    pub xi: f64,
}

/// The discretized flow g_T as a composition of elementary maps; applying
/// the steps in order realizes g_T, applying the inverses in reverse order
/// realizes g_T^{-1}.
#[derive(Debug, Clone, PartialEq)]
pub struct MapChain {
    pub steps: Vec<SlitStep>,
    /// Driving value at the final time (used to recenter the last image).
    pub final_xi: f64,
    pub delta: f64,
}

impl MapChain {
    pub fn from_driving(path: &DrivingPath) -> Self {
        let n = path.n_steps();
        let steps = (0..n).map(|k| SlitStep { h: path.step, xi: path.values[k] }).collect();
        Self { steps, final_xi: path.values[n], delta: 1.0 }
    }

    pub fn constant(xi: f64, h: f64, n_steps: usize) -> Self {
        Self {
            steps: vec![SlitStep { h, xi }; n_steps],
            final_xi: xi,
            delta: 1.0,
        }
    }

    pub fn from_steps(steps: Vec<SlitStep>, final_xi: f64) -> Self {
        Self { steps, final_xi, delta: 1.0 }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Total evolution time T = sum of the step sizes.
    pub fn total_time(&self) -> f64 {
        self.steps.iter().map(|s| s.h).sum()
    }

    /// Driving value in force after step `k` completed (time t_{k+1}).
    pub fn xi_after(&self, k: usize) -> f64 {
        if k + 1 < self.steps.len() {
            self.steps[k + 1].xi
        } else {
            self.final_xi
        }
    }

    /// Elapsed time after step `k` completed.
    pub fn time_after(&self, k: usize) -> f64 {
        self.steps[..=k].iter().map(|s| s.h).sum()
    }
}
