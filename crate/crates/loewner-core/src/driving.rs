//! The driving path: piecewise-constant samples of xi_t = sqrt(kappa) B_t.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{LoewnerError, Result};
use crate::params::SleParams;

/// Piecewise-constant driving: `values[k]` holds on [k h, (k+1) h).
#[derive(Debug, Clone, PartialEq)]
pub struct DrivingPath {
    pub step: f64,
    pub values: Vec<f64>,
}

impl DrivingPath {
    /// Constant driving, mostly for deterministic oracles.
    pub fn constant(xi: f64, step: f64, n_steps: usize) -> Self {
        Self { step, values: vec![xi; n_steps + 1] }
    }

    /// Number of evolution steps (one less than stored values).
    pub fn n_steps(&self) -> usize {
        self.values.len() - 1
    }

    /// The sign-flipped path; evolution is equivariant under this mirror.
    pub fn mirrored(&self) -> Self {
        Self { step: self.step, values: self.values.iter().map(|v| -v).collect() }
    }
}

/// Sample a Brownian driving path: xi_0 = 0 and i.i.d. Gaussian increments of
/// variance kappa * step. Deterministic given the generator state.
pub fn sample_driving<R: Rng + ?Sized>(
    params: &SleParams,
    n_steps: usize,
    rng: &mut R,
) -> Result<DrivingPath> {
    if n_steps < 1 {
        return Err(LoewnerError::InvalidParams("n_steps must be at least 1".into()));
    }
    params.validate()?;
    let sigma = (params.kappa * params.step).sqrt();
    let mut values = Vec::with_capacity(n_steps + 1);
    let mut current = 0.0;
    values.push(current);
    for _ in 0..n_steps {
        let g: f64 = rng.sample(StandardNormal);
        current += sigma * g;
        values.push(current);
    }
    Ok(DrivingPath { step: params.step, values })
}
