//! Trace reconstruction: gamma(t) = lim g_t^{-1}(xi_t + i eps).

use num_complex::Complex64;

use crate::chain::MapChain;
use crate::error::{LoewnerError, Result};
use crate::params::SleParams;
use crate::slit_map::elementary_inverse_d1;

/// Sampled trace of the evolution.
#[derive(Debug, Clone)]
pub struct Trace {
    pub times: Vec<f64>,
    pub points: Vec<Complex64>,
}

/// Reconstruct the trace at every step boundary: the point at time t_k is
/// the image of xi_k + i eps_tip under the inverses of steps k-1, ..., 0.
pub fn trace(chain: &MapChain, params: &SleParams) -> Result<Trace> {
    params.validate()?;
    if chain.is_empty() {
        return Err(LoewnerError::EmptyChain);
    }
    let delta = chain.delta;
    let d2 = delta * delta;
    let n = chain.len();

    let mut times = Vec::with_capacity(n + 1);
    let mut points = Vec::with_capacity(n + 1);
    let mut elapsed = 0.0;

    for k in 0..=n {
        let xi_k = if k < n { chain.steps[k].xi } else { chain.final_xi } / delta;
        let mut z = Complex64::new(xi_k, params.eps_tip);
        for j in (0..k).rev() {
            z = elementary_inverse_d1(z, chain.steps[j].xi / delta, chain.steps[j].h / d2)?;
        }
        times.push(elapsed);
        points.push(z * delta);
        if k < n {
            elapsed += chain.steps[k].h;
        }
    }
    Ok(Trace { times, points })
}
