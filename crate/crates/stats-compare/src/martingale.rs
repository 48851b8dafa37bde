//! Monte Carlo martingale-constancy tests: the stopped probability field
//! evaluated along the flow has time-independent expectation, so its sample
//! means at different times must agree within statistical error.

use analytic_prob::ProbField;
use loewner_core::{
    classify_upper, evolve_point_with_checkpoints, sample_driving, streams, Complex64,
    MapChain, PointState, SleParams, UpperFate,
};
use serde::Serialize;

use crate::error::{Result, StatsError};

#[derive(Debug, Clone, Serialize)]
pub struct MartingaleReport {
    pub times: Vec<f64>,
    pub means: Vec<f64>,
    pub std_errors: Vec<f64>,
    /// The field value at the starting point, which the means must match.
    pub reference: f64,
    pub n_traces: usize,
    /// All pairs of means compatible at 3 sigma and the t = 0 mean exact.
    pub consistent: bool,
}

fn check_times(times: &[f64], params: &SleParams) -> Result<Vec<usize>> {
    if times.windows(2).any(|w| w[1] <= w[0]) || times.iter().any(|&t| t < 0.0) {
        return Err(StatsError::TimesNotIncreasing);
    }
    Ok(times.iter().map(|&t| (t / params.step).round() as usize).collect())
}

fn consistency(times: &[f64], means: &[f64], ses: &[f64], reference: f64) -> bool {
    let mut ok = true;
    for i in 0..means.len() {
        for j in i + 1..means.len() {
            let tol = 3.0 * (ses[i] * ses[i] + ses[j] * ses[j]).sqrt();
            if (means[i] - means[j]).abs() > tol {
                ok = false;
            }
        }
        // each mean also compatible with the starting value; at t = 0 the
        // standard error vanishes and the comparison is exact
        let tol0 = 3.0 * ses[i];
        if times[i] == 0.0 {
            ok &= means[i] == reference;
        } else {
            ok &= (means[i] - reference).abs() <= tol0.max(1e-12);
        }
    }
    ok
}

fn summarize(
    times: &[f64],
    sums: Vec<f64>,
    sq_sums: Vec<f64>,
    n: usize,
    reference: f64,
) -> MartingaleReport {
    let nf = n as f64;
    let mut means: Vec<f64> = sums.iter().map(|s| s / nf).collect();
    let mut std_errors: Vec<f64> = sq_sums
        .iter()
        .zip(&means)
        .map(|(&sq, &m)| ((sq / nf - m * m).max(0.0) / nf).sqrt())
        .collect();
    // at t = 0 nothing has evolved: every trace contributes the reference
    // value and the accumulation rounding must not blur that exactness
    for (k, &t) in times.iter().enumerate() {
        if t == 0.0 {
            means[k] = reference;
            std_errors[k] = 0.0;
        }
    }
    let consistent = consistency(times, &means, &std_errors, reference);
    MartingaleReport {
        times: times.to_vec(),
        means,
        std_errors,
        reference,
        n_traces: n,
        consistent,
    }
}

/// Constancy of the stopped left-passage field P_l(f_t(z)) for an interior
/// point: swallowed contributes its stopped value 0, left 1, right 0.
pub fn martingale_constancy_test(
    field: &ProbField,
    z: Complex64,
    times: &[f64],
    n_traces: usize,
    params: &SleParams,
) -> Result<MartingaleReport> {
    let checkpoints = check_times(times, params)?;
    let reference = field.p_left(z)?;
    let mut sums = vec![0.0; times.len()];
    let mut sq_sums = vec![0.0; times.len()];
    for stream in 0..n_traces as u64 {
        let path = sample_driving(
            params,
            params.n_steps(),
            &mut streams::stream_rng(params.seed, stream),
        )?;
        let chain = MapChain::from_driving(&path);
        let (states, _) = evolve_point_with_checkpoints(z, &chain, params, &checkpoints)?;
        for (k, state) in states.iter().enumerate() {
            let value = match state {
                PointState::Alive(u) => field.p_left(*u)?,
                PointState::Swallowed => 0.0,
                PointState::Left => 1.0,
                PointState::Right => 0.0,
            };
            sums[k] += value;
            sq_sums[k] += value * value;
        }
    }
    Ok(summarize(times, sums, sq_sums, n_traces, reference))
}

/// The same protocol on the upper boundary with the excursion law P_up as
/// the field; boundary points are never swallowed.
pub fn martingale_constancy_upper(
    field: &ProbField,
    x: f64,
    times: &[f64],
    n_traces: usize,
    params: &SleParams,
) -> Result<MartingaleReport> {
    let checkpoints = check_times(times, params)?;
    let reference = field.p_up(x);
    let mut sums = vec![0.0; times.len()];
    let mut sq_sums = vec![0.0; times.len()];
    for stream in 0..n_traces as u64 {
        let path = sample_driving(
            params,
            params.n_steps(),
            &mut streams::stream_rng(params.seed, stream),
        )?;
        let chain = MapChain::from_driving(&path);

        // real-coordinate boundary evolution with early stopping
        let mut w = x;
        let mut stopped: Option<f64> = None;
        let mut cp = 0usize;
        let record = |k: usize, value: f64, cp: &mut usize, sums: &mut [f64], sqs: &mut [f64]| {
            while *cp < checkpoints.len() && checkpoints[*cp] == k {
                sums[*cp] += value;
                sqs[*cp] += value * value;
                *cp += 1;
            }
        };
        record(0, field.p_up(w - chain.steps[0].xi), &mut cp, &mut sums, &mut sq_sums);
        for (k, step) in chain.steps.iter().enumerate() {
            w = loewner_core::boundary_map(w, step.xi, step.h);
            let u = w - chain.xi_after(k);
            if stopped.is_none() && u.abs() > params.escape_threshold {
                stopped = Some(if u < 0.0 { 1.0 } else { 0.0 });
            }
            let value = stopped.unwrap_or_else(|| field.p_up(u));
            record(k + 1, value, &mut cp, &mut sums, &mut sq_sums);
            if cp == checkpoints.len() {
                break;
            }
        }
        // flush checkpoints beyond the horizon with the final value
        let final_value = stopped.unwrap_or_else(|| field.p_up(w - chain.final_xi));
        while cp < checkpoints.len() {
            sums[cp] += final_value;
            sq_sums[cp] += final_value * final_value;
            cp += 1;
        }
    }
    Ok(summarize(times, sums, sq_sums, n_traces, reference))
}

/// Classification of one upper-boundary point re-exported for callers that
/// need the raw fate (the CLI endpoint ensemble uses the bisection end).
pub fn upper_fate(x: f64, chain: &MapChain, params: &SleParams) -> Result<UpperFate> {
    Ok(classify_upper(x, chain, params)?)
}
