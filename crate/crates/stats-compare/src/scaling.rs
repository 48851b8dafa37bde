//! Finite-size scaling: least-squares fit of log delta against log L.

use serde::Serialize;

use crate::error::{Result, StatsError};

/// Band within which the decay exponent counts as compatible with 1/L.
pub const EXPONENT_BAND: (f64, f64) = (-1.5, -0.5);

#[derive(Debug, Clone, Serialize)]
pub struct ScalingFit {
    pub exponent: f64,
    /// Coefficient of determination of the log-log regression.
    pub quality: f64,
    /// Whether the exponent falls in [-1.5, -0.5].
    pub within_band: bool,
}

/// Fit delta(L) ~ L^exponent by least squares in log-log coordinates.
pub fn scaling_fit(deltas: &[(usize, f64)]) -> Result<ScalingFit> {
    if deltas.len() < 3 {
        return Err(StatsError::TooFewSizes(deltas.len()));
    }
    for &(_, d) in deltas {
        if d.is_nan() || d <= 0.0 {
            return Err(StatsError::NonPositiveDelta(d));
        }
    }
    let pts: Vec<(f64, f64)> =
        deltas.iter().map(|&(l, d)| ((l as f64).ln(), d.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 =
        pts.iter().map(|p| (p.1 - slope * p.0 - intercept).powi(2)).sum();
    let ss_tot: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    let quality = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Ok(ScalingFit {
        exponent: slope,
        quality,
        within_band: (EXPONENT_BAND.0..=EXPONENT_BAND.1).contains(&slope),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_inverse_law_recovers_minus_one() {
        let data: Vec<(usize, f64)> = [8, 12, 16, 24, 40].iter().map(|&l| (l, 0.7 / l as f64)).collect();
        let fit = scaling_fit(&data).unwrap();
        assert_relative_eq!(fit.exponent, -1.0, epsilon = 1e-12);
        assert_relative_eq!(fit.quality, 1.0, epsilon = 1e-12);
        assert!(fit.within_band);
    }

    #[test]
    fn noisy_inverse_law_stays_near_minus_one() {
        // +-5% deterministic perturbation pattern
        let noise = [1.05, 0.96, 1.03, 0.95, 1.04, 0.97];
        let data: Vec<(usize, f64)> = [8usize, 10, 14, 20, 26, 40]
            .iter()
            .zip(noise.iter())
            .map(|(&l, &eps)| (l, 0.7 * eps / l as f64))
            .collect();
        let fit = scaling_fit(&data).unwrap();
        assert!(fit.exponent > -1.2 && fit.exponent < -0.8, "exponent {}", fit.exponent);
        assert!(fit.within_band);
    }

    #[test]
    fn constant_deltas_are_flagged_non_decaying() {
        let data: Vec<(usize, f64)> = [8, 16, 32].iter().map(|&l| (l, 0.25)).collect();
        let fit = scaling_fit(&data).unwrap();
        assert!(fit.exponent.abs() < 1e-12);
        assert!(!fit.within_band);
    }

    #[test]
    fn degenerate_inputs_error() {
        assert!(matches!(
            scaling_fit(&[(8, 0.1), (16, 0.05)]),
            Err(StatsError::TooFewSizes(2))
        ));
        assert!(matches!(
            scaling_fit(&[(8, 0.1), (16, 0.0), (32, 0.01)]),
            Err(StatsError::NonPositiveDelta(_))
        ));
    }
}
