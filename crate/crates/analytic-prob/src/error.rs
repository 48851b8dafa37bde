use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProbError {
    #[error("kappa must be positive and finite, got {0}")]
    InvalidKappa(f64),

    #[error("input lies on the branch-point singularity at the origin")]
    SingularInput,

    #[error("integral diverges near the origin for kappa = {kappa} <= 4")]
    DivergentIntegral { kappa: f64 },

    #[error("{what} is not defined for kappa = {kappa}; requires {requires}")]
    UnsupportedRegime {
        what: &'static str,
        kappa: f64,
        requires: &'static str,
    },

    #[error("quadrature did not reach tolerance {tol:.3e} (residual error {best:.3e})")]
    QuadratureFailed { tol: f64, best: f64 },

    #[error("point {z} outside the evaluation domain: {reason}")]
    OutsideDomain { z: Complex64, reason: &'static str },

    #[error("non-finite input")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, ProbError>;
