//! Statistical confrontation of simulation with theory: empirical CDFs, the
//! max-CDF-distance statistic with its distribution-free critical value,
//! finite-size scaling fits, and martingale-constancy checks.

mod ecdf;
mod error;
mod martingale;
mod scaling;
mod theory;

pub use ecdf::{dk_critical_99, max_cdf_distance, ComparisonReport, EmpiricalCdf};
pub use error::{Result, StatsError};
pub use martingale::{
    martingale_constancy_test, martingale_constancy_upper, upper_fate, MartingaleReport,
};
pub use scaling::{scaling_fit, ScalingFit, EXPONENT_BAND};
pub use theory::ising_theory_cdf;
