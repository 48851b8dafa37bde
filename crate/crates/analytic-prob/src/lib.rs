//! Analytic visiting and excursion probabilities for the dipolar
//! Schramm–Loewner evolution in the strip 0 < Im z < pi.
//!
//! Everything is built from one special function: the branch-sensitive
//! antiderivative F(z) of (sinh u/2)^{-4/kappa} taken from -infinity, with
//! arg(sinh z/2) in [0, pi]. The left-passage probability, the swallowing
//! probability (kappa > 4), the upper-boundary hitting law (all kappa), and
//! their differential certificates all reduce to contour integrals of this
//! power, evaluated by adaptive Gauss–Kronrod quadrature with analytic
//! exponential tails.

pub mod branch;
pub mod cft;
mod error;
pub mod field;
mod integrals;
pub mod quad;
pub mod residual;

pub use branch::{integrand, sinh_half_polar, STRIP_HEIGHT};
pub use cft::{cft_constants, h_rs, CftConstants};
pub use error::{ProbError, Result};
pub use field::{const_i, const_j, ProbField};
pub use integrals::QuadConfig;
pub use residual::{ode_residual_of, pde_residual_of, FieldKind, PdeResidual};

pub use num_complex::Complex64;
