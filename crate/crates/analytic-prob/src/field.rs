//! The cached probability field: left/right visiting probabilities, the
//! swallowing probability (kappa > 4), and the upper-boundary excursion law
//! (all kappa).

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{ProbError, Result};
use crate::integrals::{QuadConfig, StripIntegrals, ORIGIN_CUTOFF};

/// Analytic evaluator at fixed kappa. The normalization integrals I and J
/// are computed once at construction and never mutated, so shared references
/// are safe across threads.
#[derive(Debug, Clone)]
pub struct ProbField {
    kappa: f64,
    i_const: f64,
    j_const: Option<f64>,
    pub(crate) ints: StripIntegrals,
}

impl ProbField {
    pub fn new(kappa: f64) -> Result<Self> {
        Self::with_config(kappa, QuadConfig::default())
    }

    pub fn with_config(kappa: f64, cfg: QuadConfig) -> Result<Self> {
        let ints = StripIntegrals::new(kappa, cfg)?;
        let i_const = ints.const_i()?;
        let j_const = if kappa > 4.0 { Some(ints.const_j()?) } else { None };
        Ok(Self { kappa, i_const, j_const, ints })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// I = int_R (cosh y/2)^{-4/kappa} dy.
    pub fn i_const(&self) -> f64 {
        self.i_const
    }

    /// J = int_0^inf (sinh y/2)^{-4/kappa} dy; defined only for kappa > 4.
    pub fn j_const(&self) -> Option<f64> {
        self.j_const
    }

    /// F(z), the branch-aware antiderivative of (sinh u/2)^{-4/kappa}.
    pub fn f_integral(&self, z: Complex64) -> Result<Complex64> {
        self.ints.f_at(z)
    }

    /// Im F at +infinity: -sin(2 pi / kappa) * I.
    pub fn im_f_infinity(&self) -> f64 {
        -(2.0 * PI / self.kappa).sin() * self.i_const
    }

    /// Probability for z to end on the left of the trace.
    ///
    /// For kappa > 4 this is 1 - Im F(z) / Im F(inf); kappa = 4 dispatches to
    /// the closed form Im log tanh(z/4) / pi. Below kappa = 4 the field is
    /// not harmonic and no closed evaluation is exposed.
    pub fn p_left(&self, z: Complex64) -> Result<f64> {
        if self.kappa < 4.0 {
            return Err(ProbError::UnsupportedRegime {
                what: "p_left",
                kappa: self.kappa,
                requires: "kappa >= 4",
            });
        }
        if self.kappa == 4.0 {
            if z.norm() < ORIGIN_CUTOFF {
                return Err(ProbError::SingularInput);
            }
            let v = (z / 4.0).tanh().ln().im / PI;
            return Ok(v.clamp(0.0, 1.0));
        }
        let f = self.f_integral(z)?;
        let v = 1.0 - f.im / self.im_f_infinity();
        Ok(v.clamp(0.0, 1.0))
    }

    /// Probability for z to end on the right of the trace: p_left mirrored.
    pub fn p_right(&self, z: Complex64) -> Result<f64> {
        self.p_left(Complex64::new(-z.re, z.im))
    }

    /// Probability for z to be swallowed by the hull (kappa > 4); identically
    /// zero at kappa = 4 where the trace is a simple curve.
    pub fn p_in(&self, z: Complex64) -> Result<f64> {
        if self.kappa < 4.0 {
            return Err(ProbError::UnsupportedRegime {
                what: "p_in",
                kappa: self.kappa,
                requires: "kappa > 4",
            });
        }
        if self.kappa == 4.0 {
            return Ok(0.0);
        }
        let j = self.j_const.expect("kappa > 4");
        let phase = Complex64::from_polar(1.0, 2.0 * PI / self.kappa);
        let f = self.f_integral(z)?;
        let denom = -(2.0 * PI / self.kappa).sin() * j;
        let v = (phase * f).im / denom;
        Ok(v.clamp(0.0, 1.0))
    }

    /// Excursion law on the upper boundary: probability that the trace ends
    /// at i pi + u with u > x. Strictly decreasing, 1 at -infinity, 0 at
    /// +infinity, exactly 1/2 at x = 0 by symmetry of the integrand.
    pub fn p_up(&self, x: f64) -> f64 {
        let v = 0.5 - self.ints.cosh_pow_from_zero(x) / self.i_const;
        v.clamp(0.0, 1.0)
    }

    /// Density of the upper-boundary endpoint, -d/dx p_up = (cosh x/2)^{-4/kappa} / I.
    pub fn endpoint_density(&self, x: f64) -> f64 {
        (0.5 * x).cosh().powf(-4.0 / self.kappa) / self.i_const
    }
}

/// Convenience free functions mirroring the field methods.
pub fn const_i(kappa: f64) -> Result<f64> {
    StripIntegrals::new(kappa, QuadConfig::default())?.const_i()
}

pub fn const_j(kappa: f64) -> Result<f64> {
    StripIntegrals::new(kappa, QuadConfig::default())?.const_j()
}
