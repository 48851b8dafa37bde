//! Contour integrals of the branched power (sinh u/2)^{-4/kappa}.
//!
//! Tails beyond |Re u| = A are evaluated from the exponential asymptotics
//! (the integrand behaves as 2^{4/kappa} e^{(2u - 4 pi i)/kappa} towards
//! -infinity and as 2^{4/kappa} e^{-2u/kappa} towards +infinity, with
//! relative corrections of order e^{-A}, below machine precision at A = 50).
//! The integrable singularity at the origin (kappa > 4) is handled by a
//! series expansion of (sinh y/2)^{-q} around y = 0.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::branch::{check_in_closed_strip, integrand};
use crate::error::{ProbError, Result};
use crate::quad;

/// Quadrature configuration carried by the probability field.
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    /// Absolute tolerance handed to the adaptive scheme.
    pub abs_tol: f64,
    /// Truncation radius A: quadrature runs on |Re u| <= A, tails are analytic.
    pub trunc_radius: f64,
    /// When false the analytic tails are dropped (diagnostic switch).
    pub use_tail: bool,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { abs_tol: 1e-12, trunc_radius: 50.0, use_tail: true }
    }
}

/// Radius below which the near-origin series replaces quadrature.
const SERIES_RADIUS: f64 = 0.1;

/// Points closer to the origin than this are refused for kappa <= 4.
pub const ORIGIN_CUTOFF: f64 = 1e-8;

/// Treat |Im z| below this as "on the real axis" for contour purposes.
const AXIS_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy)]
pub(crate) struct StripIntegrals {
    pub kappa: f64,
    /// q = 4/kappa, the power of the integrand.
    pub q: f64,
    pub cfg: QuadConfig,
}

impl StripIntegrals {
    pub fn new(kappa: f64, cfg: QuadConfig) -> Result<Self> {
        if !kappa.is_finite() || kappa <= 0.0 {
            return Err(ProbError::InvalidKappa(kappa));
        }
        Ok(Self { kappa, q: 4.0 / kappa, cfg })
    }

    /// Analytic tail of the contour integral from -infinity up to u0, valid
    /// for Re u0 <= -trunc_radius.
    pub fn tail_to(&self, u0: Complex64) -> Complex64 {
        if !self.cfg.use_tail {
            return Complex64::new(0.0, 0.0);
        }
        let scale = 2f64.powf(self.q) * (self.kappa / 2.0);
        scale * ((2.0 * u0 - Complex64::new(0.0, 4.0 * PI)) / self.kappa).exp()
    }

    /// Tail of the real integral of (cosh y/2)^{-q}: contribution of
    /// (-infinity, -a] (equivalently [a, infinity)) for a >= trunc_radius.
    pub fn cosh_tail(&self, a: f64) -> f64 {
        if !self.cfg.use_tail {
            return 0.0;
        }
        2f64.powf(self.q) * (self.kappa / 2.0) * (-2.0 * a / self.kappa).exp()
    }

    /// Series value of the singular integral S(r) = int_0^r (sinh y/2)^{-q} dy
    /// for 0 <= r <= SERIES_RADIUS and q < 1 (kappa > 4).
    fn sinh_pow_series(&self, r: f64) -> f64 {
        debug_assert!(r <= SERIES_RADIUS * (1.0 + 1e-12));
        debug_assert!(self.q < 1.0);
        let q = self.q;
        // (sinh y/2)^{-q} = (y/2)^{-q} (1 + c2 y^2 + c4 y^4 + c6 y^6 + O(y^8))
        let c2 = -q / 24.0;
        let c4 = -q / 1920.0 + q * (q + 1.0) / 1152.0;
        let c6 = -q / 322_560.0 + q * (q + 1.0) / 46_080.0
            - q * (q + 1.0) * (q + 2.0) / 82_944.0;
        let two_q = 2f64.powf(q);
        two_q
            * (r.powf(1.0 - q) / (1.0 - q)
                + c2 * r.powf(3.0 - q) / (3.0 - q)
                + c4 * r.powf(5.0 - q) / (5.0 - q)
                + c6 * r.powf(7.0 - q) / (7.0 - q))
    }

    /// S(x) = int_0^x (sinh y/2)^{-q} dy for x >= 0 (kappa > 4).
    pub fn sinh_pow_from_zero(&self, x: f64) -> Result<f64> {
        if self.q >= 1.0 {
            return Err(ProbError::DivergentIntegral { kappa: self.kappa });
        }
        if x <= SERIES_RADIUS {
            return Ok(self.sinh_pow_series(x));
        }
        let head = self.sinh_pow_series(SERIES_RADIUS);
        let q = self.q;
        let mid_end = x.min(self.cfg.trunc_radius);
        let mid = quad::integrate(
            |y| Complex64::new((0.5 * y).sinh().powf(-q), 0.0),
            SERIES_RADIUS,
            mid_end,
            self.cfg.abs_tol,
        )?
        .re;
        let tail = if x > self.cfg.trunc_radius {
            // (sinh y/2)^{-q} and (cosh y/2)^{-q} agree to e^{-y} out here
            self.cosh_tail(self.cfg.trunc_radius) - self.cosh_tail(x)
        } else {
            0.0
        };
        Ok(head + mid + tail)
    }

    /// I = int_R (cosh y/2)^{-4/kappa} dy.
    pub fn const_i(&self) -> Result<f64> {
        let a = self.cfg.trunc_radius;
        let q = self.q;
        let body = quad::integrate(
            |y| Complex64::new((0.5 * y).cosh().powf(-q), 0.0),
            0.0,
            a,
            self.cfg.abs_tol,
        )?
        .re;
        Ok(2.0 * (body + self.cosh_tail(a)))
    }

    /// J = int_0^inf (sinh y/2)^{-4/kappa} dy, defined for kappa > 4.
    pub fn const_j(&self) -> Result<f64> {
        if self.kappa <= 4.0 {
            return Err(ProbError::DivergentIntegral { kappa: self.kappa });
        }
        let a = self.cfg.trunc_radius;
        Ok(self.sinh_pow_from_zero(a)? + self.cosh_tail(a))
    }

    /// Signed integral int_0^x (cosh y/2)^{-q} dy.
    pub fn cosh_pow_from_zero(&self, x: f64) -> f64 {
        let a = self.cfg.trunc_radius;
        let q = self.q;
        let sign = x.signum();
        let x = x.abs();
        let body_end = x.min(a);
        let body = quad::integrate_lenient(
            |y| Complex64::new((0.5 * y).cosh().powf(-q), 0.0),
            0.0,
            body_end,
            self.cfg.abs_tol,
        )
        .re;
        let tail = if x > a { self.cosh_tail(a) - self.cosh_tail(x) } else { 0.0 };
        sign * (body + tail)
    }

    /// F(z) = int_{-infinity}^{z} (sinh u/2)^{-4/kappa} du along a contour in
    /// the closed strip ending at z.
    pub fn f_at(&self, z: Complex64) -> Result<Complex64> {
        check_in_closed_strip(z)?;
        if self.kappa <= 4.0 && z.norm() < ORIGIN_CUTOFF {
            return Err(ProbError::DivergentIntegral { kappa: self.kappa });
        }
        let a = z.re;
        let b = z.im.clamp(0.0, PI);
        let trunc = self.cfg.trunc_radius;

        if a <= -trunc {
            return Ok(self.tail_to(Complex64::new(a, b)));
        }
        let tail = self.tail_to(Complex64::new(-trunc, b));

        if b > AXIS_BAND {
            // horizontal contour at height b; integrand smooth (b bounded away
            // from 0 or the path does not cross the origin closely enough to
            // defeat adaptive refinement)
            let kappa = self.kappa;
            let body = quad::integrate(
                move |t| integrand(Complex64::new(t, b), kappa).expect("interior point"),
                -trunc,
                a,
                self.cfg.abs_tol,
            )?;
            return Ok(tail + body);
        }

        // contour along the real axis
        let kappa = self.kappa;
        let at = |t: f64| integrand(Complex64::new(t, 0.0), kappa).expect("off origin");
        if a <= -SERIES_RADIUS {
            let body = quad::integrate(at, -trunc, a, self.cfg.abs_tol)?;
            return Ok(tail + body);
        }
        if self.kappa <= 4.0 {
            return Err(ProbError::DivergentIntegral { kappa: self.kappa });
        }
        // crossing (or touching) the origin: series on both sides
        let left_phase = Complex64::from_polar(1.0, -4.0 * PI / self.kappa);
        let body_left = quad::integrate(at, -trunc, -SERIES_RADIUS, self.cfg.abs_tol)?;
        if a < 0.0 {
            // stop on the negative side: S(raduis) - S(|a|)
            let inner = self.sinh_pow_series(SERIES_RADIUS) - self.sinh_pow_series(-a);
            return Ok(tail + body_left + left_phase * inner);
        }
        let left_piece = left_phase * self.sinh_pow_series(SERIES_RADIUS);
        let right_piece = Complex64::new(self.sinh_pow_from_zero(a)?, 0.0);
        Ok(tail + body_left + left_piece + right_piece)
    }

    /// Straight-segment contour integral of the branched power from `from`
    /// to `to`, both in the closed strip; the segment must avoid the origin.
    pub fn f_segment(&self, from: Complex64, to: Complex64) -> Result<Complex64> {
        check_in_closed_strip(from)?;
        check_in_closed_strip(to)?;
        let delta = to - from;
        let kappa = self.kappa;
        quad::integrate(
            move |s| {
                let u = from + delta * s;
                integrand(u, kappa).expect("segment avoids the origin") * delta
            },
            0.0,
            1.0,
            self.cfg.abs_tol,
        )
    }
}
