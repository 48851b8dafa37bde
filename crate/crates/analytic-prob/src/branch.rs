//! Branch convention for the power (sinh z/2)^{-4/kappa} on the strip.
//!
//! On the closed strip 0 <= Im z <= pi the value sinh(z/2) lies in the closed
//! upper half-plane, and the convention arg(sinh z/2) in [0, pi] makes the
//! power single-valued: real and positive on the positive real axis, equal to
//! e^{-i4pi/kappa} (sinh|x|/2)^{-4/kappa} on the negative real axis and to
//! e^{-i2pi/kappa} (cosh x/2)^{-4/kappa} on the upper boundary i*pi + x.

use num_complex::Complex64;

use crate::error::{ProbError, Result};

/// Strip half-height: points live in 0 <= Im z <= PI.
pub const STRIP_HEIGHT: f64 = std::f64::consts::PI;

/// Tolerance for "inside the closed strip" checks.
pub const STRIP_SLACK: f64 = 1e-9;

pub fn check_in_closed_strip(z: Complex64) -> Result<()> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(ProbError::NonFinite);
    }
    if z.im < -STRIP_SLACK || z.im > STRIP_HEIGHT + STRIP_SLACK {
        return Err(ProbError::OutsideDomain { z, reason: "outside the closed strip" });
    }
    Ok(())
}

/// Polar data of sinh(z/2) for z = a + ib in the closed strip:
/// modulus R and angle theta in [0, pi].
///
/// The angle comes from atan2(cosh(a/2) sin(b/2), sinh(a/2) cos(b/2)), whose
/// second component is nonnegative on the strip, so no quadrant correction is
/// ever needed. theta decreases from pi - b/2 to b/2 as a runs over the line.
pub fn sinh_half_polar(z: Complex64) -> (f64, f64) {
    let a = z.re;
    let b = z.im;
    let x = (0.5 * a).sinh() * (0.5 * b).cos();
    let y = (0.5 * a).cosh() * (0.5 * b).sin();
    let r = x.hypot(y);
    // y >= -0.0 on the closed strip; force +0.0 so atan2 lands in [0, pi]
    let theta = y.max(0.0).atan2(x);
    (r, theta)
}

/// The branched power (sinh z/2)^{-4/kappa} with arg(sinh z/2) in [0, pi].
pub fn integrand(z: Complex64, kappa: f64) -> Result<Complex64> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(ProbError::InvalidKappa(kappa));
    }
    check_in_closed_strip(z)?;
    let (r, theta) = sinh_half_polar(z);
    if r == 0.0 {
        return Err(ProbError::SingularInput);
    }
    let q = 4.0 / kappa;
    let modulus = r.powf(-q);
    let phase = -q * theta;
    Ok(Complex64::from_polar(modulus, phase))
}
