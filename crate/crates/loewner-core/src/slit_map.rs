//! The elementary slit map: the exact solution of the strip Loewner equation
//! over one step of constant driving.
//!
//! With constant driving xi the flow integrates to
//!     cosh((g_t(z) - xi)/2) = e^{t/2} cosh((z - xi)/2)      (delta = 1),
//! so one step of size h is the conformal map
//!     phi(z) = xi + 2 acosh(e^{h/2} cosh((z - xi)/2)),
//! whose hull is the vertical segment {xi + iy : 0 <= y <= 2 acos(e^{-h/2})}.
//! General delta reduces to delta = 1 by the dilatation z -> z/delta,
//! t -> t/delta^2.

use num_complex::Complex64;

use crate::error::{LoewnerError, Result};

/// Result of pushing a point through one elementary map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SlitOutcome {
    Mapped(Complex64),
    /// The point lies on the slit erased by this step.
    Swallowed,
}

/// Height of the elementary slit for step size h (delta = 1).
pub fn slit_height(h: f64) -> f64 {
    2.0 * (-0.5 * h).exp().acos()
}

/// acosh branch adapted to the strip: the preimage with Im in [0, pi] and
/// the sign of Re carried by the side of the cut the argument sits on.
/// IEEE signed zeros keep the side information alive on the real axis.
pub(crate) fn strip_acosh(v: Complex64) -> Complex64 {
    if v.im.is_sign_negative() {
        // cosh(-conj(w)) = conj(cosh(w)): reflect into the upper half-plane,
        // take the principal branch there, reflect back
        -v.conj().acosh().conj()
    } else {
        v.acosh()
    }
}

fn check_finite(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(LoewnerError::NonFinite)
    }
}

/// One forward step of the discrete flow at delta = 1.
///
/// `eps_swallow` widens the (measure-zero) on-slit condition into a
/// detectable band: the point is declared swallowed when cosh((z - xi)/2) is
/// real within the tolerance and the rescaling by e^{h/2} pushes it out of
/// [-1, 1] onto the real-axis image.
pub fn elementary_map_eps(
    z: Complex64,
    xi: f64,
    h: f64,
    eps_swallow: f64,
) -> Result<SlitOutcome> {
    check_finite(z)?;
    let w = ((z - xi) / 2.0).cosh();
    let scale = (0.5 * h).exp();
    if w.im.abs() <= eps_swallow
        && w.re.abs() <= 1.0 + eps_swallow
        && scale * w.re.abs() >= 1.0 - eps_swallow
    {
        return Ok(SlitOutcome::Swallowed);
    }
    Ok(SlitOutcome::Mapped(xi + 2.0 * strip_acosh(scale * w)))
}

/// One forward step at general delta (rescales to delta = 1 internally).
pub fn elementary_map(z: Complex64, xi: f64, h: f64, delta: f64) -> Result<SlitOutcome> {
    if delta == 1.0 {
        return elementary_map_eps(z, xi, h, 1e-9);
    }
    let d2 = delta * delta;
    match elementary_map_eps(z / delta, xi / delta, h / d2, 1e-9)? {
        SlitOutcome::Mapped(w) => Ok(SlitOutcome::Mapped(w * delta)),
        SlitOutcome::Swallowed => Ok(SlitOutcome::Swallowed),
    }
}

/// Inverse of the elementary map at delta = 1: defined on the whole closed
/// strip (the inverse re-opens the slit, it never swallows).
pub fn elementary_inverse_d1(w: Complex64, xi: f64, h: f64) -> Result<Complex64> {
    check_finite(w)?;
    let u = ((w - xi) / 2.0).cosh();
    Ok(xi + 2.0 * strip_acosh((-0.5 * h).exp() * u))
}

/// Inverse of the elementary map at general delta.
pub fn elementary_inverse(w: Complex64, xi: f64, h: f64, delta: f64) -> Result<Complex64> {
    if delta == 1.0 {
        return elementary_inverse_d1(w, xi, h);
    }
    let d2 = delta * delta;
    Ok(delta * elementary_inverse_d1(w / delta, xi / delta, h / d2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn slit_tip_is_swallowed() {
        let h = 0.04;
        let xi = 0.3;
        let tip = Complex64::new(xi, slit_height(h));
        assert_eq!(elementary_map(tip, xi, h, 1.0).unwrap(), SlitOutcome::Swallowed);
        // interior of the slit too
        let mid = Complex64::new(xi, 0.5 * slit_height(h));
        assert_eq!(elementary_map(mid, xi, h, 1.0).unwrap(), SlitOutcome::Swallowed);
        // just above the tip survives
        let above = Complex64::new(xi, slit_height(h) + 1e-6);
        assert!(matches!(elementary_map(above, xi, h, 1.0).unwrap(), SlitOutcome::Mapped(_)));
    }

    #[test]
    fn far_right_translates_by_h() {
        let h = 0.05;
        let z = Complex64::new(30.0, 1.0);
        let SlitOutcome::Mapped(w) = elementary_map(z, 0.0, h, 1.0).unwrap() else {
            panic!("swallowed")
        };
        assert!((w - (z + h)).norm() < 1e-12, "{w}");
    }

    #[test]
    fn upper_boundary_stays_on_upper_boundary() {
        let h = 0.02;
        let SlitOutcome::Mapped(w) =
            elementary_map(Complex64::new(0.0, PI), 0.0, h, 1.0).unwrap()
        else {
            panic!("swallowed")
        };
        assert_relative_eq!(w.im, PI, epsilon = 1e-12);
        assert!(w.re.abs() < 1e-12);
        // off-center upper-boundary points move symmetrically
        let SlitOutcome::Mapped(wr) =
            elementary_map(Complex64::new(0.7, PI), 0.0, h, 1.0).unwrap()
        else {
            panic!()
        };
        let SlitOutcome::Mapped(wl) =
            elementary_map(Complex64::new(-0.7, PI), 0.0, h, 1.0).unwrap()
        else {
            panic!()
        };
        assert_relative_eq!(wr.re, -wl.re, epsilon = 1e-13);
        assert_relative_eq!(wr.im, PI, epsilon = 1e-12);
    }

    #[test]
    fn real_axis_keeps_side() {
        let h = 0.03;
        let xi = 0.2;
        let SlitOutcome::Mapped(right) =
            elementary_map(Complex64::new(xi + 0.9, 0.0), xi, h, 1.0).unwrap()
        else {
            panic!()
        };
        assert!(right.re > xi && right.im.abs() < 1e-14);
        let SlitOutcome::Mapped(left) =
            elementary_map(Complex64::new(xi - 0.9, 0.0), xi, h, 1.0).unwrap()
        else {
            panic!()
        };
        assert!(left.re < xi && left.im.abs() < 1e-14);
        // mirror symmetry about xi on the axis
        assert_relative_eq!(right.re - xi, xi - left.re, epsilon = 1e-13);
    }

    #[test]
    fn inverse_of_driving_point_is_the_tip() {
        let h = 0.04;
        let xi = -0.8;
        let w = elementary_inverse(Complex64::new(xi, 0.0), xi, h, 1.0).unwrap();
        assert_relative_eq!(w.re, xi, epsilon = 1e-13);
        assert_relative_eq!(w.im, slit_height(h), epsilon = 1e-12);
    }

    #[test]
    fn map_after_inverse_is_identity_interior() {
        // 100 quasi-random interior points
        let h = 0.07;
        let xi = 0.15;
        for i in 0..100 {
            let t = i as f64 / 100.0;
            let z = Complex64::new(
                -6.0 + 12.0 * ((t * 53.0) % 1.0),
                1e-3 + (PI - 2e-3) * ((t * 31.0 + 0.17) % 1.0),
            );
            let back = elementary_inverse(z, xi, h, 1.0).unwrap();
            let SlitOutcome::Mapped(again) = elementary_map(back, xi, h, 1.0).unwrap() else {
                panic!("swallowed at {z}")
            };
            assert!((again - z).norm() < 1e-10, "roundtrip error {} at {z}", (again - z).norm());
        }
    }

    #[test]
    fn inverse_tends_to_identity_as_h_vanishes() {
        let w = Complex64::new(0.4, 1.1);
        let mut prev = f64::INFINITY;
        for &h in &[1e-2, 1e-3, 1e-4] {
            let err = (elementary_inverse(w, 0.0, h, 1.0).unwrap() - w).norm();
            assert!(err < 2.0 * h, "error {err} not O(h) at h={h}");
            assert!(err < prev);
            prev = err;
        }
    }

    #[test]
    fn general_delta_is_a_dilatation() {
        let delta = 2.0;
        let h = 0.05;
        let xi = 0.4;
        let z = Complex64::new(0.9, 2.2);
        let SlitOutcome::Mapped(w) = elementary_map(z, xi, h, delta).unwrap() else { panic!() };
        let SlitOutcome::Mapped(w1) =
            elementary_map(z / delta, xi / delta, h / (delta * delta), 1.0).unwrap()
        else {
            panic!()
        };
        assert!((w - delta * w1).norm() < 1e-13);
        // image lives in the widened strip
        assert!(w.im > 0.0 && w.im < PI * delta);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(elementary_map(Complex64::new(f64::NAN, 0.0), 0.0, 0.1, 1.0).is_err());
        assert!(elementary_inverse(Complex64::new(0.0, f64::INFINITY), 0.0, 0.1, 1.0).is_err());
    }
}
