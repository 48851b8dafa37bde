//! Central charge and boundary weights attached to the evolution at a given
//! kappa:
//!
//!   c        = (kappa - 6)(8 - 3 kappa) / (2 kappa)
//!   h_{1;2}  = (6 - kappa) / (2 kappa)
//!   h_{0;1/2} = (6 - kappa)(kappa - 2) / (16 kappa)
//!   h_{r;s}  = [(r kappa - 4 s)^2 - (kappa - 4)^2] / (16 kappa)
//!
//! Inputs that are ratios of small integers (kappa = 3, 4, 10/3, ...) are
//! recognized and evaluated in exact integer arithmetic with a single final
//! rounding, so the constants land on the nearest f64 of the true rational.

use serde::Serialize;

use crate::error::{ProbError, Result};

/// Exact rational with i128 components. Enough headroom for the small
/// numerators and denominators these formulas produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Ratio {
    num: i128,
    den: i128,
}

impl Ratio {
    fn new(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let sign = if den < 0 { -1 } else { 1 };
        Self { num: sign * num / g, den: sign * den / g }
    }

    fn from_int(n: i128) -> Self {
        Self { num: n, den: 1 }
    }

    fn sub(self, other: Self) -> Self {
        Self::new(self.num * other.den - other.num * self.den, self.den * other.den)
    }

    fn mul(self, other: Self) -> Self {
        Self::new(self.num * other.num, self.den * other.den)
    }

    fn div(self, other: Self) -> Self {
        debug_assert!(other.num != 0);
        Self::new(self.num * other.den, self.den * other.num)
    }

    fn to_f64(self) -> f64 {
        // both components stay far below 2^53 here, so each converts exactly
        // and the division rounds once
        self.num as f64 / self.den as f64
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    if a == 0 {
        return b.max(1);
    }
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// Recognize an f64 as a ratio of small integers via continued fractions.
/// Returns None when no denominator up to `max_den` reproduces the value to
/// within 1e-12 relative.
fn recognize_rational(x: f64, max_den: i128) -> Option<Ratio> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, x.floor() as i128, 1i128);
    let mut frac = x - x.floor();
    for _ in 0..64 {
        let approx = p1 as f64 / q1 as f64;
        if (approx - x).abs() <= 1e-12 * x.abs().max(1.0) {
            return Some(Ratio::new(p1, q1));
        }
        if frac == 0.0 {
            break;
        }
        let inv = 1.0 / frac;
        let a = inv.floor();
        frac = inv - a;
        let p2 = a as i128 * p1 + p0;
        let q2 = a as i128 * q1 + q0;
        if q2 > max_den {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}

/// The three constants attached to one kappa.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CftConstants {
    pub c: f64,
    pub h12: f64,
    pub h0half: f64,
}

fn constants_rational(k: Ratio) -> CftConstants {
    let two = Ratio::from_int(2);
    let six = Ratio::from_int(6);
    let eight = Ratio::from_int(8);
    let three = Ratio::from_int(3);
    let sixteen = Ratio::from_int(16);

    let c = k.sub(six).mul(eight.sub(three.mul(k))).div(two.mul(k));
    let h12 = six.sub(k).div(two.mul(k));
    let h0half = six.sub(k).mul(k.sub(two)).div(sixteen.mul(k));
    CftConstants { c: c.to_f64(), h12: h12.to_f64(), h0half: h0half.to_f64() }
}

/// Central charge and the two boundary weights for a given kappa.
pub fn cft_constants(kappa: f64) -> Result<CftConstants> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(ProbError::InvalidKappa(kappa));
    }
    if let Some(k) = recognize_rational(kappa, 1000) {
        return Ok(constants_rational(k));
    }
    Ok(CftConstants {
        c: (kappa - 6.0) * (8.0 - 3.0 * kappa) / (2.0 * kappa),
        h12: (6.0 - kappa) / (2.0 * kappa),
        h0half: (6.0 - kappa) * (kappa - 2.0) / (16.0 * kappa),
    })
}

/// Kac-style weight h_{r;s} = [(r kappa - 4 s)^2 - (kappa - 4)^2] / (16 kappa).
pub fn h_rs(r: f64, s: f64, kappa: f64) -> Result<f64> {
    if !kappa.is_finite() || kappa <= 0.0 {
        return Err(ProbError::InvalidKappa(kappa));
    }
    if let (Some(rr), Some(ss), Some(kk)) = (
        recognize_rational(r, 1000),
        recognize_rational(s, 1000),
        recognize_rational(kappa, 1000),
    ) {
        let four = Ratio::from_int(4);
        let sixteen = Ratio::from_int(16);
        let lhs = rr.mul(kk).sub(four.mul(ss));
        let rhs = kk.sub(four);
        let v = lhs.mul(lhs).sub(rhs.mul(rhs)).div(sixteen.mul(kk));
        return Ok(v.to_f64());
    }
    let a = r * kappa - 4.0 * s;
    let b = kappa - 4.0;
    Ok((a * a - b * b) / (16.0 * kappa))
}
