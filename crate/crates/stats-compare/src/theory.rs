//! The lattice-units theory CDF for the Ising interface endpoint.
//!
//! A strip of L rows maps to the continuum strip of height pi, so a lateral
//! displacement of x lattice units sits at strip coordinate pi x / L. The
//! endpoint law at kappa = 3 then gives the integrated distribution
//! 1 - P_up(pi x / L), with density (pi / I) cosh(pi x' / 2)^{-4/3} in the
//! reduced variable x' = x / L.

use analytic_prob::ProbField;

use crate::error::Result;

/// CDF of the signed interface displacement (lattice units) for strip
/// height L, evaluated from the kappa = 3 excursion law.
pub fn ising_theory_cdf(l: usize) -> Result<impl Fn(f64) -> f64> {
    let field = ProbField::new(3.0)?;
    let lf = l as f64;
    Ok(move |x: f64| 1.0 - field.p_up(std::f64::consts::PI * x / lf))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn symmetric_at_the_origin() {
        let cdf = ising_theory_cdf(16).unwrap();
        assert_relative_eq!(cdf(0.0), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn normalizes_at_infinity() {
        let cdf = ising_theory_cdf(16).unwrap();
        assert!(cdf(1e6) > 1.0 - 1e-8);
        assert!(cdf(-1e6) < 1e-8);
    }

    #[test]
    fn reduced_density_at_zero() {
        // d/dx' of the reduced CDF at 0 equals pi / I = pi / 5.17422
        let l = 16;
        let cdf = ising_theory_cdf(l).unwrap();
        let h = 1e-5 * l as f64; // still small in reduced units
        let density_reduced = (cdf(h) - cdf(-h)) / (2.0 * h) * l as f64;
        assert_relative_eq!(
            density_reduced,
            std::f64::consts::PI / 5.17422,
            epsilon = 1e-5
        );
    }

    #[test]
    fn monotone_nondecreasing() {
        let cdf = ising_theory_cdf(12).unwrap();
        let mut prev = -1.0;
        let mut x = -80.0;
        while x <= 80.0 {
            let f = cdf(x);
            assert!(f >= prev);
            prev = f;
            x += 1.0;
        }
    }
}
