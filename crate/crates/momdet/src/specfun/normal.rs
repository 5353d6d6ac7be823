//! Standard normal density and distribution function.

use super::gamma::{incomplete_gamma_pair, log_upper_incomplete_gamma_reg};
use crate::error::{Error, Result};

const INV_SQRT_2PI: f64 = 0.398_942_280_401_432_7;
const LN_HALF: f64 = -0.693_147_180_559_945_3;

/// `(φ(x), Φ(x))` for finite `x`.
///
/// Φ is evaluated through the regularized incomplete gamma function,
/// `erfc(z) = Q(1/2, z²)`, with the sign arranged so that
/// `Φ(−x) = 1 − Φ(x)` holds exactly.
pub fn std_normal_pdf_cdf(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::domain("std_normal_pdf_cdf", format!("x = {x} not finite")));
    }
    Ok((std_normal_pdf(x), std_normal_cdf(x)))
}

/// `φ(x) = e^{−x²/2} / √(2π)`.
pub fn std_normal_pdf(x: f64) -> f64 {
    INV_SQRT_2PI * (-0.5 * x * x).exp()
}

/// `Φ(x)`, accurate into both tails down to the underflow limit.
pub fn std_normal_cdf(x: f64) -> f64 {
    let half_erfc = |z: f64| -> f64 {
        // z ≥ 0: ½ erfc(z/√2) = ½ Q(1/2, z²/2)
        let (_, q) = incomplete_gamma_pair(0.5, 0.5 * z * z).expect("valid arguments");
        0.5 * q
    };
    if x >= 0.0 {
        1.0 - half_erfc(x)
    } else {
        half_erfc(-x)
    }
}

/// `ln Φ(x)` without underflow in the left tail.
pub fn log_std_normal_cdf(x: f64) -> f64 {
    if x >= -2.0 {
        std_normal_cdf(x).ln()
    } else {
        // ln(½ Q(1/2, x²/2)); the log-domain continued fraction stays
        // accurate far past the point where Φ underflows.
        LN_HALF
            + log_upper_incomplete_gamma_reg(0.5, 0.5 * x * x)
                .expect("x²/2 ≥ 2 is inside the CF domain")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad;
    use proptest::prelude::*;

    #[test]
    fn values_at_zero() {
        let (pdf, cdf) = std_normal_pdf_cdf(0.0).unwrap();
        assert!((pdf - INV_SQRT_2PI).abs() < 1e-16);
        assert_eq!(cdf, 0.5);
    }

    #[test]
    fn cdf_at_one_vs_quadrature() {
        // Independent oracle: Φ(1) = ½ + ∫₀¹ φ.
        let oracle = 0.5
            + quad::integrate(std_normal_pdf, 0.0, 1.0, 1e-14, 1e-14, 100)
                .unwrap()
                .value;
        let (_, cdf) = std_normal_pdf_cdf(1.0).unwrap();
        assert!((cdf - oracle).abs() < 1e-13);
        assert!((cdf - 0.841_344_746_068_542_9).abs() < 1e-12);
    }

    #[test]
    fn symmetry_exact() {
        for &x in &[0.1, 1.0, 2.5, 7.0, 20.0] {
            let (_, c_pos) = std_normal_pdf_cdf(x).unwrap();
            let (_, c_neg) = std_normal_pdf_cdf(-x).unwrap();
            assert!((c_neg - (1.0 - c_pos)).abs() < 1e-14, "x = {x}");
        }
    }

    #[test]
    fn log_cdf_deep_tail() {
        // ln Φ(-40) ≈ -z²/2 - ln(z √(2π)) with Mills correction.
        let l = log_std_normal_cdf(-40.0);
        let lead = -800.0 - (40.0 * (2.0 * std::f64::consts::PI).sqrt()).ln();
        assert!((l - lead).abs() < 1e-2, "l = {l}, lead = {lead}");
        // Continuity with the direct branch.
        let a = log_std_normal_cdf(-2.0 - 1e-9);
        let b = log_std_normal_cdf(-2.0 + 1e-9);
        assert!((a - b).abs() < 1e-7);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(std_normal_pdf_cdf(f64::NAN).is_err());
        assert!(std_normal_pdf_cdf(f64::INFINITY).is_err());
    }

    proptest! {
        #[test]
        fn cdf_monotone(x in -8.0_f64..8.0, d in 1e-6_f64..4.0) {
            prop_assert!(std_normal_cdf(x + d) > std_normal_cdf(x));
        }
    }
}
