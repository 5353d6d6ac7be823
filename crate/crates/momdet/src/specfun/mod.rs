//! Scalar special functions used by every other module.
//!
//! Everything here is pure and reentrant. Downstream moment arithmetic
//! consumes `log_gamma`, never `Γ` itself, so factorial-scale magnitudes
//! (k ≈ 170 and far beyond) stay representable.

mod bessel;
mod gamma;
mod normal;

pub use bessel::{bessel_k0, bessel_k0_log, bessel_k0_scaled, EvalRegime, EvalResult};
pub use gamma::{
    log_gamma, log_upper_incomplete_gamma_reg, lower_incomplete_gamma_reg,
    upper_incomplete_gamma_reg,
};
pub use normal::{log_std_normal_cdf, std_normal_cdf, std_normal_pdf, std_normal_pdf_cdf};
