//! Powers and products of a base distribution: moment sequences, densities
//! where they exist, and growth/tail metadata for the criteria.

use crate::distributions::{
    self, density_tail_model, DistributionSpec, ExactGrowth, GgParams, MomentSequence,
    MomentSource, TailModel,
};
use crate::error::{Error, Result};
use crate::quad;

/// `identity`, `ξⁿ`, or `ξ₁⋯ξ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    Identity,
    Power,
    Product,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformSpec {
    pub kind: TransformKind,
    pub n: u32,
}

impl TransformSpec {
    pub fn new(kind: TransformKind, n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::parameter("TransformSpec", "n must be >= 1"));
        }
        if kind == TransformKind::Identity && n != 1 {
            return Err(Error::parameter("TransformSpec", "identity requires n = 1"));
        }
        Ok(TransformSpec { kind, n })
    }

    pub fn identity() -> Self {
        TransformSpec { kind: TransformKind::Identity, n: 1 }
    }

    pub fn power(n: u32) -> Result<Self> {
        TransformSpec::new(TransformKind::Power, n)
    }

    pub fn product(n: u32) -> Result<Self> {
        TransformSpec::new(TransformKind::Product, n)
    }

    /// Powers with n = 1 and products with n = 1 are the base variable.
    pub fn is_identity(&self) -> bool {
        self.n == 1
    }

    pub fn name(&self) -> String {
        match self.kind {
            TransformKind::Identity => "identity".to_string(),
            TransformKind::Power => format!("power(n={})", self.n),
            TransformKind::Product => format!("product(n={})", self.n),
        }
    }
}

/// Whether a pointwise density of the transformed variable is available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityForm {
    /// Change of variables of a catalog density, or the closed product
    /// density of two generalized gamma factors.
    Closed,
    /// Numerical Mellin self-convolution (products of two factors).
    MellinNumeric,
    /// Products of three or more factors: never computed pointwise; the
    /// verdict engine works from the base density and survival alone.
    Unavailable,
}

/// A base distribution with a transform applied: the subject of analysis.
#[derive(Debug, Clone)]
pub struct TransformedVariable {
    pub base: DistributionSpec,
    pub transform: TransformSpec,
    pub moments: MomentSequence,
    pub density_form: DensityForm,
}

/// Moment table of `X_n = ξⁿ`: `log m_k = ln E[ξ^{nk}]`.
pub fn power_moments(base: &DistributionSpec, n: u32, k_max: usize) -> Result<MomentSequence> {
    if n < 1 {
        return Err(Error::parameter("power_moments", "n must be >= 1"));
    }
    let mut log_m = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        log_m.push(distributions::log_moment(base, (n as f64) * k as f64)?);
    }
    let base_seq = base_exactness(base);
    MomentSequence::from_values(log_m, base_seq.0, base_seq.1, Some(power_growth(base, n)))
}

/// Moment table of `Y_n = ξ₁⋯ξ_n`: `log m_k = n ln E[ξ^k]`.
///
/// The Lyapunov comparison `E[X_n^k] ≥ E[Y_n^k]` is asserted for every
/// computed k; a violation can only come from quadrature error and is
/// reported as a data error.
pub fn product_moments(base: &DistributionSpec, n: u32, k_max: usize) -> Result<MomentSequence> {
    if n < 1 {
        return Err(Error::parameter("product_moments", "n must be >= 1"));
    }
    let mut log_m = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        log_m.push((n as f64) * distributions::log_moment(base, k as f64)?);
    }
    let (exact, source) = base_exactness(base);
    let slack = if exact { 0.0 } else { 1e-9 };
    for (k, &lm) in log_m.iter().enumerate() {
        let power = distributions::log_moment(base, (n as f64) * k as f64)?;
        if power < lm - slack {
            return Err(Error::data(
                "product_moments",
                format!("Lyapunov comparison fails at k={k}: power {power} < product {lm}"),
            ));
        }
    }
    MomentSequence::from_values(log_m, exact, source, Some(product_growth(base, n)))
}

fn base_exactness(base: &DistributionSpec) -> (bool, MomentSource) {
    match base {
        DistributionSpec::Gg(_) | DistributionSpec::LogNormal01 | DistributionSpec::HalfBessel(_) => {
            (true, MomentSource::Composed)
        }
        _ => (false, MomentSource::Quadrature),
    }
}

/// Growth metadata of the power moment ratio
/// `E[X_n^{k+1}]/E[X_n^k] ~ C (k+1)^ρ`.
pub fn power_growth(base: &DistributionSpec, n: u32) -> ExactGrowth {
    let nf = n as f64;
    match base {
        DistributionSpec::Gg(p) => ExactGrowth {
            rho: nf / p.beta,
            log_c: Some((nf / p.beta) * (nf / (p.alpha * p.beta)).ln()),
        },
        DistributionSpec::HalfLogistic => ExactGrowth { rho: nf, log_c: None },
        DistributionSpec::LogNormal01 | DistributionSpec::LogSkewNormal { .. } => {
            ExactGrowth { rho: f64::INFINITY, log_c: None }
        }
        DistributionSpec::HalfBessel(p) => ExactGrowth {
            rho: 2.0 * nf / p.beta,
            log_c: Some((2.0 * nf / p.beta) * (nf / (p.alpha * p.beta)).ln()),
        },
    }
}

/// Growth metadata of the product moment ratio.
pub fn product_growth(base: &DistributionSpec, n: u32) -> ExactGrowth {
    let nf = n as f64;
    let g = distributions::base_growth(base);
    ExactGrowth { rho: nf * g.rho, log_c: g.log_c.map(|c| nf * c) }
}

/// Assemble the full subject: moments plus density availability.
pub fn transformed(
    base: &DistributionSpec,
    t: &TransformSpec,
    k_max: usize,
) -> Result<TransformedVariable> {
    base.validate()?;
    let moments = match t.kind {
        TransformKind::Identity => power_moments(base, 1, k_max)?,
        TransformKind::Power => power_moments(base, t.n, k_max)?,
        TransformKind::Product => product_moments(base, t.n, k_max)?,
    };
    let density_form = match (t.kind, t.n) {
        (TransformKind::Product, n) if n >= 3 => DensityForm::Unavailable,
        (TransformKind::Product, 2) => match base {
            DistributionSpec::Gg(_) => DensityForm::Closed,
            _ => DensityForm::MellinNumeric,
        },
        _ => DensityForm::Closed,
    };
    Ok(TransformedVariable { base: *base, transform: *t, moments, density_form })
}

/// Density of `X_n = ξⁿ` at `z > 0` by change of variables,
/// `h(z) = (1/n) z^{1/n−1} f(z^{1/n})`.
pub fn power_density(base: &DistributionSpec, n: u32, z: f64) -> Result<f64> {
    Ok(power_log_density(base, n, z)?.exp())
}

pub fn power_log_density(base: &DistributionSpec, n: u32, z: f64) -> Result<f64> {
    if !z.is_finite() || z <= 0.0 {
        return Err(Error::domain("power_density", format!("z = {z} not in (0, inf)")));
    }
    let nf = n as f64;
    let x = z.powf(1.0 / nf);
    Ok(-nf.ln() + (1.0 / nf - 1.0) * z.ln() + distributions::log_density(base, x)?)
}

/// Logarithmic hazard of the power variable via the composition rule
/// `L_h(z) = 1 − 1/n + L_f(z^{1/n})/n`; `None` without a base closed form.
pub fn power_log_hazard_analytic(base: &DistributionSpec, n: u32, z: f64) -> Option<f64> {
    let nf = n as f64;
    let lf = distributions::log_hazard_analytic(base, z.powf(1.0 / nf))?;
    Some(1.0 - 1.0 / nf + lf / nf)
}

/// Density of `Y₂ = ξ₁ξ₂` at `x > 0` by numerical Mellin self-convolution,
/// `g₂(x) = ∫ f(e^t) f(x e^{−t}) dt` after the substitution `u = e^t`.
pub fn product_density_pair(base: &DistributionSpec, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(
            "product_density_pair",
            format!("x = {x} not in (0, inf)"),
        ));
    }
    let f = |t: f64| {
        let a = distributions::log_density(base, t.exp());
        let b = distributions::log_density(base, x * (-t).exp());
        match (a, b) {
            (Ok(a), Ok(b)) => {
                let s = a + b;
                if s < -745.0 {
                    0.0
                } else {
                    s.exp()
                }
            }
            _ => 0.0,
        }
    };
    // Unit-length panels keep the first Kronrod pass from stepping over the
    // peak near t = ln√x.
    let pts = quad::linear_partition(-40.0, 40.0, 80);
    let r = quad::integrate_segmented(f, &pts, 1e-300, 1e-7, 6000)?;
    Ok(r.value)
}

/// Closed-form product density for two generalized gamma factors,
/// `g₂(x) = (2c²/β) x^{γ−1} K₀(2α x^{β/2})`.
pub fn product_density_gg_closed(p: &GgParams, x: f64) -> Result<f64> {
    distributions::density(&DistributionSpec::HalfBessel(*p), x)
}

/// Large-x model of `−ln g₂` for the Krein classifier:
/// `g₂(x) ≈ C x^{γ−β/4−1} e^{−2α x^{β/2}}`. Only the exponents matter for
/// the verdict; the constant is the rigorous K₀ envelope.
pub fn product_pair_tail_model(p: &GgParams) -> TailModel {
    density_tail_model(&DistributionSpec::HalfBessel(*p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{log_moment, GgParams};
    use crate::specfun::log_gamma;

    const LN_2: f64 = std::f64::consts::LN_2;

    fn gg(a: f64, b: f64, g: f64) -> DistributionSpec {
        DistributionSpec::Gg(GgParams::new(a, b, g).unwrap())
    }

    #[test]
    fn power_moments_examples() {
        // Exp(1), n = 2: m_3 = 6! = 720.
        let seq = power_moments(&gg(1.0, 1.0, 1.0), 2, 5).unwrap();
        assert!((seq.log_m(3) - 720.0_f64.ln()).abs() < 1e-12);
        // Half-normal squared has unit mean.
        let seq = power_moments(&gg(0.5, 2.0, 1.0), 2, 3).unwrap();
        assert!(seq.log_m(1).abs() < 1e-13);
        // Half-logistic cube: m_2 within the Γ bracket at s = 6.
        let seq = power_moments(&DistributionSpec::HalfLogistic, 3, 3).unwrap();
        let lg7 = log_gamma(7.0).unwrap();
        assert!(seq.log_m(2) >= lg7 - LN_2 - 1e-9 && seq.log_m(2) <= lg7 + LN_2 + 1e-9);
    }

    #[test]
    fn product_moments_examples() {
        // Exp(1), n = 2: m_2 = (2!)² = 4.
        let seq = product_moments(&gg(1.0, 1.0, 1.0), 2, 5).unwrap();
        assert!((seq.log_m(2) - 4.0_f64.ln()).abs() < 1e-13);
        // n = 1 reproduces the base moments.
        for base in [
            gg(2.0, 1.0, 3.0),
            DistributionSpec::HalfLogistic,
            DistributionSpec::LogNormal01,
        ] {
            let prod = product_moments(&base, 1, 10).unwrap();
            for k in 0..=10 {
                let m = log_moment(&base, k as f64).unwrap();
                assert!(
                    (prod.log_m(k) - m).abs() < 1e-10,
                    "{} k={k}",
                    base.name()
                );
            }
        }
    }

    #[test]
    fn product_pair_matches_bessel_closed_form() {
        // Exp(1) pair: g₂(x) = 2 K₀(2√x) at a few points, relative 1e-6.
        let p = GgParams::new(1.0, 1.0, 1.0).unwrap();
        for &x in &[0.1, 0.5, 1.0, 4.0, 12.0] {
            let numeric = product_density_pair(&gg(1.0, 1.0, 1.0), x).unwrap();
            let closed = product_density_gg_closed(&p, x).unwrap();
            assert!(
                ((numeric - closed) / closed).abs() < 1e-6,
                "x={x}: {numeric} vs {closed}"
            );
        }
    }

    #[test]
    fn product_pair_half_normal_point() {
        // Two half-normals at x = 1: (2/π) K₀(1).
        let numeric = product_density_pair(&gg(0.5, 2.0, 1.0), 1.0).unwrap();
        let expect = 2.0 / std::f64::consts::PI * 0.421_024_438_240_708_33;
        assert!(((numeric - expect) / expect).abs() < 1e-6);
    }

    #[test]
    fn product_pair_moments_match_density() {
        // ∫ x^k g₂ dx vs the composed product moments, Exp(1) pair, k ≤ 10.
        let base = gg(1.0, 1.0, 1.0);
        let p = GgParams::new(1.0, 1.0, 1.0).unwrap();
        let seq = product_moments(&base, 2, 10).unwrap();
        let tail = product_pair_tail_model(&p);
        for k in 1..=10usize {
            let s = k as f64;
            let mut hi = 100.0;
            while tail.moment_tail_bound(s, hi) > 1e-12 {
                hi *= 2.0;
            }
            let pts = quad::log_partition(1e-12, hi, 160);
            let m = quad::integrate_segmented(
                |x: f64| x.powf(s) * product_density_gg_closed(&p, x).unwrap(),
                &pts,
                1e-13,
                1e-9,
                8000,
            )
            .unwrap()
            .value;
            let rel = (m.ln() - seq.log_m(k)).abs();
            assert!(rel < 1e-6, "k={k}: quad {} vs closed {}", m.ln(), seq.log_m(k));
        }
    }

    #[test]
    fn half_logistic_pair_density_positive_decreasing() {
        let base = DistributionSpec::HalfLogistic;
        let xs = [0.05, 0.1, 0.3, 0.8, 2.0];
        let mut prev = f64::INFINITY;
        for &x in &xs {
            let g = product_density_pair(&base, x).unwrap();
            assert!(g > 0.0);
            assert!(g < prev, "g₂ must decrease: {g} at {x}");
            prev = g;
        }
    }

    #[test]
    fn power_density_examples() {
        // Identity change of variables: Exp(1) at z = 2.
        let v = power_density(&gg(1.0, 1.0, 1.0), 1, 2.0).unwrap();
        assert!((v - (-2.0_f64).exp()).abs() < 1e-14);
        // Half-logistic s = 3 at z = 8: (2/3) 8^{-2/3} e^{-2}/(1+e^{-2})².
        let v = power_density(&DistributionSpec::HalfLogistic, 3, 8.0).unwrap();
        let e2 = (-2.0_f64).exp();
        let expect = (2.0 / 3.0) * 8.0_f64.powf(-2.0 / 3.0) * e2 / ((1.0 + e2) * (1.0 + e2));
        assert!((v - expect).abs() < 1e-14, "{v} vs {expect}");
        // Exp(1) cube at z = 1: e^{-1}/3.
        let v = power_density(&gg(1.0, 1.0, 1.0), 3, 1.0).unwrap();
        assert!((v - (-1.0_f64).exp() / 3.0).abs() < 1e-14);
        // z ≤ 0 rejected.
        assert!(power_density(&gg(1.0, 1.0, 1.0), 2, 0.0).is_err());
    }

    #[test]
    fn power_density_normalizes() {
        for (base, n) in [
            (gg(1.0, 1.0, 1.0), 3u32),
            (gg(0.5, 2.0, 1.0), 2),
            (DistributionSpec::HalfLogistic, 2),
        ] {
            // Tail cut via the base model: P[ξⁿ > z] = P[ξ > z^{1/n}].
            let tail = crate::distributions::density_tail_model(&base);
            let mut hi_base = 60.0;
            while tail.moment_tail_bound(0.0, hi_base) > 1e-12 {
                hi_base *= 2.0;
            }
            let hi = hi_base.powi(n as i32);
            let lo: f64 = 1e-14;
            // Head mass below lo, exact: P[ξⁿ ≤ lo] = 1 − F̄(lo^{1/n}).
            let head = 1.0
                - crate::distributions::survival(&base, lo.powf(1.0 / n as f64)).unwrap();
            let pts = quad::log_partition(lo, hi, 200);
            let total = head
                + quad::integrate_segmented(
                    |z: f64| power_density(&base, n, z).unwrap_or(0.0),
                    &pts,
                    1e-12,
                    1e-8,
                    8000,
                )
                .unwrap()
                .value;
            assert!(
                (total - 1.0).abs() < 1e-6,
                "{} power {n} integrates to {total}",
                base.name()
            );
        }
    }

    #[test]
    fn lyapunov_moment_inequality_grid() {
        // E[X_n^k] ≥ E[Y_n^k]: exact for closed families, 1e-9 slack for
        // quadrature families, n ∈ {2..5}, k ≤ 40.
        let bases = [
            gg(1.0, 1.0, 1.0),
            gg(0.5, 2.0, 1.0),
            gg(2.0, 1.0, 3.0),
            gg(1.0, 0.4, 1.0),
            DistributionSpec::HalfLogistic,
            DistributionSpec::LogNormal01,
            DistributionSpec::LogSkewNormal { lambda: 1.0 },
            DistributionSpec::HalfBessel(GgParams::new(1.0, 1.0, 1.0).unwrap()),
        ];
        for base in bases {
            let exact = base_exactness(&base).0;
            let slack = if exact { 0.0 } else { 1e-9 };
            for n in 2..=5u32 {
                let pow = power_moments(&base, n, 40).unwrap();
                let prod = product_moments(&base, n, 40).unwrap();
                for k in 1..=40 {
                    assert!(
                        pow.log_m(k) >= prod.log_m(k) - slack,
                        "{} n={n} k={k}: {} < {}",
                        base.name(),
                        pow.log_m(k),
                        prod.log_m(k)
                    );
                }
            }
        }
    }

    #[test]
    fn half_bessel_equals_gg_product_pair_moments() {
        let p = GgParams::new(0.5, 2.0, 1.0).unwrap();
        let hb = DistributionSpec::HalfBessel(p);
        let ident = power_moments(&hb, 1, 20).unwrap();
        let pair = product_moments(&gg(0.5, 2.0, 1.0), 2, 20).unwrap();
        for k in 0..=20 {
            assert_eq!(ident.log_m(k), pair.log_m(k), "k={k}");
        }
    }

    #[test]
    fn density_form_classification() {
        let base = gg(1.0, 1.0, 1.0);
        let tv = transformed(&base, &TransformSpec::product(2).unwrap(), 10).unwrap();
        assert_eq!(tv.density_form, DensityForm::Closed);
        let tv = transformed(&DistributionSpec::HalfLogistic, &TransformSpec::product(2).unwrap(), 10)
            .unwrap();
        assert_eq!(tv.density_form, DensityForm::MellinNumeric);
        let tv = transformed(&base, &TransformSpec::product(4).unwrap(), 10).unwrap();
        assert_eq!(tv.density_form, DensityForm::Unavailable);
        let tv = transformed(&base, &TransformSpec::power(7).unwrap(), 10).unwrap();
        assert_eq!(tv.density_form, DensityForm::Closed);
    }

    #[test]
    fn transform_spec_validation() {
        assert!(TransformSpec::new(TransformKind::Identity, 2).is_err());
        assert!(TransformSpec::new(TransformKind::Power, 0).is_err());
        assert!(TransformSpec::power(3).unwrap().n == 3);
    }
}
