//! Heat kernels on `ℝᵈ` and `ℍᵈ` (unit diffusion constant, curvature `-1`),
//! their Laplace transforms in `t`, and the parameter identifications that
//! tie the two-parameter regularized zeta-function to them.

mod hyperbolic;

pub use hyperbolic::{
    heat_kernel_h3, heat_kernel_hyperbolic_odd, hyperbolic_identification_residual,
    laplace_hyperbolic, HyperbolicPoint, OddKernelExpansion,
};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{
    bessel_k, bessel_k_complex_arg, gamma_complex, integrate, real_pow, Domain, EvalResult,
    QuadratureSpec,
};
use crate::regularized::{zeta_regularized, CutoffSpec};

/// A Euclidean separation `r = |x - y| ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EuclideanPoint {
    pub r: f64,
}

impl EuclideanPoint {
    pub fn new(r: f64) -> Result<Self> {
        if r >= 0.0 && r.is_finite() {
            Ok(Self { r })
        } else {
            domain(format!("distance must be non-negative, got {r}"))
        }
    }
}

/// Dimension (complex allowed), time and Laplace variable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiffusionParams {
    pub d: Complex64,
    pub t: f64,
    pub alpha: Complex64,
}

impl DiffusionParams {
    pub fn new(d: Complex64, t: f64, alpha: Complex64) -> Result<Self> {
        if !(t > 0.0) {
            return domain(format!("t must be positive, got {t}"));
        }
        if !(alpha.re > 0.0) {
            return domain(format!("Re alpha must be positive, got {alpha}"));
        }
        Ok(Self { d, t, alpha })
    }
}

/// `p_t(r) = (4πt)^{-d/2} e^{-r²/(4t)}`.
pub fn heat_kernel_rd(t: f64, r: f64, d: f64) -> Result<f64> {
    if !(t > 0.0) || !(d >= 1.0) {
        return domain(format!(
            "heat kernel needs t > 0 and d >= 1, got t = {t}, d = {d}"
        ));
    }
    let r = EuclideanPoint::new(r)?.r;
    Ok((4.0 * PI * t).powf(-0.5 * d) * (-r * r / (4.0 * t)).exp())
}

/// The resolvent kernel as printed:
/// `2/(2π)^{(d-2)/2} · (√(2α)/r)^{(d-2)/2} · K_{(d-2)/2}(√(2α) r)`.
pub fn resolvent_rd_bessel(
    alpha: Complex64,
    r: f64,
    d: Complex64,
    q: &QuadratureSpec,
) -> Result<EvalResult> {
    if !(alpha.re > 0.0) || !(r > 0.0) {
        return domain(format!(
            "resolvent needs Re alpha > 0 and r > 0, got alpha = {alpha}, r = {r}"
        ));
    }
    let nu = 0.5 * (d - 2.0);
    let root = (2.0 * alpha).sqrt();
    let prefactor = 2.0 * real_pow(2.0 * PI, -nu) * (nu * (root / r).ln()).exp();
    Ok(bessel_k_complex_arg(nu, root * r, q)?.scale(prefactor))
}

/// `∫_0^∞ (4πt)^{-d/2} e^{-(αt + r²/(4t))} dt` by quadrature.
pub fn resolvent_rd_quad(
    alpha: Complex64,
    r: f64,
    d: f64,
    q: &QuadratureSpec,
) -> Result<EvalResult> {
    if !(alpha.re > 0.0) || !(r > 0.0) || !(d >= 1.0) {
        return domain("resolvent needs Re alpha > 0, r > 0 and d >= 1");
    }
    let b = r * r / 4.0;
    integrate(
        |t| (-0.5 * d * (4.0 * PI * t).ln() - alpha * t - b / t).exp(),
        Domain::PositiveReals,
        q,
    )
}

/// `resolvent_rd_bessel(α) / resolvent_rd_quad(2α)`.
///
/// The printed resolvent is the transform of the kernel
/// `(2πt)^{-d/2} e^{-r²/(2t)}` scaled by `2π`, so it matches the `(4πt)`
/// kernel only after `α → 2α`; the ratio is then the constant `4π` for every
/// `d` and `r`.
pub fn resolvent_normalization_ratio(
    alpha: f64,
    r: f64,
    d: f64,
    q: &QuadratureSpec,
) -> Result<Complex64> {
    let a = Complex64::new(alpha, 0.0);
    let num = resolvent_rd_bessel(a, r, Complex64::new(d, 0.0), q)?.value;
    let den = resolvent_rd_quad(2.0 * a, r, d, q)?.value;
    Ok(num / den)
}

/// `∫_0^∞ t^{ν-1} e^{-γt-β/t} dt = 2(β/γ)^{ν/2} K_ν(2√(βγ))`.
fn k_integral(nu: f64, beta: f64, gamma: f64, q: &QuadratureSpec) -> Result<f64> {
    let k = bessel_k(Complex64::new(nu, 0.0), 2.0 * (beta * gamma).sqrt(), q)?
        .value
        .re;
    Ok(2.0 * (beta / gamma).powf(0.5 * nu) * k)
}

/// Relative gap between `π^{d/2-1}Γ(1-d/2)ζ(2-d, α, r²/4)` (the
/// two-parameter completed value at `s = 2 - d`, by quadrature) and its
/// expansion into four `t`-integrals over `r² + 4πn²` shifted distances,
/// each summed over `n ∈ ℤ` through `K_ν` closed forms.
///
/// `Γ(1 - d/2)` has poles at even `d ≥ 2`; there this returns
/// [`Error::Pole`] and [`euclidean_identification_residual_uncompleted`]
/// compares the pole-free integral forms instead.
pub fn euclidean_identification_residual(
    d: f64,
    alpha: f64,
    r: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    gamma_complex(Complex64::new(1.0 - 0.5 * d, 0.0)).map_err(|_| Error::Pole {
        at: Complex64::new(2.0 - d, 0.0),
        what: "Gamma(1 - d/2) at even dimension; use the uncompleted comparison",
    })?;
    euclidean_identification_residual_uncompleted(d, alpha, r, q)
}

/// The same comparison for any real `d`, without reference to `Γ(1 - d/2)`.
pub fn euclidean_identification_residual_uncompleted(
    d: f64,
    alpha: f64,
    r: f64,
    q: &QuadratureSpec,
) -> Result<f64> {
    if !(alpha > 0.0) || !(r > 0.0) || !d.is_finite() {
        return domain("identification needs alpha > 0, r > 0 and finite d");
    }
    let s = Complex64::new(2.0 - d, 0.0);
    let cutoff = CutoffSpec::two_param(alpha, r * r / 4.0)?;
    let lhs = zeta_regularized(s, &cutoff, q)?.completed;
    let rhs = euclidean_expansion(d, alpha, r, q)?;
    Ok((lhs - rhs).norm() / lhs.norm().max(1e-300))
}

/// `-(1/4)∫(t^{-d/2} + t^{d/2-2}) e^{-(αt + r²/4t)} dt
///  + (1/4)Σ_{n∈ℤ} ∫(t^{-(1+d)/2} + t^{d/2-2}) e^{-(αt + (r²+4πn²)/4t)} dt`.
fn euclidean_expansion(d: f64, alpha: f64, r: f64, q: &QuadratureSpec) -> Result<f64> {
    let (nu_a, nu_b, nu_c) = (1.0 - 0.5 * d, 0.5 * d - 1.0, 0.5 * (1.0 - d));
    let b0 = r * r / 4.0;
    let mut total = -0.25 * (k_integral(nu_a, b0, alpha, q)? + k_integral(nu_b, b0, alpha, q)?);
    let shifted = |n: f64| -> Result<f64> {
        let b = (r * r + 4.0 * PI * n * n) / 4.0;
        Ok(0.25 * (k_integral(nu_c, b, alpha, q)? + k_integral(nu_b, b, alpha, q)?))
    };
    total += shifted(0.0)?;
    for n in 1..=q.max_terms {
        let t = 2.0 * shifted(n as f64)?;
        total += t;
        if t.abs() < q.series_tail_tol * total.abs() {
            return Ok(total);
        }
    }
    Err(Error::NonConvergence {
        estimate: Complex64::new(total, 0.0),
        err_estimate: f64::NAN,
        evaluations: q.max_terms,
    })
}
