//! Regularized zeta-functions: a cutoff `h(x)` inserted into the theta
//! integral,
//!
//! ```text
//! π^{-s/2} Γ(s/2) ζ_h(s) = ∫_0^∞ ψ(x) h(x) x^{s/2-1} dx,
//! ```
//!
//! evaluated by quadrature for every cutoff, by a `K_ν` series for the
//! exponential cutoff `e^{-λ(x+1/x)}` and the two-parameter cutoff, and by the
//! four-piece boundary form that splits the exponential case at `x = 1`.

mod cutoff;
mod smooth;

pub use cutoff::{
    cutoff_half_integral, cutoff_half_integral_quad, cutoff_value, CustomCutoff, CutoffSpec,
    SYMMETRY_SPOT_CHECKS,
};
pub use smooth::{abcd_terms, pde_residual_F, smooth_F, AbcdTerms};

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{
    bessel_k, bessel_k_complex_arg, integrate, real_pow, recip_gamma, Domain, EvalResult,
    QuadratureSpec,
};
use crate::theta::ln_psi;

/// How a regularized value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Representation {
    Quadrature,
    BesselSeries,
    BoundaryForm,
}

/// A regularized zeta value: `completed = π^{-s/2}Γ(s/2)ζ_h(s)` and the bare
/// `ζ_h(s) = completed · π^{s/2}/Γ(s/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegZetaValue {
    pub completed: Complex64,
    pub bare: Complex64,
    pub representation: Representation,
    pub err_estimate: f64,
    /// Integrand evaluations, or series terms for the series route.
    pub evaluations: usize,
}

impl RegZetaValue {
    fn new(s: Complex64, r: EvalResult, representation: Representation) -> Self {
        Self {
            completed: r.value,
            bare: r.value * real_pow(PI, 0.5 * s) * recip_gamma(0.5 * s),
            representation,
            err_estimate: r.err_estimate,
            evaluations: r.evaluations,
        }
    }

    pub fn completed_result(&self) -> EvalResult {
        EvalResult {
            value: self.completed,
            err_estimate: self.err_estimate,
            evaluations: self.evaluations,
            converged: true,
        }
    }
}

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        domain(format!("lambda must be positive, got {lambda}"))
    }
}

/// The defining integral by quadrature over `(0, ∞)`.
///
/// For the two-parameter cutoffs the integrand is written with
/// `(1/2)(Θ(t) - 1) = ψ(t)`. The plain kind requires `Re s > 1`.
pub fn zeta_regularized(
    s: Complex64,
    cutoff: &CutoffSpec,
    q: &QuadratureSpec,
) -> Result<RegZetaValue> {
    cutoff.validate()?;
    if matches!(cutoff, CutoffSpec::None) && !(s.re > 1.0) {
        return domain(format!("without a cutoff Re s must exceed 1, got {s}"));
    }
    let a = 0.5 * s - 1.0;
    let r = integrate(
        |x| cutoff.weighted(x, ln_psi(x) + a * x.ln()),
        Domain::PositiveReals,
        q,
    )?;
    Ok(RegZetaValue::new(s, r, Representation::Quadrature))
}

/// `2 (λ/(λ+n²π))^{a/4} K_{a/2}(2√(λ(λ+n²π)))`, principal branches.
pub fn exp_series_term(
    a: Complex64,
    lambda: Complex64,
    n: u64,
    q: &QuadratureSpec,
) -> Result<EvalResult> {
    let shifted = lambda + (n * n) as f64 * PI;
    let weight = 2.0 * (0.25 * a * (lambda.ln() - shifted.ln())).exp();
    let k = bessel_k_complex_arg(0.5 * a, 2.0 * lambda.sqrt() * shifted.sqrt(), q)?;
    Ok(k.scale(weight))
}

/// `Σ_{n≥1}` of [`exp_series_term`], stopped when a term drops below
/// `series_tail_tol · |partial sum|`; `evaluations` counts the terms.
fn exp_series(a: Complex64, lambda: Complex64, q: &QuadratureSpec) -> Result<EvalResult> {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for n in 1..=q.max_terms as u64 {
        let t = exp_series_term(a, lambda, n, q)?;
        sum += t.value;
        err += t.err_estimate;
        if t.value.norm() < q.series_tail_tol * sum.norm() {
            return Ok(EvalResult {
                value: sum,
                err_estimate: err + t.value.norm(),
                evaluations: n as usize,
                converged: true,
            });
        }
    }
    Err(Error::NonConvergence {
        estimate: sum,
        err_estimate: err,
        evaluations: q.max_terms,
    })
}

/// `ζ(s, λ)` for the cutoff `e^{-λ(x+1/x)}` as a `K_{s/2}` series; this is
/// the production route for that cutoff and accepts complex `λ`.
pub fn zeta_exp_bessel_series(
    s: Complex64,
    lambda: impl Into<Complex64>,
    q: &QuadratureSpec,
) -> Result<RegZetaValue> {
    let lambda = lambda.into();
    CutoffSpec::exp_symmetric(lambda)?;
    let r = exp_series(s, lambda, q)?;
    Ok(RegZetaValue::new(s, r, Representation::BesselSeries))
}

/// `(1/2)∫_0^1 (x^{(s-3)/2} - x^{(s-2)/2}) e^{-λ(x+1/x)} dx`.
fn boundary_elementary(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    let (a, b) = (0.5 * (s - 3.0), 0.5 * (s - 2.0));
    let r = integrate(
        |x| {
            let lx = x.ln();
            let damp = -lambda * (x + 1.0 / x);
            (a * lx + damp).exp() - (b * lx + damp).exp()
        },
        Domain::Finite(0.0, 1.0),
        q,
    )?;
    Ok(r.scale(Complex64::new(0.5, 0.0)))
}

/// `-∫_0^1 ψ(x)(x^{(s-2)/2} + x^{-(s+1)/2}) e^{-λ(x+1/x)} dx`.
fn boundary_theta(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    let (a, b) = (0.5 * (s - 2.0), -0.5 * (s + 1.0));
    let r = integrate(
        |x| {
            let lx = x.ln();
            let base = ln_psi(x) - lambda * (x + 1.0 / x);
            (a * lx + base).exp() + (b * lx + base).exp()
        },
        Domain::Finite(0.0, 1.0),
        q,
    )?;
    Ok(r.scale(Complex64::new(-1.0, 0.0)))
}

/// The four-piece representation of `ζ(s, λ)`: two elementary integrals on
/// `(0, 1)`, the negative theta integral on `(0, 1)`, and the `K_{s/2}` and
/// `K_{(1-s)/2}` series. Finite at `s = 1`.
pub fn zeta_exp_boundary_form(
    s: Complex64,
    lambda: f64,
    q: &QuadratureSpec,
) -> Result<RegZetaValue> {
    check_lambda(lambda)?;
    let l = Complex64::new(lambda, 0.0);
    let total = boundary_elementary(s, lambda, q)?
        .plus(boundary_theta(s, lambda, q)?)
        .plus(exp_series(s, l, q)?)
        .plus(exp_series(1.0 - s, l, q)?);
    Ok(RegZetaValue::new(s, total, Representation::BoundaryForm))
}

/// The two-parameter value through its `K` expansion: the two boundary
/// integrals `-(1/4)∫ t^{s/2-1} e^{-(λ₁t+λ₂/t)} dt` (and `λ₁ ↔ λ₂`) by
/// quadrature plus `(1/2)Σ_{n∈ℤ}` of the shifted `K_{s/2}` terms. The `n = 0`
/// terms cancel the boundary integrals analytically; here both are computed.
pub fn zeta_two_param_bessel_series(
    s: Complex64,
    lambda1: Complex64,
    lambda2: Complex64,
    q: &QuadratureSpec,
) -> Result<RegZetaValue> {
    CutoffSpec::two_param(lambda1, lambda2)?;
    let a = 0.5 * s - 1.0;
    let boundary = |l1: Complex64, l2: Complex64| {
        integrate(
            |t| (a * t.ln() - (l1 * t + l2 / t)).exp(),
            Domain::PositiveReals,
            q,
        )
    };
    let b1 = boundary(lambda1, lambda2)?;
    let b2 = boundary(lambda2, lambda1)?;
    // (β/(γ + n²π))^{s/4} K_{s/2}(2√(β(γ + n²π)))
    let term = |beta: Complex64, gamma: Complex64, n: u64| -> Result<EvalResult> {
        let g = gamma + (n * n) as f64 * PI;
        let w = (0.25 * s * (beta.ln() - g.ln())).exp();
        Ok(bessel_k_complex_arg(0.5 * s, 2.0 * beta.sqrt() * g.sqrt(), q)?.scale(w))
    };
    let mut total = b1.plus(b2).scale(Complex64::new(-0.25, 0.0));
    let zero = term(lambda2, lambda1, 0)?.plus(term(lambda1, lambda2, 0)?);
    total = total.plus(zero.scale(Complex64::new(0.5, 0.0)));
    let mut terms = 0;
    for n in 1..=q.max_terms as u64 {
        let t = term(lambda2, lambda1, n)?.plus(term(lambda1, lambda2, n)?);
        total = total.plus(t);
        terms = n as usize;
        if t.value.norm() < q.series_tail_tol * total.value.norm() {
            break;
        }
        if terms == q.max_terms {
            return Err(Error::NonConvergence {
                estimate: total.value,
                err_estimate: t.value.norm(),
                evaluations: terms,
            });
        }
    }
    total.evaluations = terms;
    Ok(RegZetaValue::new(s, total, Representation::BesselSeries))
}

/// `ξ(s, λ) = s(s-1) Σ_{n≥1} (λ/(λ+n²π))^{s/4} K_{s/2}(2√(λ²+λn²π))`, which
/// is `(1/2)s(s-1)` times the completed series value.
pub fn xi_lambda(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    check_lambda(lambda)?;
    let ss1 = s * (s - 1.0);
    if ss1 == Complex64::new(0.0, 0.0) {
        return Ok(EvalResult::exact(ss1));
    }
    Ok(exp_series(s, Complex64::new(lambda, 0.0), q)?.scale(0.5 * ss1))
}

/// The small-`λ` form `s(s-1) Σ (ρ/(2πn))^{s/2} K_{s/2}(ρn)` with `ρ = √(4πλ)`.
pub fn xi_lambda_limit_form(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    check_lambda(lambda)?;
    let rho = (4.0 * PI * lambda).sqrt();
    let mut sum = EvalResult::exact(Complex64::new(0.0, 0.0));
    for n in 1..=q.max_terms {
        let nf = n as f64;
        let t = bessel_k(0.5 * s, rho * nf, q)?.scale(real_pow(rho / (2.0 * PI * nf), 0.5 * s));
        sum = sum.plus(t);
        if t.value.norm() < q.series_tail_tol * sum.value.norm() {
            sum.evaluations = n;
            return Ok(sum.scale(s * (s - 1.0)));
        }
    }
    Err(Error::NonConvergence {
        estimate: sum.value,
        err_estimate: f64::NAN,
        evaluations: q.max_terms,
    })
}

/// `Ω(s, λ) = (1/2)s(s-1)[π^{-s/2}Γ(s/2)ζ(s,λ) + K_{s/2}(2λ)]` with the
/// completed value from the `K` series.
pub fn omega(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    omega_with(s, lambda, Representation::BesselSeries, q)
}

/// [`omega`] with the completed value from the chosen representation.
pub fn omega_with(
    s: Complex64,
    lambda: f64,
    representation: Representation,
    q: &QuadratureSpec,
) -> Result<EvalResult> {
    check_lambda(lambda)?;
    let completed = match representation {
        Representation::BesselSeries => zeta_exp_bessel_series(s, lambda, q)?,
        Representation::Quadrature => zeta_regularized(s, &CutoffSpec::exp_symmetric(lambda)?, q)?,
        Representation::BoundaryForm => zeta_exp_boundary_form(s, lambda, q)?,
    };
    let k = bessel_k(0.5 * s, 2.0 * lambda, q)?;
    Ok(completed
        .completed_result()
        .plus(k)
        .scale(0.5 * s * (s - 1.0)))
}

/// `I₁(s, λ) = (1/2)∫_0^1 e^{-λ(x+1/x)} x^{(s-3)/2} dx`.
pub fn i1_integral(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    polar_piece(0.5 * (s - 3.0), lambda, 0.5, q)
}

/// `I₂(s, λ) = -(1/2)∫_0^1 e^{-λ(x+1/x)} x^{(s-2)/2} dx`.
pub fn i2_integral(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    polar_piece(0.5 * (s - 2.0), lambda, -0.5, q)
}

fn polar_piece(a: Complex64, lambda: f64, factor: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    check_lambda(lambda)?;
    let r = integrate(
        |x| (a * x.ln() - lambda * (x + 1.0 / x)).exp(),
        Domain::Finite(0.0, 1.0),
        q,
    )?;
    Ok(r.scale(Complex64::new(factor, 0.0)))
}
