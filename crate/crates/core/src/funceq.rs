//! Both sides of every `s ↔ 1 - s` functional equation, evaluated
//! independently and compared. Residuals are reported, never asserted.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numerics::{bessel_k, gamma_complex, real_pow, QuadratureSpec};
use crate::regularized::{
    cutoff_half_integral, omega_with, zeta_exp_bessel_series, zeta_regularized, CutoffSpec,
    Representation,
};
use crate::zeta_classic::zeta_analytic;

/// Which functional equation to check, with its parameters.
#[derive(Debug, Clone)]
pub enum FunctionalEqKind {
    /// `π^{-s/2}Γ(s/2)ζ(s) = π^{-(1-s)/2}Γ((1-s)/2)ζ(1-s)`.
    RiemannClassic,
    /// Any symmetric cutoff: completed values plus the two half-integrals.
    GenericH(CutoffSpec),
    /// `e^{-λ(x+1/x)}`, with `K_{s/2}(2λ)` and `K_{(1-s)/2}(2λ)`.
    ExpSymmetric { lambda: f64 },
    /// `e^{-λ(x^α+x^{-α})}`, with `(1/α)K_{s/(2α)}(2λ)` terms.
    ExpAlpha { lambda: f64, alpha: f64 },
    /// The `α = 1/4` difference against the single-`K` right side
    /// `2((1-2s)/λ) K_{1-2s}(2λ)` as printed.
    QuarterAlphaSingleK { lambda: f64 },
    /// The two-parameter cutoff, complex `λ₁, λ₂` allowed.
    TwoParam {
        lambda1: Complex64,
        lambda2: Complex64,
    },
}

/// Parameters echoed in a report.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EqParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda1: Option<Complex64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda2: Option<Complex64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<String>,
}

impl FunctionalEqKind {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::RiemannClassic => "riemann-classic",
            Self::GenericH(_) => "generic-h",
            Self::ExpSymmetric { .. } => "exp-symmetric",
            Self::ExpAlpha { .. } => "exp-alpha",
            Self::QuarterAlphaSingleK { .. } => "quarter-alpha",
            Self::TwoParam { .. } => "two-param",
        }
    }

    pub fn params(&self) -> EqParams {
        match self {
            Self::RiemannClassic => EqParams::default(),
            Self::GenericH(c) => EqParams {
                cutoff: Some(c.name()),
                ..Default::default()
            },
            Self::ExpSymmetric { lambda } | Self::QuarterAlphaSingleK { lambda } => EqParams {
                lambda: Some(*lambda),
                ..Default::default()
            },
            Self::ExpAlpha { lambda, alpha } => EqParams {
                lambda: Some(*lambda),
                alpha: Some(*alpha),
                ..Default::default()
            },
            Self::TwoParam { lambda1, lambda2 } => EqParams {
                lambda1: Some(*lambda1),
                lambda2: Some(*lambda2),
                ..Default::default()
            },
        }
    }
}

/// Left side, right side and residuals of one functional-equation instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalEqReport {
    pub kind: String,
    pub s: Complex64,
    pub params: EqParams,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_residual: f64,
    pub rel_residual: f64,
}

impl FunctionalEqReport {
    fn new(kind: &FunctionalEqKind, s: Complex64, lhs: Complex64, rhs: Complex64) -> Self {
        let abs_residual = (lhs - rhs).norm();
        Self {
            kind: kind.tag().to_string(),
            s,
            params: kind.params(),
            lhs,
            rhs,
            abs_residual,
            rel_residual: abs_residual / lhs.norm().max(rhs.norm()).max(1e-300),
        }
    }
}

fn completed_classic(s: Complex64, q: &QuadratureSpec) -> Result<Complex64> {
    Ok(real_pow(PI, -0.5 * s) * gamma_complex(0.5 * s)? * zeta_analytic(s, q)?.value)
}

fn completed(s: Complex64, cutoff: &CutoffSpec, q: &QuadratureSpec) -> Result<Complex64> {
    Ok(match *cutoff {
        CutoffSpec::ExpSymmetric { lambda } => zeta_exp_bessel_series(s, lambda, q)?.completed,
        _ => zeta_regularized(s, cutoff, q)?.completed,
    })
}

/// `completed(1-s) + J((1-s)/2) = completed(s) + J(s/2)` with
/// `J(ν) = (1/2)∫ h x^{ν-1} dx`.
fn generic(
    kind: &FunctionalEqKind,
    s: Complex64,
    cutoff: &CutoffSpec,
    q: &QuadratureSpec,
) -> Result<FunctionalEqReport> {
    let r = Complex64::new(1.0, 0.0) - s;
    let lhs = completed(r, cutoff, q)? + cutoff_half_integral(cutoff, 0.5 * r, q)?.value;
    let rhs = completed(s, cutoff, q)? + cutoff_half_integral(cutoff, 0.5 * s, q)?.value;
    Ok(FunctionalEqReport::new(kind, s, lhs, rhs))
}

/// Evaluate both sides of `kind` at `s`.
pub fn verify(
    kind: &FunctionalEqKind,
    s: Complex64,
    q: &QuadratureSpec,
) -> Result<FunctionalEqReport> {
    match kind {
        FunctionalEqKind::RiemannClassic => {
            if s == Complex64::new(0.0, 0.0) || s == Complex64::new(1.0, 0.0) {
                return domain("the classical functional equation excludes s = 0 and s = 1");
            }
            let lhs = completed_classic(s, q)?;
            let rhs = completed_classic(1.0 - s, q)?;
            Ok(FunctionalEqReport::new(kind, s, lhs, rhs))
        }
        FunctionalEqKind::GenericH(cutoff) => {
            cutoff.check_symmetry()?;
            if matches!(cutoff, CutoffSpec::None) {
                return domain("generic-h needs a cutoff");
            }
            generic(kind, s, cutoff, q)
        }
        FunctionalEqKind::ExpSymmetric { lambda } => {
            generic(kind, s, &CutoffSpec::exp_symmetric(*lambda)?, q)
        }
        FunctionalEqKind::ExpAlpha { lambda, alpha } => {
            generic(kind, s, &CutoffSpec::exp_alpha(*lambda, *alpha)?, q)
        }
        FunctionalEqKind::TwoParam { lambda1, lambda2 } => {
            generic(kind, s, &CutoffSpec::two_param(*lambda1, *lambda2)?, q)
        }
        FunctionalEqKind::QuarterAlphaSingleK { lambda } => {
            let diff = quarter_alpha_difference(s, *lambda, q)?;
            let rhs = single_k(s, *lambda, 2.0, q)?;
            Ok(FunctionalEqReport::new(kind, s, diff, rhs))
        }
    }
}

/// `completed(1-s) - completed(s)` for the `α = 1/4` cutoff, by quadrature.
fn quarter_alpha_difference(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<Complex64> {
    let cutoff = CutoffSpec::exp_alpha(lambda, 0.25)?;
    Ok(zeta_regularized(1.0 - s, &cutoff, q)?.completed
        - zeta_regularized(s, &cutoff, q)?.completed)
}

/// `prefactor · ((1-2s)/λ) K_{1-2s}(2λ)`.
fn single_k(s: Complex64, lambda: f64, prefactor: f64, q: &QuadratureSpec) -> Result<Complex64> {
    let nu = 1.0 - 2.0 * s;
    Ok(prefactor * nu / lambda * bessel_k(nu, 2.0 * lambda, q)?.value)
}

/// Residuals of the `α = 1/4` single-`K` identity under the two candidate
/// prefactors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuarterAlphaResiduals {
    /// Quadrature value of `completed(1-s) - completed(s)`.
    pub difference: Complex64,
    /// `|difference - 2((1-2s)/λ)K_{1-2s}(2λ)|`, the printed form.
    pub residual_paper_form: f64,
    /// `|difference + 4((1-2s)/λ)K_{1-2s}(2λ)|`, re-derived from the
    /// general-`α` identity with `1/α = 4`.
    pub residual_corrected_form: f64,
}

pub fn quarter_alpha_residual(
    s: Complex64,
    lambda: f64,
    q: &QuadratureSpec,
) -> Result<QuarterAlphaResiduals> {
    let difference = quarter_alpha_difference(s, lambda, q)?;
    Ok(QuarterAlphaResiduals {
        difference,
        residual_paper_form: (difference - single_k(s, lambda, 2.0, q)?).norm(),
        residual_corrected_form: (difference - single_k(s, lambda, -4.0, q)?).norm(),
    })
}

/// `|Ω(s,λ) - Ω(1-s,λ)| / max(|Ω(s,λ)|, |Ω(1-s,λ)|)` with both sides from
/// the `K` series.
pub fn omega_symmetry_residual(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<f64> {
    omega_symmetry_residual_routes(
        s,
        lambda,
        Representation::BesselSeries,
        Representation::BesselSeries,
        q,
    )
}

/// [`omega_symmetry_residual`] with `Ω(s)` and `Ω(1-s)` taken from chosen
/// representations. The quadrature route loses relative accuracy once
/// `|Ω|` falls far below the `O(1)` integrand, roughly `e^{-π|Im s|/4}`.
pub fn omega_symmetry_residual_routes(
    s: Complex64,
    lambda: f64,
    lhs: Representation,
    rhs: Representation,
    q: &QuadratureSpec,
) -> Result<f64> {
    let a = omega_with(s, lambda, lhs, q)?.value;
    let b = omega_with(1.0 - s, lambda, rhs, q)?.value;
    Ok((a - b).norm() / a.norm().max(b.norm()).max(1e-300))
}
