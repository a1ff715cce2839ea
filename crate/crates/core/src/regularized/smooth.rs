use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{integrate, Domain, EvalResult, QuadratureSpec};
use crate::theta::ln_psi;
use crate::zeta_classic::zeta_series;

/// `F(s, λ) = Σ_{n≥1} n^{-s} e^{-λπn²}`; `λ = 0` is `ζ(s)` and needs `Re s > 1`.
#[allow(non_snake_case)]
pub fn smooth_F(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return domain(format!("lambda must be non-negative, got {lambda}"));
    }
    if lambda == 0.0 {
        return zeta_series(s, q);
    }
    // terms grow up to n* = √(-σ/(2πλ)) when σ < 0
    let peak = if s.re < 0.0 {
        (-s.re / (2.0 * PI * lambda)).sqrt()
    } else {
        0.0
    };
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..=q.max_terms {
        let nf = n as f64;
        let term = (-s * nf.ln() - lambda * PI * nf * nf).exp();
        sum += term;
        if nf > peak && term.norm() <= q.series_tail_tol * sum.norm() {
            return Ok(EvalResult {
                value: sum,
                err_estimate: term.norm(),
                evaluations: n,
                converged: true,
            });
        }
    }
    Err(Error::NonConvergence {
        estimate: sum,
        err_estimate: f64::NAN,
        evaluations: q.max_terms,
    })
}

/// The four integrals whose sum is `π^{-s/2}Γ(s/2) F(s, λ)`, each written in
/// the shifted variable `u = y - λ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbcdTerms {
    /// `∫_1^∞ u^{(s-2)/2} ψ(u+λ) du`
    pub a: EvalResult,
    /// `∫_0^1 u^{(s-2)/2} (u+λ)^{-1/2} ψ(1/(u+λ)) du`
    pub b: EvalResult,
    /// `-(1/2)∫_0^1 u^{(s-2)/2} du`, equal to `-1/s`
    pub c: EvalResult,
    /// `(1/2)∫_0^1 u^{(s-2)/2} (u+λ)^{-1/2} du`
    pub d: EvalResult,
}

impl AbcdTerms {
    pub fn sum(&self) -> Complex64 {
        self.a.value + self.b.value + self.c.value + self.d.value
    }
}

/// Evaluate A, B, C, D by quadrature. Needs `Re s > 0` and `λ ≥ 0`, with
/// `Re s > 1` when `λ = 0`.
pub fn abcd_terms(s: Complex64, lambda: f64, q: &QuadratureSpec) -> Result<AbcdTerms> {
    if !(lambda >= 0.0) || !lambda.is_finite() {
        return domain(format!("lambda must be non-negative, got {lambda}"));
    }
    if !(s.re > 0.0) || (lambda == 0.0 && !(s.re > 1.0)) {
        return domain(format!(
            "A/B/C/D integrals diverge at s = {s}, lambda = {lambda}"
        ));
    }
    let e = 0.5 * (s - 2.0);
    let a = integrate(
        |u| (e * u.ln() + ln_psi(u + lambda)).exp(),
        Domain::SemiInfinite(1.0),
        q,
    )?;
    let b = integrate(
        |u| {
            let y = u + lambda;
            (e * u.ln() - 0.5 * y.ln() + ln_psi(1.0 / y)).exp()
        },
        Domain::Finite(0.0, 1.0),
        q,
    )?;
    let c = integrate(|u| (e * u.ln()).exp(), Domain::Finite(0.0, 1.0), q)?
        .scale(Complex64::new(-0.5, 0.0));
    let d = integrate(
        |u| (e * u.ln() - 0.5 * (u + lambda).ln()).exp(),
        Domain::Finite(0.0, 1.0),
        q,
    )?
    .scale(Complex64::new(0.5, 0.0));
    Ok(AbcdTerms { a, b, c, d })
}

/// `|(F(s,λ+h) - F(s,λ-h))/(2h) + π F(s-2, λ)|`, the centered-difference
/// residual of `∂_λ F(s,λ) = -π F(s-2,λ)`. Needs `λ > h > 0`.
#[allow(non_snake_case)]
pub fn pde_residual_F(s: Complex64, lambda: f64, h_step: f64, q: &QuadratureSpec) -> Result<f64> {
    if !(h_step > 0.0 && lambda > h_step) {
        return domain(format!(
            "need lambda > h > 0, got lambda = {lambda}, h = {h_step}"
        ));
    }
    let up = smooth_F(s, lambda + h_step, q)?.value;
    let down = smooth_F(s, lambda - h_step, q)?.value;
    let rhs = smooth_F(s - 2.0, lambda, q)?.value;
    Ok(((up - down) / (2.0 * h_step) + PI * rhs).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_lambda_is_zeta() {
        let f = smooth_F(c(2.0, 0.0), 0.0, &Default::default()).unwrap();
        assert!((f.value.re - PI * PI / 6.0).abs() < 1e-12);
        assert!(smooth_F(c(0.5, 0.0), 0.0, &Default::default()).is_err());
        assert!(smooth_F(c(2.0, 0.0), -0.1, &Default::default()).is_err());
    }

    #[test]
    fn damping_lowers_the_sum() {
        let f = smooth_F(c(2.0, 0.0), 0.1, &Default::default())
            .unwrap()
            .value
            .re;
        assert!(f < PI * PI / 6.0);
    }

    #[test]
    fn c_term_closed_form() {
        let t = abcd_terms(c(2.0, 0.0), 0.7, &Default::default()).unwrap();
        assert!((t.c.value - c(-0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn d_term_at_zero_lambda() {
        let t = abcd_terms(c(2.0, 0.0), 0.0, &Default::default()).unwrap();
        assert!((t.d.value - c(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn abcd_guards() {
        let q = QuadratureSpec::default();
        assert!(abcd_terms(c(0.0, 1.0), 0.5, &q).is_err());
        assert!(abcd_terms(c(0.8, 0.0), 0.0, &q).is_err());
        assert!(pde_residual_F(c(1.0, 0.0), 0.001, 0.01, &q).is_err());
    }
}
