use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::numerics::{integrate, Domain, EvalResult, QuadratureSpec};

/// A geodesic distance `ρ ≥ 0` in `ℍᵈ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperbolicPoint {
    pub rho: f64,
}

impl HyperbolicPoint {
    pub fn new(rho: f64) -> Result<Self> {
        if rho >= 0.0 && rho.is_finite() {
            Ok(Self { rho })
        } else {
            domain(format!("geodesic distance must be non-negative, got {rho}"))
        }
    }
}

/// `[(1/sinh ρ) ∂_ρ]^k e^{-ρ²/(4t)}` as an exact finite sum
/// `Σ c · ρ^a cosh^b ρ sinh^{-m} ρ t^{-j} e^{-ρ²/(4t)}`, keyed by `(a, b, m, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OddKernelExpansion {
    pub k: u32,
    pub terms: BTreeMap<(u32, u32, u32, u32), f64>,
}

impl OddKernelExpansion {
    pub fn new(k: u32) -> Self {
        let mut terms = BTreeMap::from([((0, 0, 0, 0), 1.0)]);
        for _ in 0..k {
            let mut next = BTreeMap::new();
            let mut add = |key, c: f64| *next.entry(key).or_insert(0.0) += c;
            for (&(a, b, m, j), &c) in &terms {
                if a > 0 {
                    add((a - 1, b, m + 1, j), c * a as f64);
                }
                if b > 0 {
                    add((a, b - 1, m, j), c * b as f64);
                }
                if m > 0 {
                    add((a, b + 1, m + 2, j), -c * m as f64);
                }
                add((a + 1, b, m + 1, j + 1), -0.5 * c);
            }
            next.retain(|_, c| *c != 0.0);
            terms = next;
        }
        Self { k, terms }
    }

    /// Value at `(t, ρ)`, `ρ > 0`.
    pub fn eval(&self, t: f64, rho: f64) -> f64 {
        let (ch, sh) = (ln_cosh(rho), ln_sinh(rho));
        let gauss = -rho * rho / (4.0 * t);
        self.terms
            .iter()
            .map(|(&(a, b, m, j), &c)| {
                let ln =
                    a as f64 * rho.ln() + b as f64 * ch - m as f64 * sh - j as f64 * t.ln() + gauss;
                c * ln.exp()
            })
            .sum()
    }
}

fn ln_cosh(x: f64) -> f64 {
    x + (-2.0 * x).exp().ln_1p() - std::f64::consts::LN_2
}

fn ln_sinh(x: f64) -> f64 {
    if x < 0.5 {
        x.sinh().ln()
    } else {
        x + (-(-2.0 * x).exp()).ln_1p() - std::f64::consts::LN_2
    }
}

/// `((-1)^k/(2π)^k)(4πt)^{-1/2}[(1/sinh ρ)∂_ρ]^k e^{-k²t - ρ²/(4t)}` with
/// `k = (d-1)/2`, for odd `d ≥ 3`.
pub fn heat_kernel_hyperbolic_odd(t: f64, rho: f64, d: u32) -> Result<f64> {
    if d < 3 || d.is_multiple_of(2) {
        return domain(format!("odd-dimensional kernel needs odd d >= 3, got {d}"));
    }
    if !(t > 0.0) || !(rho > 0.0) {
        return domain(format!("need t > 0 and rho > 0, got t = {t}, rho = {rho}"));
    }
    let k = (d - 1) / 2;
    let kf = k as f64;
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let prefactor =
        sign * (2.0 * PI).powi(-(k as i32)) * (4.0 * PI * t).powf(-0.5) * (-kf * kf * t).exp();
    Ok(prefactor * OddKernelExpansion::new(k).eval(t, rho))
}

/// `(4πt)^{-3/2}(ρ/sinh ρ)e^{-t-ρ²/(4t)}`, with `ρ/sinh ρ → 1` at the origin.
pub fn heat_kernel_h3(t: f64, rho: f64) -> Result<f64> {
    if !(t > 0.0) {
        return domain(format!("t must be positive, got {t}"));
    }
    let rho = HyperbolicPoint::new(rho)?.rho;
    Ok((4.0 * PI * t).powf(-1.5) * rho_over_sinh(rho) * (-t - rho * rho / (4.0 * t)).exp())
}

fn rho_over_sinh(rho: f64) -> f64 {
    if rho < 1e-4 {
        1.0 - rho * rho / 6.0
    } else {
        rho / rho.sinh()
    }
}

/// `∫_0^∞ e^{-αt} p₃(t, ρ) dt`, needs `Re α > -1` and `ρ > 0`.
pub fn laplace_hyperbolic(alpha: Complex64, rho: f64, q: &QuadratureSpec) -> Result<EvalResult> {
    if !(alpha.re > -1.0) || !(rho > 0.0) {
        return domain(format!(
            "need Re alpha > -1 and rho > 0, got alpha = {alpha}, rho = {rho}"
        ));
    }
    let c = rho_over_sinh(rho).ln();
    let b = rho * rho / 4.0;
    integrate(
        |t| (c - 1.5 * (4.0 * PI * t).ln() - (1.0 + alpha) * t - b / t).exp(),
        Domain::PositiveReals,
        q,
    )
}

/// Relative gap between `-(1/4)∫ t^{-3/2} e^{-((1+α)t + ρ²/(4t))} dt` and
/// `-(1/4)(4π)^{3/2}(sinh ρ/ρ) laplace_hyperbolic(α, ρ)`.
pub fn hyperbolic_identification_residual(alpha: f64, rho: f64, q: &QuadratureSpec) -> Result<f64> {
    if !(alpha > 0.0) || !(rho > 0.0) {
        return domain(format!(
            "need alpha > 0 and rho > 0, got alpha = {alpha}, rho = {rho}"
        ));
    }
    let b = rho * rho / 4.0;
    let lhs = -0.25
        * integrate(
            |t| Complex64::new(-1.5 * t.ln() - (1.0 + alpha) * t - b / t, 0.0).exp(),
            Domain::PositiveReals,
            q,
        )?
        .value
        .re;
    let lap = laplace_hyperbolic(Complex64::new(alpha, 0.0), rho, q)?
        .value
        .re;
    let rhs = -0.25 * (4.0 * PI).powf(1.5) * lap / rho_over_sinh(rho);
    Ok((lhs - rhs).abs() / lhs.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_at_first_order() {
        let e = OddKernelExpansion::new(1);
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[&(1, 0, 1, 1)], -0.5);
    }

    #[test]
    fn odd_kernel_reduces_to_three_dimensions() {
        for &(t, rho) in &[(0.5, 1.0), (0.1, 0.3), (3.0, 4.0)] {
            let a = heat_kernel_hyperbolic_odd(t, rho, 3).unwrap();
            let b = heat_kernel_h3(t, rho).unwrap();
            assert!((a - b).abs() <= 1e-13 * b.abs(), "{t} {rho}");
        }
    }

    #[test]
    fn odd_kernel_guards() {
        assert!(heat_kernel_hyperbolic_odd(1.0, 1.0, 4).is_err());
        assert!(heat_kernel_hyperbolic_odd(1.0, 1.0, 1).is_err());
        assert!(heat_kernel_hyperbolic_odd(1.0, 0.0, 3).is_err());
    }

    #[test]
    fn origin_limit() {
        let p = heat_kernel_h3(1.0, 0.0).unwrap();
        assert!((p - (4.0 * PI).powf(-1.5) * (-1.0f64).exp()).abs() < 1e-18);
    }

    #[test]
    fn identification_guard() {
        assert!(hyperbolic_identification_residual(0.5, 0.0, &Default::default()).is_err());
    }
}
