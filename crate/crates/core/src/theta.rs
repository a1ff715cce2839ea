//! `ψ(x) = Σ_{n≥1} e^{-n²πx}`, `Θ(v) = 1 + 2ψ(v)`, the Jacobi `ϑ₃` and the
//! modular law `Θ(1/v) = √v Θ(v)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{EvalResult, QuadratureSpec};

/// Below this argument `ψ` is evaluated through the modular identity.
pub const MODULAR_SWITCH: f64 = 0.05;

/// A strictly positive theta argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct ThetaArgument(f64);

impl ThetaArgument {
    pub fn new(x: f64) -> Result<Self> {
        if x > 0.0 && x.is_finite() {
            Ok(Self(x))
        } else {
            domain(format!(
                "theta argument must be positive and finite, got {x}"
            ))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Direct summation; returns `(sum, terms)`.
fn psi_direct(x: f64, tail_tol: f64) -> (f64, usize) {
    let mut sum = 0.0;
    let mut n = 1u64;
    loop {
        let nf = n as f64;
        let term = (-nf * nf * PI * x).exp();
        if n > 1 && term <= tail_tol * sum {
            return (sum, n as usize - 1);
        }
        sum += term;
        n += 1;
    }
}

pub(crate) fn psi_value(x: f64, tail_tol: f64) -> (f64, usize) {
    if x >= MODULAR_SWITCH {
        psi_direct(x, tail_tol)
    } else {
        // ψ(x) = -1/2 + (ψ(1/x) + 1/2)/√x
        let (inv, n) = psi_direct(1.0 / x, tail_tol);
        (-0.5 + (inv + 0.5) / x.sqrt(), n)
    }
}

/// `ln ψ(x)` without underflow, for integrands that carry other factors in
/// log form. For `x ≥ 1` this is `-πx + ln(1 + Σ_{n≥2} e^{-(n²-1)πx})`; below
/// it is `-ln(x)/2 + ln(ψ(1/x) + (1 - √x)/2)`.
#[inline]
pub(crate) fn ln_psi(x: f64) -> f64 {
    const TAIL: f64 = 1e-17;
    if x >= 1.0 {
        let mut rest = 0.0;
        let mut n = 2.0f64;
        loop {
            let term = (-(n * n - 1.0) * PI * x).exp();
            if term <= TAIL {
                break;
            }
            rest += term;
            n += 1.0;
        }
        -PI * x + rest.ln_1p()
    } else {
        let (inv, _) = psi_direct(1.0 / x, TAIL);
        -0.5 * x.ln() + (inv + 0.5 * (1.0 - x.sqrt())).ln()
    }
}

/// `ψ(x) = Σ_{n≥1} e^{-n²πx}` for `x > 0`.
pub fn psi(x: f64, spec: &QuadratureSpec) -> Result<EvalResult> {
    let x = ThetaArgument::new(x)?.get();
    let (v, n) = psi_value(x, spec.series_tail_tol);
    Ok(EvalResult {
        value: Complex64::new(v, 0.0),
        err_estimate: spec.series_tail_tol * (v + 1.0),
        evaluations: n.max(1),
        converged: true,
    })
}

/// `Θ(v) = Σ_{n∈ℤ} e^{-πn²v} = 1 + 2ψ(v)`.
pub fn big_theta(v: f64, spec: &QuadratureSpec) -> Result<EvalResult> {
    let p = psi(v, spec)?;
    Ok(EvalResult {
        value: 1.0 + 2.0 * p.value,
        err_estimate: 2.0 * p.err_estimate,
        ..p
    })
}

/// `ϑ₃(z, q) = 1 + 2 Σ_{n≥1} q^{n²} cos(2πnz)` for `|q| < 1`.
pub fn jacobi_theta3(z: Complex64, q: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    let aq = q.norm();
    if !(aq < 1.0) {
        return domain(format!("jacobi_theta3 needs |q| < 1, got |q| = {aq}"));
    }
    let one = Complex64::new(1.0, 0.0);
    if aq == 0.0 {
        return Ok(EvalResult::exact(one));
    }
    // |q^{n²} cos(2πnz)| ~ exp(n² ln|q| + 2πn|Im z|) peaks near n*.
    let growth = 2.0 * PI * z.im.abs();
    let n_peak = (growth / (-2.0 * aq.ln())).ceil() as usize;
    let ln_q = q.ln();
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1..=spec.max_terms {
        let nf = n as f64;
        let term = (ln_q * (nf * nf)).exp() * (2.0 * PI * nf * z).cos();
        sum += term;
        // bound the term by |q|^{n²} cosh(2πn Im z) so a zero of the cosine
        // cannot end the sum early
        let bound = (aq.ln() * nf * nf + growth * nf).exp();
        if n > n_peak && bound <= spec.series_tail_tol * (1.0 + sum.norm()) {
            return Ok(EvalResult {
                value: one + 2.0 * sum,
                err_estimate: 2.0 * bound,
                evaluations: n,
                converged: true,
            });
        }
    }
    Err(Error::NonConvergence {
        estimate: one + 2.0 * sum,
        err_estimate: f64::NAN,
        evaluations: spec.max_terms,
    })
}

/// `|Θ(1/v) - √v Θ(v)|`.
pub fn theta_modular_residual(v: f64, spec: &QuadratureSpec) -> Result<f64> {
    let lhs = big_theta(1.0 / ThetaArgument::new(v)?.get(), spec)?.value;
    let rhs = v.sqrt() * big_theta(v, spec)?.value;
    Ok((lhs - rhs).norm())
}
