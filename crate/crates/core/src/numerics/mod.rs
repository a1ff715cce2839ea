//! Foundation layer: double-exponential quadrature, the complex gamma
//! function and the modified Bessel function `K_ν` of complex order.
//!
//! Complex powers of a positive real base are always formed as
//! `exp(w · ln x)` with the real logarithm, see [`real_pow`].

mod bessel;
mod gamma;
mod quadrature;

pub use bessel::{bessel_k, bessel_k_complex_arg, bessel_k_mellin};
pub use gamma::{gamma_complex, log_gamma_complex, recip_gamma};
pub(crate) use gamma::{ln_cos, ln_gamma_any};
pub use quadrature::{integrate, Domain};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// A complex number in double precision.
pub type ComplexScalar = Complex64;

/// Tolerances and budgets shared by every integral and series in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_levels: usize,
    pub series_tail_tol: f64,
    pub max_terms: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_levels: 12,
            series_tail_tol: 1e-16,
            max_terms: 1_000_000,
        }
    }
}

impl QuadratureSpec {
    pub fn new(
        abs_tol: f64,
        rel_tol: f64,
        max_levels: usize,
        series_tail_tol: f64,
        max_terms: usize,
    ) -> Result<Self> {
        let spec = Self {
            abs_tol,
            rel_tol,
            max_levels,
            series_tail_tol,
            max_terms,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let unit = |v: f64| v > 0.0 && v < 1.0;
        if !unit(self.abs_tol) || !unit(self.rel_tol) || !unit(self.series_tail_tol) {
            return domain("tolerances must lie in (0, 1)");
        }
        if self.max_levels < 1 || self.max_terms < 1 {
            return domain("max_levels and max_terms must be at least 1");
        }
        Ok(())
    }

    /// Same budgets with both quadrature tolerances scaled by `factor`.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            abs_tol: (self.abs_tol * factor).min(0.5),
            rel_tol: (self.rel_tol * factor).min(0.5),
            ..*self
        }
    }

    pub(crate) fn accepts(&self, value: Complex64, err: f64) -> bool {
        err <= self.abs_tol.max(self.rel_tol * value.norm())
    }
}

/// Value, error estimate and convergence metadata of one evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: ComplexScalar,
    pub err_estimate: f64,
    pub evaluations: usize,
    pub converged: bool,
}

impl EvalResult {
    pub fn exact(value: ComplexScalar) -> Self {
        Self {
            value,
            err_estimate: 0.0,
            evaluations: 1,
            converged: true,
        }
    }

    /// Scale the value and error by a constant factor.
    pub fn scale(self, factor: Complex64) -> Self {
        Self {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.norm(),
            ..self
        }
    }

    /// Combine two results additively; errors add, evaluations add.
    pub fn plus(self, other: EvalResult) -> Self {
        Self {
            value: self.value + other.value,
            err_estimate: self.err_estimate + other.err_estimate,
            evaluations: self.evaluations + other.evaluations,
            converged: self.converged && other.converged,
        }
    }
}

/// `x^w = exp(w ln x)` for positive real `x`.
#[inline]
pub fn real_pow(x: f64, w: Complex64) -> Complex64 {
    (w * x.ln()).exp()
}
