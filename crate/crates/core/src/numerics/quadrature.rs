//! Double-exponential quadrature.
//!
//! Finite intervals use the tanh-sinh map, `[a, ∞)` and `(0, ∞)` use
//! exp-sinh. Each refinement level halves the step in the transformed
//! variable and only evaluates the new (odd) nodes. The error estimate is
//! the magnitude of the last refinement increment, which is a heuristic:
//! for analytic integrands the true error of the returned value is usually
//! far smaller.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::{EvalResult, QuadratureSpec};
use crate::error::{domain, Error, Result};

/// Integration domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// `[a, b]` with `a < b`.
    Finite(f64, f64),
    /// `[a, ∞)`.
    SemiInfinite(f64),
    /// `(0, ∞)`.
    PositiveReals,
}

const H0: f64 = 0.5;
const MIN_LEVEL: usize = 3;
// Beyond these the node spacing underflows (finite) or x overflows (exp-sinh).
const T_MAX_FINITE: f64 = 6.0;
const T_MAX_EXP: f64 = 6.5;
// Level-0 terms below this fraction of the largest one mark the window edge.
const TRIM: f64 = 1e-18;

#[derive(Debug, Clone, Copy)]
enum Map {
    TanhSinh { a: f64, b: f64 },
    ExpSinh { a: f64 },
}

impl Map {
    fn t_max(&self) -> f64 {
        match self {
            Map::TanhSinh { .. } => T_MAX_FINITE,
            Map::ExpSinh { .. } => T_MAX_EXP,
        }
    }

    /// Abscissa and Jacobian `dx/dt` at transformed coordinate `t`.
    #[inline]
    fn node(&self, t: f64) -> (f64, f64) {
        let u = FRAC_PI_2 * t.sinh();
        let du = FRAC_PI_2 * t.cosh();
        match *self {
            Map::TanhSinh { a, b } => {
                let len = b - a;
                let e = (-2.0 * u.abs()).exp();
                // fraction of the interval between x and the nearer endpoint
                let frac = e / (1.0 + e);
                let x = if t < 0.0 {
                    a + len * frac
                } else if t > 0.0 {
                    b - len * frac
                } else {
                    0.5 * (a + b)
                };
                let w = len * 2.0 * du * e / ((1.0 + e) * (1.0 + e));
                (x, w)
            }
            Map::ExpSinh { a } => {
                let ex = u.exp();
                (a + ex, du * ex)
            }
        }
    }
}

/// Integrate `f` over `domain` to the tolerances of `spec`.
///
/// Fails with [`Error::NonConvergence`] when `spec.max_levels` refinements do
/// not meet the tolerance, and with [`Error::NonFiniteIntegrand`] when `f`
/// returns NaN or an infinity at a node.
pub fn integrate<F>(f: F, domain: Domain, spec: &QuadratureSpec) -> Result<EvalResult>
where
    F: Fn(f64) -> Complex64,
{
    let map = match domain {
        Domain::Finite(a, b) => {
            if !(a.is_finite() && b.is_finite()) {
                return domain_err("finite interval endpoints must be finite");
            }
            if a >= b {
                return domain_err(&format!("empty interval [{a}, {b}]"));
            }
            Map::TanhSinh { a, b }
        }
        Domain::SemiInfinite(a) => {
            if !a.is_finite() {
                return domain_err("lower limit must be finite");
            }
            Map::ExpSinh { a }
        }
        Domain::PositiveReals => Map::ExpSinh { a: 0.0 },
    };

    let eval = |t: f64| -> Result<Complex64> {
        let (x, w) = map.node(t);
        if w == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let y = f(x);
        if !(y.re.is_finite() && y.im.is_finite()) {
            return Err(Error::NonFiniteIntegrand { x });
        }
        Ok(y * w)
    };

    // Level 0 over the full window, then trim it to where the terms matter.
    let k_max = (map.t_max() / H0).floor() as i64;
    let mut terms = Vec::with_capacity((2 * k_max + 1) as usize);
    for k in -k_max..=k_max {
        terms.push(eval(k as f64 * H0)?);
    }
    let mut evaluations = terms.len();
    let peak = terms.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if peak == 0.0 {
        return Ok(EvalResult {
            value: Complex64::new(0.0, 0.0),
            err_estimate: 0.0,
            evaluations,
            converged: true,
        });
    }
    let significant = |v: &Complex64| v.norm() > TRIM * peak;
    let first = terms.iter().position(significant).unwrap_or(0) as i64;
    let last = terms
        .iter()
        .rposition(significant)
        .unwrap_or(terms.len() - 1) as i64;
    let t_lo = ((first - k_max - 1) as f64 * H0).max(-map.t_max());
    let t_hi = ((last - k_max + 1) as f64 * H0).min(map.t_max());

    let mut sum: Complex64 = terms.iter().sum();
    let mut estimate = sum * H0;
    let mut err = f64::INFINITY;

    for level in 1..=spec.max_levels {
        let h = H0 / (1u64 << level) as f64;
        // new nodes sit at odd multiples of h
        let j_lo = (t_lo / h).ceil() as i64;
        let j_hi = (t_hi / h).floor() as i64;
        let mut j = if j_lo.rem_euclid(2) == 1 {
            j_lo
        } else {
            j_lo + 1
        };
        while j <= j_hi {
            sum += eval(j as f64 * h)?;
            evaluations += 1;
            j += 2;
        }
        let next = sum * h;
        err = (next - estimate).norm();
        estimate = next;
        if level >= MIN_LEVEL && spec.accepts(estimate, err) {
            return Ok(EvalResult {
                value: estimate,
                err_estimate: err,
                evaluations,
                converged: true,
            });
        }
    }

    Err(Error::NonConvergence {
        estimate,
        err_estimate: err,
        evaluations,
    })
}

fn domain_err<T>(msg: &str) -> Result<T> {
    domain(msg.to_string())
}
