//! The Riemann zeta-function and its classical companions: the factor
//! `ϑ(s)` of `ζ(s) = ϑ(s)ζ(1-s)`, the entire `ξ(s)`, Hardy's `Z(t)`, the
//! approximate functional equation and zero scanning on the critical line.
//!
//! [`zeta_analytic`] uses the theta-integral continuation
//!
//! ```text
//! π^{-s/2} Γ(s/2) ζ(s) = 1/(s(s-1)) + ∫_1^∞ ψ(x) (x^{(s-2)/2} + x^{-(s+1)/2}) dx
//! ```
//!
//! whose two right-hand terms cancel to `e^{-π|t|/4}` as `|t|` grows. When
//! the predicted loss exceeds the tolerance it switches to Euler–Maclaurin
//! summation, which is also the engine of [`zeta_series`].

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::numerics::{
    gamma_complex, integrate, ln_cos, ln_gamma_any, log_gamma_complex, real_pow, recip_gamma,
    Domain, EvalResult, QuadratureSpec,
};
use crate::theta::psi_value;

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `B_2, B_4, …, B_30`.
const BERNOULLI: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Roundoff floor assumed for the theta integral when predicting cancellation.
const QUAD_EPS: f64 = 1e-15;

/// A point `1/2 + it` on the critical line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalLinePoint {
    pub t: f64,
}

impl CriticalLinePoint {
    pub fn s(self) -> Complex64 {
        Complex64::new(0.5, self.t)
    }
}

/// A sign change of `Z` refined by bisection.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroBracket {
    pub t_lo: f64,
    pub t_hi: f64,
    pub z_lo: f64,
    pub z_hi: f64,
    pub refined_t: f64,
}

/// Euler–Maclaurin summation of `Σ n^{-s}` with `M = 15` correction terms,
/// valid for every `s ≠ 1`.
pub(crate) fn euler_maclaurin(s: Complex64) -> EvalResult {
    let m = BERNOULLI.len();
    let n = (((s.norm() + 2.0 * m as f64) / (0.5 * PI)).ceil() as usize).max(10);
    let nf = n as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += real_pow(k as f64, -s);
    }
    let n_pow = real_pow(nf, -s);
    sum += n_pow * nf / (s - 1.0) + 0.5 * n_pow;
    // T_k = B_{2k}/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    let mut poch = s;
    let mut fact = 2.0;
    let mut power = n_pow / nf;
    let mut last = 0.0;
    for (k, b) in BERNOULLI.iter().enumerate() {
        if k > 0 {
            let j = 2.0 * k as f64;
            poch *= (s + j - 1.0) * (s + j);
            fact *= (j + 1.0) * (j + 2.0);
            power /= nf * nf;
        }
        let term = poch * power * (b / fact);
        sum += term;
        last = term.norm();
    }
    EvalResult {
        value: sum,
        err_estimate: last,
        evaluations: n + m,
        converged: true,
    }
}

/// `ζ(s) = Σ n^{-s}` for `Re s > 1`, with an Euler–Maclaurin tail.
pub fn zeta_series(s: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    if !(s.re > 1.0) {
        return domain(format!("zeta_series needs Re s > 1, got {s}"));
    }
    let r = euler_maclaurin(s);
    Ok(EvalResult {
        converged: spec.accepts(r.value, r.err_estimate),
        ..r
    })
}

/// `I(s) = ∫_1^X ψ(x)(x^{(s-2)/2} + x^{-(s+1)/2}) dx`, symmetric in
/// `s ↔ 1 - s` by construction: the bracket is `2x^{-3/4} cosh(w ln x / 2)`
/// with `w = s - 1/2`.
pub(crate) fn theta_bracket_integral(s: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    let w = s - 0.5;
    let sigma = w.re.abs() + 0.5;
    // ψ(X) X^{σ*/2} < abs_tol with σ* = max(σ, 1-σ); a further 1e-3 margin
    let target = spec.abs_tol * 1e-3;
    let mut x_max = 2.0f64;
    while -PI * x_max + 0.5 * sigma * x_max.ln() > target.ln() {
        x_max += 0.5;
    }
    integrate(
        |x| {
            let lx = x.ln();
            let cosh = (0.5 * w * lx).cosh();
            psi_value(x, 1e-17).0 * 2.0 * (-0.75 * lx).exp() * cosh
        },
        Domain::Finite(1.0, x_max),
        spec,
    )
}

/// Absolute error in `ζ(s)` expected from the cancellation in the theta
/// integral route.
fn theta_route_loss(s: Complex64) -> f64 {
    let scale = real_pow(PI, 0.5 * s) * recip_gamma(0.5 * s);
    QUAD_EPS * scale.norm() / (s * (s - 1.0)).norm().max(1e-300)
}

/// `ζ(s)` on `ℂ \ {1}` through the theta integral, with an Euler–Maclaurin
/// fallback where that integral cancels catastrophically (large `|Im s|`
/// or very negative `Re s`).
pub fn zeta_analytic(s: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    if s == ONE {
        return Err(Error::Pole {
            at: s,
            what: "Riemann zeta",
        });
    }
    if !s.is_finite() {
        return domain(format!("non-finite argument {s}"));
    }
    if theta_route_loss(s) > spec.abs_tol {
        let r = euler_maclaurin(s);
        return Ok(EvalResult {
            converged: spec.accepts(r.value, r.err_estimate),
            ..r
        });
    }
    zeta_theta_route(s, spec)
}

/// `ζ(s)` through the theta integral only, never falling back. Loses about
/// `1e-15 · |π^{s/2}/Γ(s/2)| / |s(s-1)|` in absolute accuracy.
pub fn zeta_theta_route(s: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    if s == ONE {
        return Err(Error::Pole {
            at: s,
            what: "Riemann zeta",
        });
    }
    if !s.is_finite() {
        return domain(format!("non-finite argument {s}"));
    }
    let integral = theta_bracket_integral(s, spec)?;
    // π^{s/2}[1/(2Γ(1+s/2)(s-1)) + I(s)/Γ(s/2)]: finite at s = 0
    let pi_pow = real_pow(PI, 0.5 * s);
    let pole_part = recip_gamma(1.0 + 0.5 * s) / (2.0 * (s - 1.0));
    let rg = recip_gamma(0.5 * s);
    Ok(EvalResult {
        value: pi_pow * (pole_part + rg * integral.value),
        err_estimate: (pi_pow * rg).norm() * integral.err_estimate,
        ..integral
    })
}

/// `π^{-s/2} Γ(s/2) ζ(s)`; a pole at `s = 0` and `s = 1`.
pub fn completed_zeta(s: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    let z = zeta_analytic(s, spec)?;
    let g = gamma_complex(0.5 * s)?;
    Ok(z.scale(real_pow(PI, -0.5 * s) * g))
}

fn is_real_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re == s.re.round()
}

/// `ϑ(s) = (2π)^s / (2 Γ(s) cos(πs/2))`, assembled in log space so it stays
/// finite far from the real axis.
pub fn chi_factor(s: Complex64) -> Result<Complex64> {
    if is_real_integer(s) && (s.re <= 0.0 || s.re.rem_euclid(2.0) == 1.0) {
        return Err(Error::Pole {
            at: s,
            what: "chi factor",
        });
    }
    let ln = s * (2.0 * PI).ln() - std::f64::consts::LN_2 - ln_gamma_any(s) - ln_cos(0.5 * PI * s);
    Ok(ln.exp())
}

/// `ξ(s) = s(s-1) π^{-s/2} Γ(s/2) ζ(s)`, entire.
///
/// Near the real axis this is `1 + s(s-1) I(s)` with the symmetric bracket
/// integral, exactly invariant under `s ↔ 1 - s`. Where that sum cancels it
/// falls back to the product form.
pub fn xi_entire(s: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    let w = s - 0.5;
    let ss1 = w * w - 0.25;
    if ss1 == Complex64::new(0.0, 0.0) {
        return Ok(EvalResult::exact(ONE));
    }
    // |ξ| is of order |π^{-s/2}Γ(s/2)| |s(s-1)|; compare with the O(1) terms
    let magnitude = if is_real_integer(0.5 * s) && s.re <= 0.0 {
        1.0
    } else {
        (ln_gamma_any(0.5 * s) - 0.5 * s * PI.ln()).exp().norm() * ss1.norm()
    };
    if QUAD_EPS / magnitude.max(1e-300) <= spec.rel_tol || s.re.abs() > 40.0 {
        let i = theta_bracket_integral(s, spec)?;
        return Ok(EvalResult {
            value: ONE + ss1 * i.value,
            err_estimate: ss1.norm() * i.err_estimate,
            ..i
        });
    }
    // product form; the symmetric representative keeps Re s ≥ 1/2
    let s_eff = if s.re < 0.5 { ONE - s } else { s };
    let z = euler_maclaurin(s_eff);
    let factor = ss1 * (ln_gamma_any(0.5 * s_eff) - 0.5 * s_eff * PI.ln()).exp();
    Ok(z.scale(factor))
}

/// `θ(t) = Im ln Γ(1/4 + it/2) - (t/2) ln π`.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    let lg = log_gamma_complex(Complex64::new(0.25, 0.5 * t)).expect("Re = 1/4 > 0");
    lg.im - 0.5 * t * PI.ln()
}

/// Hardy's `Z(t) = e^{iθ(t)} ζ(1/2 + it)`. The returned value keeps its
/// (roundoff) imaginary part; `err_estimate` includes it.
pub fn hardy_z(t: f64, spec: &QuadratureSpec) -> Result<EvalResult> {
    if !t.is_finite() {
        return domain(format!("hardy_z needs finite t, got {t}"));
    }
    let z = zeta_analytic(Complex64::new(0.5, t), spec)?;
    let rot = Complex64::from_polar(1.0, riemann_siegel_theta(t));
    let value = rot * z.value;
    Ok(EvalResult {
        value,
        err_estimate: z.err_estimate + value.im.abs(),
        ..z
    })
}

/// `Σ_{n≤x} n^{-s} + ϑ(s) Σ_{n≤y} n^{s-1}`.
///
/// Requires `0 ≤ Re s < 1`, `Im s > 0`, `x, y ≥ 1` and `xy = t/(2π)` to a
/// relative `1e-9`. `err_estimate` is the observed distance to
/// [`zeta_analytic`]; compare it with [`approx_error_scale`].
pub fn approx_functional_sum(
    s: Complex64,
    x: f64,
    y: f64,
    spec: &QuadratureSpec,
) -> Result<EvalResult> {
    let (sigma, t) = (s.re, s.im);
    if !(0.0..1.0).contains(&sigma) {
        return domain(format!(
            "approximate functional equation needs 0 <= Re s < 1, got {sigma}"
        ));
    }
    if !(t > 0.0) {
        return domain("approximate functional equation needs Im s > 0");
    }
    if !(x >= 1.0 && y >= 1.0) {
        return domain(format!("x and y must be at least 1, got x = {x}, y = {y}"));
    }
    let target = t / (2.0 * PI);
    if (x * y - target).abs() > 1e-9 * target {
        return domain(format!("x*y = {} but t/(2 pi) = {target}", x * y));
    }
    let head: Complex64 = (1..=x.floor() as u64).map(|n| real_pow(n as f64, -s)).sum();
    let tail: Complex64 = (1..=y.floor() as u64)
        .map(|n| real_pow(n as f64, s - 1.0))
        .sum();
    let value = head + chi_factor(s)? * tail;
    let z = zeta_analytic(s, spec)?;
    Ok(EvalResult {
        value,
        err_estimate: (value - z.value).norm(),
        evaluations: x.floor() as usize + y.floor() as usize + z.evaluations,
        converged: true,
    })
}

/// `x^{-σ} + t^{1/2-σ} y^{σ-1}`, the shape of the error term.
pub fn approx_error_scale(s: Complex64, x: f64, y: f64) -> f64 {
    let sigma = s.re;
    x.powf(-sigma) + s.im.powf(0.5 - sigma) * y.powf(sigma - 1.0)
}

/// Largest `|t|` accepted by [`find_zeros`].
pub const MAX_SCAN_T: f64 = 500.0;

/// Sign changes of `Z` on the grid `t_min + k·step`, each refined by
/// bisection to a bracket narrower than `1e-8`. Grid points are evaluated
/// in parallel; brackets come back in increasing `t`.
pub fn find_zeros(
    t_min: f64,
    t_max: f64,
    step: f64,
    spec: &QuadratureSpec,
) -> Result<Vec<ZeroBracket>> {
    if !(t_min < t_max) {
        return domain(format!("empty scan range [{t_min}, {t_max}]"));
    }
    if !(step > 0.0 && step <= 1.0) {
        return domain(format!("scan step must lie in (0, 1], got {step}"));
    }
    if t_min.abs() > MAX_SCAN_T || t_max.abs() > MAX_SCAN_T {
        return domain(format!("scan range limited to |t| <= {MAX_SCAN_T}"));
    }
    let count = ((t_max - t_min) / step).ceil() as usize;
    let grid: Vec<f64> = (0..=count)
        .map(|k| (t_min + k as f64 * step).min(t_max))
        .collect();
    let values = grid
        .par_iter()
        .map(|&t| hardy_z(t, spec).map(|r| r.value.re))
        .collect::<Result<Vec<f64>>>()?;
    let coarse: Vec<(f64, f64, f64, f64)> = grid
        .windows(2)
        .zip(values.windows(2))
        .filter(|(_, z)| z[0] * z[1] < 0.0)
        .map(|(t, z)| (t[0], t[1], z[0], z[1]))
        .collect();
    coarse
        .into_par_iter()
        .map(|(a, b, za, zb)| refine(a, b, za, zb, spec))
        .collect()
}

fn refine(
    mut a: f64,
    mut b: f64,
    mut za: f64,
    mut zb: f64,
    spec: &QuadratureSpec,
) -> Result<ZeroBracket> {
    while b - a >= 1e-8 {
        let m = 0.5 * (a + b);
        let zm = hardy_z(m, spec)?.value.re;
        if zm == 0.0 {
            a = m;
            b = m;
            za = zm;
            zb = zm;
            break;
        }
        if za * zm < 0.0 {
            b = m;
            zb = zm;
        } else {
            a = m;
            za = zm;
        }
    }
    Ok(ZeroBracket {
        t_lo: a,
        t_hi: b,
        z_lo: za,
        z_hi: zb,
        refined_t: 0.5 * (a + b),
    })
}
