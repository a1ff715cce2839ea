//! Modified Bessel function of the second kind, `K_ν(z)`, for complex order.
//!
//! Production route: `K_ν(z) = ∫_0^∞ e^{-z cosh t} cosh(νt) dt`, valid for
//! `Re z > 0`. The integrand is evaluated as `e^{-z} · e^{-2z sinh²(t/2)}
//! cosh(νt)` with the exponentials merged, so nothing overflows at the far
//! nodes. [`bessel_k_mellin`] is the independent second route through
//! `∫_0^∞ x^{ν-1} e^{-β/x - γx} dx = 2 (β/γ)^{ν/2} K_ν(2√(βγ))`.

use num_complex::Complex64;

use super::{integrate, real_pow, Domain, EvalResult, QuadratureSpec};
use crate::error::{domain, Result};

/// `K_ν(z)` for real `z > 0`. Symmetric in `ν`.
pub fn bessel_k(nu: Complex64, z: f64, spec: &QuadratureSpec) -> Result<EvalResult> {
    if !(z > 0.0) || !z.is_finite() {
        return domain(format!("bessel_k needs z > 0, got {z}"));
    }
    bessel_k_complex_arg(nu, Complex64::new(z, 0.0), spec)
}

/// `K_ν(w)` for complex `w` with `Re w > 0`, by the same cosh integral.
///
/// Used where a complex cutoff parameter pushes the argument off the real
/// axis. Accuracy degrades as `arg w` approaches `±π/2`.
pub fn bessel_k_complex_arg(
    nu: Complex64,
    w: Complex64,
    spec: &QuadratureSpec,
) -> Result<EvalResult> {
    if !(w.re > 0.0) || !w.is_finite() {
        return domain(format!("bessel_k needs Re z > 0, got {w}"));
    }
    // Fold the symmetry in so ν and -ν hit bit-identical arithmetic.
    let nu = if nu.re < 0.0 || (nu.re == 0.0 && nu.im < 0.0) {
        -nu
    } else {
        nu
    };
    if nu.im.abs() > SHIFT_ORDER {
        return shifted_contour(nu, w, spec);
    }
    let scaled = integrate(
        |t| {
            let sh = (0.5 * t).sinh();
            let base = -w * (2.0 * sh * sh);
            let a = (base + nu * t).exp();
            let b = (base - nu * t).exp();
            0.5 * (a + b)
        },
        Domain::SemiInfinite(0.0),
        spec,
    )?;
    Ok(scaled.scale((-w).exp()))
}

/// Above this `|Im ν|` the real-axis integrand is `O(1)` while `K_ν` is
/// `O(e^{-π|Im ν|/2})`, so the line of integration is moved.
const SHIFT_ORDER: f64 = 2.0;

/// `K_ν(w) = (1/2)∫ e^{-w cosh u + νu} du` along `u = t + iθ`, `t ∈ ℝ`.
///
/// The line passes through the saddle `u₀ = asinh(ν/w)`, with `θ` clamped
/// inside `|θ| < π/2 - |arg w|` and backed off from that edge by about
/// `1/|Im ν|` so the decay in `t` stays fast. The exponent at `u₀` is
/// factored out so the integrand is `O(1)` where it peaks.
fn shifted_contour(nu: Complex64, w: Complex64, spec: &QuadratureSpec) -> Result<EvalResult> {
    let edge = (0.5 * std::f64::consts::PI - w.arg().abs()) * (1.0 - 1.0 / (1.0 + nu.im.abs()));
    let saddle = (nu / w).asinh();
    let u0 = Complex64::new(saddle.re, saddle.im.clamp(-edge, edge));
    let e0 = -w * u0.cosh() + nu * u0;
    let i_theta = Complex64::new(0.0, u0.im);

    let branch = |u: Complex64| {
        if u.re.abs() > 700.0 {
            return Complex64::new(0.0, 0.0);
        }
        let e = -w * u.cosh() + nu * u - e0;
        if e.re < -745.0 {
            Complex64::new(0.0, 0.0)
        } else {
            e.exp()
        }
    };
    let r = integrate(
        |t| branch(t + i_theta) + branch(-t + i_theta),
        Domain::SemiInfinite(0.0),
        spec,
    )?;
    Ok(r.scale(0.5 * e0.exp()))
}

/// `K_ν(2√(βγ))` through the Mellin-type integral, rescaled by
/// `(1/2)(γ/β)^{ν/2}`. Requires `β, γ > 0`.
pub fn bessel_k_mellin(
    nu: Complex64,
    beta: f64,
    gamma: f64,
    spec: &QuadratureSpec,
) -> Result<EvalResult> {
    if !(beta > 0.0 && gamma > 0.0) {
        return domain("bessel_k_mellin needs beta, gamma > 0");
    }
    let nu_m1 = nu - 1.0;
    let integral = integrate(
        |x| {
            let lx = x.ln();
            (nu_m1 * lx - beta / x - gamma * x).exp()
        },
        Domain::PositiveReals,
        spec,
    )?;
    Ok(integral.scale(0.5 * real_pow(gamma / beta, nu * 0.5)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn half_order_closed_form() {
        let k = bessel_k(c(0.5, 0.0), 2.0, &Default::default()).unwrap();
        let exact = (PI / 4.0).sqrt() * (-2.0f64).exp();
        assert!((k.value.re - exact).abs() < 1e-14, "{} vs {exact}", k.value);
        assert!(k.value.im.abs() < 1e-16);
    }

    #[test]
    fn rejects_nonpositive_argument() {
        assert!(bessel_k(c(1.0, 0.0), 0.0, &Default::default()).is_err());
        assert!(bessel_k(c(1.0, 0.0), -1.0, &Default::default()).is_err());
    }

    #[test]
    fn recurrence_complex_order() {
        let spec = QuadratureSpec::default();
        let nu = c(0.3, 2.0);
        let z = 1.0;
        let km = bessel_k(nu - 1.0, z, &spec).unwrap().value;
        let kp = bessel_k(nu + 1.0, z, &spec).unwrap().value;
        let k = bessel_k(nu, z, &spec).unwrap().value;
        // K_{ν-1} - K_{ν+1} = -(2ν/z) K_ν
        assert!((km - kp + 2.0 * nu / z * k).norm() < 1e-10);
    }

    #[test]
    fn small_argument_law() {
        let k = bessel_k(c(1.0, 0.0), 0.01, &Default::default())
            .unwrap()
            .value
            .re;
        // 2^{ν-1} Γ(ν) / x^ν with ν = 1
        let law = 1.0 / 0.01;
        assert!((k - law).abs() < 0.01 * law);
    }

    #[test]
    fn mellin_route_agrees() {
        let spec = QuadratureSpec::default();
        let nu = c(0.25, 0.5);
        let (beta, gamma) = (0.5f64, 3.0);
        let a = bessel_k(nu, 2.0 * (beta * gamma).sqrt(), &spec)
            .unwrap()
            .value;
        let b = bessel_k_mellin(nu, beta, gamma, &spec).unwrap().value;
        assert!((a - b).norm() < 1e-10 * a.norm());
    }
}
