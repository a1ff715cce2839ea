use std::f64::consts::LN_2;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};
use crate::numerics::{
    bessel_k_complex_arg, integrate, real_pow, Domain, EvalResult, QuadratureSpec,
};

/// Points where a declared-symmetric custom cutoff is checked against `h(1/x)`.
pub const SYMMETRY_SPOT_CHECKS: [f64; 3] = [2.0, 5.0, 10.0];
const SYMMETRY_TOL: f64 = 1e-12;
/// Abscissa at which a custom cutoff must already have decayed.
const DECAY_PROBE: f64 = 1e12;

type CutoffFn = dyn Fn(f64) -> Complex64 + Send + Sync;

/// A user-supplied cutoff `h(x)` with its declared `x ↦ 1/x` symmetry.
#[derive(Clone)]
pub struct CustomCutoff {
    pub name: String,
    pub symmetric: bool,
    h: Arc<CutoffFn>,
}

impl CustomCutoff {
    pub fn new<F>(name: impl Into<String>, symmetric: bool, h: F) -> Self
    where
        F: Fn(f64) -> Complex64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            symmetric,
            h: Arc::new(h),
        }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        (self.h)(x)
    }
}

impl fmt::Debug for CustomCutoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomCutoff")
            .field("name", &self.name)
            .field("symmetric", &self.symmetric)
            .finish_non_exhaustive()
    }
}

/// Which cutoff `h` multiplies the theta integrand.
#[derive(Debug, Clone)]
pub enum CutoffSpec {
    /// `h = 1`, the classical integral; needs `Re s > 1`.
    None,
    /// `e^{-λ(x + 1/x)}`, `Re λ > 0`.
    ExpSymmetric {
        lambda: Complex64,
    },
    /// `e^{-λ(x^α + x^{-α})}`, `λ > 0`, `α ≠ 0`.
    ExpAlpha {
        lambda: f64,
        alpha: f64,
    },
    /// `(1/2)[e^{-(λ₁x + λ₂/x)} + e^{-(λ₁/x + λ₂x)}]`, `Re λ₁, Re λ₂ > 0`.
    TwoParam {
        lambda1: Complex64,
        lambda2: Complex64,
    },
    /// `(1/2)[e^{-(λ₁x^ν + λ₂x^{-ν})} + e^{-(λ₂x^ν + λ₁x^{-ν})}]`, `ν ≠ 0`.
    TwoParamNu {
        lambda1: Complex64,
        lambda2: Complex64,
        nu: f64,
    },
    Custom(CustomCutoff),
}

fn positive_re(name: &str, v: Complex64) -> Result<()> {
    if v.re > 0.0 && v.is_finite() {
        Ok(())
    } else {
        domain(format!("{name} needs a positive real part, got {v}"))
    }
}

impl CutoffSpec {
    pub fn exp_symmetric(lambda: impl Into<Complex64>) -> Result<Self> {
        let c = Self::ExpSymmetric {
            lambda: lambda.into(),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn exp_alpha(lambda: f64, alpha: f64) -> Result<Self> {
        let c = Self::ExpAlpha { lambda, alpha };
        c.validate()?;
        Ok(c)
    }

    pub fn two_param(lambda1: impl Into<Complex64>, lambda2: impl Into<Complex64>) -> Result<Self> {
        let c = Self::TwoParam {
            lambda1: lambda1.into(),
            lambda2: lambda2.into(),
        };
        c.validate()?;
        Ok(c)
    }

    pub fn two_param_nu(
        lambda1: impl Into<Complex64>,
        lambda2: impl Into<Complex64>,
        nu: f64,
    ) -> Result<Self> {
        let c = Self::TwoParamNu {
            lambda1: lambda1.into(),
            lambda2: lambda2.into(),
            nu,
        };
        c.validate()?;
        Ok(c)
    }

    /// Parameter checks; every operation taking a cutoff runs this first.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::None | Self::Custom(_) => Ok(()),
            Self::ExpSymmetric { lambda } => positive_re("lambda", lambda),
            Self::ExpAlpha { lambda, alpha } => {
                if !(lambda > 0.0 && lambda.is_finite()) {
                    return domain(format!("lambda must be positive, got {lambda}"));
                }
                if alpha == 0.0 || !alpha.is_finite() {
                    return domain(format!("alpha must be finite and nonzero, got {alpha}"));
                }
                Ok(())
            }
            Self::TwoParam { lambda1, lambda2 } => {
                positive_re("lambda1", lambda1)?;
                positive_re("lambda2", lambda2)
            }
            Self::TwoParamNu {
                lambda1,
                lambda2,
                nu,
            } => {
                positive_re("lambda1", lambda1)?;
                positive_re("lambda2", lambda2)?;
                if nu == 0.0 || !nu.is_finite() {
                    return domain(format!("nu must be finite and nonzero, got {nu}"));
                }
                Ok(())
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            Self::None => "none".into(),
            Self::ExpSymmetric { .. } => "exp-symmetric".into(),
            Self::ExpAlpha { .. } => "exp-alpha".into(),
            Self::TwoParam { .. } => "two-param".into(),
            Self::TwoParamNu { .. } => "two-param-nu".into(),
            Self::Custom(c) => format!("custom:{}", c.name),
        }
    }

    /// Gate for functional-equation use: built-in kinds are symmetric by
    /// construction; a custom cutoff must declare symmetry and pass the spot
    /// check `|h(x) - h(1/x)| < 1e-12` at `x = 2, 5, 10`.
    pub fn check_symmetry(&self) -> Result<()> {
        let Self::Custom(c) = self else {
            return Ok(());
        };
        if !c.symmetric {
            return Err(Error::SymmetryViolation(format!(
                "custom cutoff '{}' is not declared symmetric",
                c.name
            )));
        }
        for x in SYMMETRY_SPOT_CHECKS {
            let gap = (c.eval(x) - c.eval(1.0 / x)).norm();
            if !(gap < SYMMETRY_TOL) {
                return Err(Error::SymmetryViolation(format!(
                    "custom cutoff '{}': |h({x}) - h(1/{x})| = {gap:e}",
                    c.name
                )));
            }
        }
        Ok(())
    }

    /// `ln h(x)` for the built-in kinds; `None` for custom cutoffs.
    pub(crate) fn ln_value(&self, x: f64) -> Option<Complex64> {
        let lx = x.ln();
        Some(match *self {
            Self::None => Complex64::new(0.0, 0.0),
            Self::ExpSymmetric { lambda } => -scaled(lambda, x + 1.0 / x),
            Self::ExpAlpha { lambda, alpha } => {
                Complex64::new(-2.0 * lambda * (alpha * lx).cosh(), 0.0)
            }
            Self::TwoParam { lambda1, lambda2 } => {
                let a = -(scaled(lambda1, x) + scaled(lambda2, 1.0 / x));
                let b = -(scaled(lambda1, 1.0 / x) + scaled(lambda2, x));
                half_log_sum_exp(a, b)
            }
            Self::TwoParamNu {
                lambda1,
                lambda2,
                nu,
            } => {
                let (p, q) = ((nu * lx).exp(), (-nu * lx).exp());
                let a = -(scaled(lambda1, p) + scaled(lambda2, q));
                let b = -(scaled(lambda2, p) + scaled(lambda1, q));
                half_log_sum_exp(a, b)
            }
            Self::Custom(_) => return None,
        })
    }

    /// `h(x) · e^{rest}` without overflow in the intermediate product.
    #[inline]
    pub(crate) fn weighted(&self, x: f64, rest: Complex64) -> Complex64 {
        match self.ln_value(x) {
            Some(ln_h) => (ln_h + rest).exp(),
            None => {
                let Self::Custom(c) = self else {
                    unreachable!()
                };
                let h = c.eval(x);
                if h == Complex64::new(0.0, 0.0) {
                    h
                } else {
                    (h.ln() + rest).exp()
                }
            }
        }
    }
}

/// `λv` with `v = +∞` mapped to `+∞` rather than `∞ + NaN·i`.
fn scaled(lambda: Complex64, v: f64) -> Complex64 {
    if v.is_infinite() {
        Complex64::new(v, 0.0)
    } else {
        lambda * v
    }
}

/// `ln((e^a + e^b)/2)`.
fn half_log_sum_exp(a: Complex64, b: Complex64) -> Complex64 {
    let (hi, lo) = if a.re >= b.re { (a, b) } else { (b, a) };
    if lo.re == f64::NEG_INFINITY {
        return hi - LN_2;
    }
    hi + (1.0 + (lo - hi).exp()).ln() - LN_2
}

/// `h(x)` for `x > 0`.
pub fn cutoff_value(spec: &CutoffSpec, x: f64) -> Result<Complex64> {
    spec.validate()?;
    if !(x > 0.0 && x.is_finite()) {
        return domain(format!("cutoff argument must be positive, got {x}"));
    }
    Ok(match spec {
        CutoffSpec::Custom(c) => c.eval(x),
        other => other.ln_value(x).expect("built-in kind").exp(),
    })
}

/// `(1/2) ∫_0^∞ h(x) x^{ν-1} dx`, the one-sided cutoff integral appearing in
/// every generalized functional equation.
///
/// Exponential kinds use their `K_ν` closed forms, custom cutoffs use
/// quadrature after a decay check at `x = 10^{±12}`. The plain cutoff `h = 1`
/// has no such integral.
pub fn cutoff_half_integral(
    spec: &CutoffSpec,
    nu: Complex64,
    q: &QuadratureSpec,
) -> Result<EvalResult> {
    spec.validate()?;
    match *spec {
        CutoffSpec::None => domain("the half-integral of h = 1 diverges"),
        CutoffSpec::ExpSymmetric { lambda } => bessel_k_complex_arg(nu, 2.0 * lambda, q),
        CutoffSpec::ExpAlpha { lambda, alpha } => {
            let a = alpha.abs();
            Ok(
                bessel_k_complex_arg(nu / a, Complex64::new(2.0 * lambda, 0.0), q)?
                    .scale(Complex64::new(1.0 / a, 0.0)),
            )
        }
        CutoffSpec::TwoParam { lambda1, lambda2 } => two_param_half(lambda1, lambda2, nu, 1.0, q),
        CutoffSpec::TwoParamNu {
            lambda1,
            lambda2,
            nu: p,
        } => two_param_half(lambda1, lambda2, nu, p.abs(), q),
        CutoffSpec::Custom(ref c) => {
            for x in [DECAY_PROBE, 1.0 / DECAY_PROBE] {
                // integrand in the log variable: h(x) x^ν
                let tail = (c.eval(x) * real_pow(x, nu)).norm();
                if !(tail <= q.abs_tol) {
                    return domain(format!(
                        "custom cutoff '{}' does not decay: |h(x) x^nu| = {tail:e} at x = {x:e}",
                        c.name
                    ));
                }
            }
            cutoff_half_integral_quad(spec, nu, q)
        }
    }
}

/// `(1/2)[(λ₂/λ₁)^{μ/2} + (λ₁/λ₂)^{μ/2}] K_μ(2√(λ₁λ₂)) / p` with `μ = ν/p`.
fn two_param_half(
    l1: Complex64,
    l2: Complex64,
    nu: Complex64,
    p: f64,
    q: &QuadratureSpec,
) -> Result<EvalResult> {
    let mu = nu / p;
    let log_ratio = l2.ln() - l1.ln();
    let weight = 0.5 * ((0.5 * mu * log_ratio).exp() + (-0.5 * mu * log_ratio).exp()) / p;
    let k = bessel_k_complex_arg(mu, 2.0 * l1.sqrt() * l2.sqrt(), q)?;
    Ok(k.scale(weight))
}

/// The same half-integral by direct quadrature, for any cutoff with decay.
pub fn cutoff_half_integral_quad(
    spec: &CutoffSpec,
    nu: Complex64,
    q: &QuadratureSpec,
) -> Result<EvalResult> {
    spec.validate()?;
    let r = integrate(
        |x| spec.weighted(x, (nu - 1.0) * x.ln()),
        Domain::PositiveReals,
        q,
    )?;
    Ok(r.scale(Complex64::new(0.5, 0.0)))
}
