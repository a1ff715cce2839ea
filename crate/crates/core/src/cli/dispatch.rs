//! Selector and verification-kind tables: accepted flags and the library
//! call behind each.

use clap::ValueEnum;
use num_complex::Complex64;

use super::params::{opt, req, Kind, Params, ParamsExt, Slot};
use super::CliError;
use crate::diffusion::{
    heat_kernel_hyperbolic_odd, heat_kernel_rd, laplace_hyperbolic, resolvent_rd_bessel,
    resolvent_rd_quad,
};
use crate::funceq::FunctionalEqKind;
use crate::numerics::{bessel_k, EvalResult, QuadratureSpec};
use crate::regularized::{
    omega_with, smooth_F, xi_lambda, zeta_exp_bessel_series, zeta_exp_boundary_form,
    zeta_regularized, zeta_two_param_bessel_series, CustomCutoff, CutoffSpec, RegZetaValue,
    Representation,
};
use crate::theta::big_theta;
use crate::zeta_classic::{hardy_z, xi_entire, zeta_analytic};

/// Function selected by `--fn`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Selector {
    /// ζ(s) by analytic continuation
    Zeta,
    /// regularized ζ(s) for a cutoff (`--cutoff`, `--repr`, `--form`)
    ZetaReg,
    /// K_ν(x)
    BesselK,
    /// Θ(x) = Σ e^{-πn²x}
    Theta,
    /// heat kernel on ℝᵈ (`--r`) or odd-dimensional ℍᵈ (`--rho`)
    HeatKernel,
    /// resolvent on ℝᵈ (`--route bessel|quadrature`)
    Resolvent,
    /// Laplace transform of the ℍ³ heat kernel
    LaplaceH3,
    /// Ω(s, λ)
    Omega,
    /// ξ_λ(s)
    XiLambda,
    /// Hardy Z(t)
    HardyZ,
    /// F(s, λ) = Σ n^{-s} e^{-λπn²}
    SmoothF,
    /// the entire ξ(s)
    Xi,
}

impl Selector {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    pub fn slots(self) -> &'static [Slot] {
        use Kind::*;
        match self {
            Self::Zeta | Self::Xi => const { &[req("s", Complex)] },
            Self::ZetaReg => {
                const {
                    &[
                        req("s", Complex),
                        req("cutoff", Text),
                        opt("lambda", Real),
                        opt("alpha", Real),
                        opt("lambda1", Complex),
                        opt("lambda2", Complex),
                        opt("nu", Real),
                        opt("repr", Text),
                        opt("form", Text),
                    ]
                }
            }
            Self::BesselK => const { &[req("nu", Complex), req("x", Real)] },
            Self::Theta => const { &[req("x", Real)] },
            Self::HeatKernel => {
                const {
                    &[
                        req("t", Real),
                        req("d", Real),
                        opt("r", Real),
                        opt("rho", Real),
                    ]
                }
            }
            Self::Resolvent => {
                const {
                    &[
                        req("alpha", Complex),
                        req("r", Real),
                        req("d", Complex),
                        opt("route", Text),
                    ]
                }
            }
            Self::LaplaceH3 => const { &[req("alpha", Complex), req("rho", Real)] },
            Self::Omega => const { &[req("s", Complex), req("lambda", Real), opt("repr", Text)] },
            Self::XiLambda | Self::SmoothF => const { &[req("s", Complex), req("lambda", Real)] },
            Self::HardyZ => const { &[req("t", Real)] },
        }
    }
}

fn representation(p: &Params, default: Representation) -> Result<Representation, CliError> {
    match p.text("repr") {
        None => Ok(default),
        Some("quadrature") => Ok(Representation::Quadrature),
        Some("bessel-series") => Ok(Representation::BesselSeries),
        Some("boundary-form") => Ok(Representation::BoundaryForm),
        Some(other) => Err(CliError::Usage(format!(
            "--repr: expected quadrature, bessel-series or boundary-form, got '{other}'"
        ))),
    }
}

/// Build the cutoff named by `--cutoff` from its companion flags.
pub fn build_cutoff(p: &Params) -> Result<CutoffSpec, CliError> {
    let name = p.text("cutoff").unwrap_or("none");
    let ctx = format!("--cutoff {name}");
    Ok(match name {
        "none" => CutoffSpec::None,
        "exp" => CutoffSpec::exp_symmetric(p.need_real("lambda", &ctx)?)?,
        "exp-alpha" => CutoffSpec::exp_alpha(p.need_real("lambda", &ctx)?, p.need_real("alpha", &ctx)?)?,
        "two-param" => {
            let (l1, l2) = (p.need_complex("lambda1", &ctx)?, p.need_complex("lambda2", &ctx)?);
            match p.real("nu") {
                Some(nu) => CutoffSpec::two_param_nu(l1, l2, nu)?,
                None => CutoffSpec::two_param(l1, l2)?,
            }
        }
        "custom:gaussian-log" => {
            let lambda = p.real("lambda").unwrap_or(1.0);
            CutoffSpec::Custom(CustomCutoff::new("gaussian-log", true, move |x: f64| {
                let l = x.ln();
                Complex64::new((-lambda * l * l).exp(), 0.0)
            }))
        }
        "custom:asymmetric" => {
            // declared symmetric but is not: exercises the symmetry gate
            let lambda = p.real("lambda").unwrap_or(1.0);
            CutoffSpec::Custom(CustomCutoff::new("asymmetric", true, move |x: f64| {
                Complex64::new((-lambda * (x + 2.0 / x)).exp(), 0.0)
            }))
        }
        other => {
            return Err(CliError::Usage(format!(
                "--cutoff: expected none, exp, exp-alpha, two-param, custom:gaussian-log or custom:asymmetric, got '{other}'"
            )))
        }
    })
}

fn zeta_reg(p: &Params, q: &QuadratureSpec) -> Result<EvalResult, CliError> {
    let s = p.need_complex("s", "zeta-reg")?;
    let cutoff = build_cutoff(p)?;
    let repr = representation(p, Representation::Quadrature)?;
    let completed = match p.text("form").unwrap_or("bare") {
        "bare" => false,
        "completed" => true,
        other => {
            return Err(CliError::Usage(format!(
                "--form: expected bare or completed, got '{other}'"
            )))
        }
    };
    let v: RegZetaValue = match (repr, &cutoff) {
        (Representation::Quadrature, _) => zeta_regularized(s, &cutoff, q)?,
        (Representation::BesselSeries, CutoffSpec::ExpSymmetric { lambda }) => zeta_exp_bessel_series(s, *lambda, q)?,
        (Representation::BesselSeries, CutoffSpec::TwoParam { lambda1, lambda2 }) => {
            zeta_two_param_bessel_series(s, *lambda1, *lambda2, q)?
        }
        (Representation::BoundaryForm, CutoffSpec::ExpSymmetric { lambda }) => zeta_exp_boundary_form(s, lambda.re, q)?,
        _ => {
            return Err(CliError::Usage(
                "--repr: bessel-series needs --cutoff exp or two-param, boundary-form needs --cutoff exp".into(),
            ))
        }
    };
    let mut r = v.completed_result();
    if !completed {
        let ratio = v.bare / v.completed;
        r = if ratio.is_finite() {
            r.scale(ratio)
        } else {
            EvalResult { value: v.bare, ..r }
        };
    }
    Ok(r)
}

/// Evaluate one validated parameter record.
pub fn evaluate(sel: Selector, p: &Params, q: &QuadratureSpec) -> Result<EvalResult, CliError> {
    let name = sel.name();
    let ctx = name.as_str();
    Ok(match sel {
        Selector::Zeta => zeta_analytic(p.need_complex("s", ctx)?, q)?,
        Selector::Xi => xi_entire(p.need_complex("s", ctx)?, q)?,
        Selector::ZetaReg => zeta_reg(p, q)?,
        Selector::BesselK => bessel_k(p.need_complex("nu", ctx)?, p.need_real("x", ctx)?, q)?,
        Selector::Theta => big_theta(p.need_real("x", ctx)?, q)?,
        Selector::HeatKernel => {
            let (t, d) = (p.need_real("t", ctx)?, p.need_real("d", ctx)?);
            let v = match (p.real("r"), p.real("rho")) {
                (Some(r), None) => heat_kernel_rd(t, r, d)?,
                (None, Some(rho)) => {
                    if d.fract() != 0.0 || d < 0.0 {
                        return Err(CliError::Usage(format!(
                            "--d: hyperbolic kernels need an odd integer, got {d}"
                        )));
                    }
                    heat_kernel_hyperbolic_odd(t, rho, d as u32)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "heat-kernel takes exactly one of --r and --rho".into(),
                    ))
                }
            };
            EvalResult::exact(Complex64::new(v, 0.0))
        }
        Selector::Resolvent => {
            let (alpha, r, d) = (
                p.need_complex("alpha", ctx)?,
                p.need_real("r", ctx)?,
                p.need_complex("d", ctx)?,
            );
            match p.text("route").unwrap_or("bessel") {
                "bessel" => resolvent_rd_bessel(alpha, r, d, q)?,
                "quadrature" if d.im == 0.0 => resolvent_rd_quad(alpha, r, d.re, q)?,
                "quadrature" => {
                    return Err(CliError::Usage(
                        "--route quadrature needs a real --d".into(),
                    ))
                }
                other => {
                    return Err(CliError::Usage(format!(
                        "--route: expected bessel or quadrature, got '{other}'"
                    )))
                }
            }
        }
        Selector::LaplaceH3 => {
            laplace_hyperbolic(p.need_complex("alpha", ctx)?, p.need_real("rho", ctx)?, q)?
        }
        Selector::Omega => {
            let repr = representation(p, Representation::BesselSeries)?;
            omega_with(
                p.need_complex("s", ctx)?,
                p.need_real("lambda", ctx)?,
                repr,
                q,
            )?
        }
        Selector::XiLambda => xi_lambda(p.need_complex("s", ctx)?, p.need_real("lambda", ctx)?, q)?,
        Selector::SmoothF => smooth_F(p.need_complex("s", ctx)?, p.need_real("lambda", ctx)?, q)?,
        Selector::HardyZ => hardy_z(p.need_real("t", ctx)?, q)?,
    })
}

/// Functional equation selected by `verify --kind`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    RiemannClassic,
    GenericH,
    ExpSymmetric,
    ExpAlpha,
    QuarterAlpha,
    TwoParam,
}

impl VerifyKind {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }

    /// Accepted flags besides `--s` / `--s-grid`.
    pub fn slots(self) -> &'static [Slot] {
        use Kind::*;
        match self {
            Self::RiemannClassic => const { &[] },
            Self::GenericH => {
                const {
                    &[
                        req("cutoff", Text),
                        opt("lambda", Real),
                        opt("alpha", Real),
                        opt("lambda1", Complex),
                        opt("lambda2", Complex),
                        opt("nu", Real),
                    ]
                }
            }
            Self::ExpSymmetric | Self::QuarterAlpha => const { &[req("lambda", Real)] },
            Self::ExpAlpha => const { &[req("lambda", Real), req("alpha", Real)] },
            Self::TwoParam => const { &[req("lambda1", Complex), req("lambda2", Complex)] },
        }
    }

    pub fn build(self, p: &Params) -> Result<FunctionalEqKind, CliError> {
        let ctx = self.name();
        Ok(match self {
            Self::RiemannClassic => FunctionalEqKind::RiemannClassic,
            Self::GenericH => FunctionalEqKind::GenericH(build_cutoff(p)?),
            Self::ExpSymmetric => FunctionalEqKind::ExpSymmetric {
                lambda: p.need_real("lambda", &ctx)?,
            },
            Self::ExpAlpha => FunctionalEqKind::ExpAlpha {
                lambda: p.need_real("lambda", &ctx)?,
                alpha: p.need_real("alpha", &ctx)?,
            },
            Self::QuarterAlpha => FunctionalEqKind::QuarterAlphaSingleK {
                lambda: p.need_real("lambda", &ctx)?,
            },
            Self::TwoParam => FunctionalEqKind::TwoParam {
                lambda1: p.need_complex("lambda1", &ctx)?,
                lambda2: p.need_complex("lambda2", &ctx)?,
            },
        })
    }
}

/// `{0.1, 0.3, 0.5, 0.7, 0.9} × {0, 5i, 14i}`.
pub fn strip_default() -> Vec<Complex64> {
    let mut out = Vec::new();
    for re in [0.1, 0.3, 0.5, 0.7, 0.9] {
        for im in [0.0, 5.0, 14.0] {
            out.push(Complex64::new(re, im));
        }
    }
    out
}
