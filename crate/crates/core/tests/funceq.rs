mod common;

use common::{c, fixture, s_grid, strip_grid};
use zetalab::funceq::{
    omega_symmetry_residual, omega_symmetry_residual_routes, quarter_alpha_residual, verify,
    FunctionalEqKind,
};
use zetalab::regularized::{CustomCutoff, CutoffSpec, Representation};
use zetalab::{Error, QuadratureSpec};

fn q() -> QuadratureSpec {
    QuadratureSpec::default()
}

fn rel_residual(kind: &FunctionalEqKind, s: num_complex::Complex64) -> f64 {
    verify(kind, s, &q()).unwrap().rel_residual
}

#[test]
fn spot_examples() {
    assert!(rel_residual(&FunctionalEqKind::ExpSymmetric { lambda: 0.5 }, c(0.3, 5.0)) < 1e-9);
    let r = verify(&FunctionalEqKind::RiemannClassic, c(0.4, 0.0), &q()).unwrap();
    assert!(r.abs_residual < 1e-10);
    let k = FunctionalEqKind::ExpAlpha {
        lambda: 1.0,
        alpha: 2.0,
    };
    assert!(rel_residual(&k, c(0.25, 0.0)) < 1e-9);
    let k = FunctionalEqKind::TwoParam {
        lambda1: c(1.0, 0.5),
        lambda2: c(0.7, 0.0),
    };
    assert!(rel_residual(&k, c(0.6, 0.0)) < 1e-8);
}

#[test]
fn exp_symmetric_over_grid() {
    for lambda in [0.2, 1.0, 3.0] {
        let kind = FunctionalEqKind::ExpSymmetric { lambda };
        for s in s_grid() {
            assert!(rel_residual(&kind, s) < 1e-8, "{lambda} {s}");
        }
    }
}

#[test]
fn generic_h_with_smooth_custom_cutoff() {
    let h = CutoffSpec::Custom(CustomCutoff::new("gaussian-log", true, |x: f64| {
        c((-x.ln().powi(2)).exp(), 0.0)
    }));
    let kind = FunctionalEqKind::GenericH(h);
    for s in [c(0.3, 0.0), c(0.5, 5.0), c(0.9, 14.0)] {
        assert!(rel_residual(&kind, s) < 1e-8, "{s}");
    }
    let r = verify(&kind, c(0.3, 0.0), &q()).unwrap();
    assert_eq!(r.params.cutoff.as_deref(), Some("custom:gaussian-log"));
}

#[test]
fn generic_h_rejects_bad_cutoffs() {
    let skew = CutoffSpec::Custom(CustomCutoff::new("skew", true, |x: f64| {
        c((-(2.0 * x + 1.0 / x)).exp(), 0.0)
    }));
    let e = verify(&FunctionalEqKind::GenericH(skew), c(0.3, 0.0), &q());
    assert!(matches!(e, Err(Error::SymmetryViolation(_))));
    let undeclared = CutoffSpec::Custom(CustomCutoff::new("u", false, |x: f64| {
        c((-(x + 1.0 / x)).exp(), 0.0)
    }));
    let e = verify(&FunctionalEqKind::GenericH(undeclared), c(0.3, 0.0), &q());
    assert!(matches!(e, Err(Error::SymmetryViolation(_))));
    assert!(verify(
        &FunctionalEqKind::GenericH(CutoffSpec::None),
        c(0.3, 0.0),
        &q()
    )
    .is_err());
}

#[test]
fn classic_equation_on_strip() {
    for s in strip_grid() {
        let r = verify(&FunctionalEqKind::RiemannClassic, s, &q()).unwrap();
        assert!(r.abs_residual < 1e-9, "{s}");
    }
}

#[test]
fn quarter_alpha_matches_fixture() {
    let fx = fixture("quarter_alpha.json");
    let lambda = fx["lambda"].as_f64().unwrap();
    assert_eq!(fx["verdict"], "rederived");
    for p in fx["points"].as_array().unwrap() {
        let s = p["s"].as_f64().unwrap();
        let r = quarter_alpha_residual(c(s, 0.0), lambda, &q()).unwrap();
        let frozen = p["difference"].as_f64().unwrap();
        assert!((r.difference.re - frozen).abs() < 1e-10);
        let printed = p["residual_printed_prefactor"].as_f64().unwrap();
        assert!((r.residual_paper_form - printed).abs() < 1e-8);
        assert!(r.residual_corrected_form < 1e-9);
        assert!(r.residual_paper_form > 1e-2);
    }
}

#[test]
fn quarter_alpha_fixed_point_and_antisymmetry() {
    let r = quarter_alpha_residual(c(0.5, 0.0), 1.0, &q()).unwrap();
    assert!(r.difference.norm() < 1e-12);
    assert!(r.residual_paper_form < 1e-12 && r.residual_corrected_form < 1e-12);
    let a = quarter_alpha_residual(c(0.3, 2.0), 0.8, &q()).unwrap();
    let b = quarter_alpha_residual(c(0.7, -2.0), 0.8, &q()).unwrap();
    assert!((a.difference + b.difference).norm() < 1e-10);
    assert!((a.residual_corrected_form - b.residual_corrected_form).abs() < 1e-9);
}

#[test]
fn omega_symmetry_on_strip() {
    for lambda in [0.2, 1.0] {
        for s in strip_grid() {
            assert!(
                omega_symmetry_residual(s, lambda, &q()).unwrap() < 1e-9,
                "{s} {lambda}"
            );
        }
    }
}

#[test]
fn omega_symmetry_across_representations() {
    let (series, quad) = (Representation::BesselSeries, Representation::Quadrature);
    for (s, lambda, tol) in [
        (c(0.2, 3.0), 0.4, 1e-9),
        (c(0.5, 10.0), 1.0, 1e-9),
        (c(-2.0, 0.0), 0.6, 1e-8),
        (c(0.3, 15.0), 0.2, 1e-9),
    ] {
        let r = omega_symmetry_residual_routes(s, lambda, series, quad, &q()).unwrap();
        assert!(r < tol, "{s} {lambda}: {r:e}");
        let r = omega_symmetry_residual_routes(s, lambda, quad, series, &q()).unwrap();
        assert!(r < tol, "{s} {lambda}: {r:e}");
    }
}

#[test]
fn report_serializes() {
    let r = verify(
        &FunctionalEqKind::ExpAlpha {
            lambda: 0.5,
            alpha: 0.5,
        },
        c(0.1, 5.0),
        &q(),
    )
    .unwrap();
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains(r#""kind":"exp-alpha""#));
    assert!(!json.contains("lambda1"));
}
