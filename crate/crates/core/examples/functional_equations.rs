//! Residuals of each functional equation over a small grid of s.

use num_complex::Complex64;
use zetalab::funceq::{omega_symmetry_residual, quarter_alpha_residual, verify, FunctionalEqKind};
use zetalab::regularized::{CustomCutoff, CutoffSpec};
use zetalab::QuadratureSpec;

fn main() -> zetalab::Result<()> {
    let q = QuadratureSpec::default();
    let gauss = CustomCutoff::new("gaussian-log", true, |x: f64| {
        Complex64::new((-x.ln().powi(2)).exp(), 0.0)
    });
    let kinds = [
        FunctionalEqKind::RiemannClassic,
        FunctionalEqKind::ExpSymmetric { lambda: 1.0 },
        FunctionalEqKind::ExpAlpha {
            lambda: 0.5,
            alpha: 2.0,
        },
        FunctionalEqKind::TwoParam {
            lambda1: Complex64::new(1.0, 0.5),
            lambda2: Complex64::new(0.7, 0.0),
        },
        FunctionalEqKind::GenericH(CutoffSpec::Custom(gauss)),
    ];
    for kind in &kinds {
        let worst = [
            Complex64::new(0.3, 0.0),
            Complex64::new(0.7, 5.0),
            Complex64::new(0.1, 14.0),
        ]
        .into_iter()
        .map(|s| verify(kind, s, &q).map(|r| r.rel_residual))
        .collect::<zetalab::Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
        println!("{:<16} max rel residual {worst:.2e}", kind.tag());
    }

    let r = quarter_alpha_residual(Complex64::new(0.3, 0.0), 0.8, &q)?;
    println!(
        "alpha = 1/4 single K: printed prefactor {:.2e}, re-derived {:.2e}",
        r.residual_paper_form, r.residual_corrected_form
    );
    let s = Complex64::new(0.2, 21.0);
    println!(
        "Omega symmetry at {s}, lambda 0.2: {:.2e}",
        omega_symmetry_residual(s, 0.2, &q)?
    );
    Ok(())
}
