//! Heat kernels on ℝᵈ and ℍ³, their Laplace transforms, and the
//! identification with the two-parameter regularized zeta-function.

use num_complex::Complex64;
use zetalab::diffusion::{
    euclidean_identification_residual, heat_kernel_h3, heat_kernel_hyperbolic_odd, heat_kernel_rd,
    hyperbolic_identification_residual, laplace_hyperbolic, resolvent_normalization_ratio,
    resolvent_rd_bessel, resolvent_rd_quad,
};
use zetalab::QuadratureSpec;

fn main() -> zetalab::Result<()> {
    let q = QuadratureSpec::default();
    for rho in [0.5, 1.0, 2.0] {
        println!(
            "t = 1, rho = {rho}: R^3 {:.6e}, H^3 {:.6e}, H^5 {:.6e}",
            heat_kernel_rd(1.0, rho, 3.0)?,
            heat_kernel_h3(1.0, rho)?,
            heat_kernel_hyperbolic_odd(1.0, rho, 5)?
        );
    }

    let a = Complex64::new(0.5, 0.0);
    let printed = resolvent_rd_bessel(a, 1.0, Complex64::new(3.0, 0.0), &q)?
        .value
        .re;
    let quad = resolvent_rd_quad(2.0 * a, 1.0, 3.0, &q)?.value.re;
    println!("resolvent at alpha 1/2, r 1: printed {printed:.12}, transform at 2 alpha {quad:.12}");
    println!(
        "ratio (4 pi) = {:.12}",
        resolvent_normalization_ratio(0.5, 1.0, 3.0, &q)?.re
    );
    println!(
        "H^3 Laplace transform at alpha 1, rho 1: {:.12}",
        laplace_hyperbolic(Complex64::new(1.0, 0.0), 1.0, &q)?
            .value
            .re
    );

    for d in [1.0, 1.5, 3.0] {
        println!(
            "euclidean identification d = {d}: {:.2e}",
            euclidean_identification_residual(d, 1.0, 1.0, &q)?
        );
    }
    for (alpha, rho) in [(0.5, 1.0), (2.0, 0.1)] {
        println!(
            "hyperbolic identification ({alpha}, {rho}): {:.2e}",
            hyperbolic_identification_residual(alpha, rho, &q)?
        );
    }
    Ok(())
}
