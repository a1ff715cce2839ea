//! The numerical layer: double-exponential quadrature, complex Γ and K_ν.

use std::f64::consts::PI;

use num_complex::Complex64;
use zetalab::numerics::{bessel_k, bessel_k_mellin, gamma_complex, integrate, Domain};
use zetalab::QuadratureSpec;

fn main() -> zetalab::Result<()> {
    let q = QuadratureSpec::default();
    let r = integrate(
        |x| Complex64::new(1.0 / (1.0 + x * x), 0.0),
        Domain::PositiveReals,
        &q,
    )?;
    println!(
        "int 1/(1+x^2) = {:.16} (pi/2 = {:.16}), {} evals",
        r.value.re,
        PI / 2.0,
        r.evaluations
    );

    let s = Complex64::new(0.25, 14.0);
    println!("Gamma({s}) = {:.12e}", gamma_complex(s)?);

    for nu in [Complex64::new(0.5, 0.0), Complex64::new(0.3, 2.0)] {
        let k = bessel_k(nu, 0.4, &q)?.value;
        let m = bessel_k_mellin(nu, 0.2, 0.2, &q)?.value;
        println!("K_{nu}(0.4) = {k:.12e}  (Mellin route {m:.12e})");
    }
    // large imaginary order goes through the saddle-line contour
    let nu = Complex64::new(0.05, 13.5);
    println!("K_{nu}(0.4) = {:.12e}", bessel_k(nu, 0.4, &q)?.value);
    Ok(())
}
