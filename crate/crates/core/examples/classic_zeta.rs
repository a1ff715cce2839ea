//! ζ(s) by the Dirichlet series and by the theta integral, with ξ(s).

use num_complex::Complex64;
use zetalab::zeta_classic::{chi_factor, xi_entire, zeta_analytic, zeta_series, zeta_theta_route};
use zetalab::QuadratureSpec;

fn main() -> zetalab::Result<()> {
    let q = QuadratureSpec::default();
    let c = Complex64::new;

    let s = c(2.0, 0.0);
    println!(
        "zeta(2): series {:.16}, theta {:.16}",
        zeta_series(s, &q)?.value.re,
        zeta_theta_route(s, &q)?.value.re
    );
    println!("pi^2/6         {:.16}", std::f64::consts::PI.powi(2) / 6.0);

    for s in [c(0.0, 0.0), c(-1.0, 0.0), c(0.5, 14.134725), c(3.0, 4.0)] {
        let z = zeta_analytic(s, &q)?;
        println!("zeta({s}) = {:.12} (err {:.1e})", z.value, z.err_estimate);
    }

    // ζ(s) = χ(s)ζ(1-s) and ξ(s) = ξ(1-s)
    let s = c(0.3, 9.0);
    let lhs = zeta_analytic(s, &q)?.value;
    let rhs = chi_factor(s)? * zeta_analytic(1.0 - s, &q)?.value;
    println!(
        "zeta(s) - chi(s) zeta(1-s) at {s}: {:.2e}",
        (lhs - rhs).norm()
    );
    let (a, b) = (xi_entire(s, &q)?.value, xi_entire(1.0 - s, &q)?.value);
    println!("xi(s) = {a:.12}, xi(1-s) = {b:.12}");
    Ok(())
}
