//! ψ, Θ and the modular law Θ(1/v) = √v Θ(v).

use zetalab::theta::{big_theta, jacobi_theta3, psi, theta_modular_residual};
use zetalab::QuadratureSpec;

fn main() -> zetalab::Result<()> {
    let q = QuadratureSpec::default();
    println!(
        "{:>8} {:>22} {:>22} {:>10}",
        "v", "psi(v)", "Theta(v)", "modular"
    );
    for v in [0.05, 0.2, 1.0, 5.0, 20.0] {
        let p = psi(v, &q)?.value.re;
        let t = big_theta(v, &q)?.value.re;
        println!(
            "{v:>8} {p:>22.15e} {t:>22.15} {:>10.2e}",
            theta_modular_residual(v, &q)?
        );
    }
    let nome = num_complex::Complex64::new((-std::f64::consts::PI).exp(), 0.0);
    let z = num_complex::Complex64::new(0.25, 0.0);
    println!("theta3(1/4, e^-pi) = {}", jacobi_theta3(z, nome, &q)?.value);
    Ok(())
}
