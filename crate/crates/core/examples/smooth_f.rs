//! F(s, λ): its A + B + C + D split and the PDE it satisfies.

use num_complex::Complex64;
use zetalab::regularized::{abcd_terms, pde_residual_F, smooth_F};
use zetalab::QuadratureSpec;

fn main() -> zetalab::Result<()> {
    let q = QuadratureSpec::default();
    let s = Complex64::new(1.5, 2.0);
    let lambda = 0.7;
    let f = smooth_F(s, lambda, &q)?;
    let t = abcd_terms(s, lambda, &q)?;
    println!("F({s}, {lambda}) = {:.14}", f.value);
    println!(
        "A = {:.12}\nB = {:.12}\nC = {:.12} (-1/s = {:.12})\nD = {:.12}",
        t.a.value,
        t.b.value,
        t.c.value,
        -1.0 / s,
        t.d.value
    );
    for h in [2e-2, 1e-2, 5e-3] {
        println!(
            "PDE residual, step {h:e}: {:.3e}",
            pde_residual_F(s, lambda, h, &q)?
        );
    }
    Ok(())
}
