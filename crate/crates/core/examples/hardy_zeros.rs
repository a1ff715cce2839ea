//! Sign changes of Hardy's Z(t) on [10, 50], refined by bisection.

use zetalab::zeta_classic::{find_zeros, hardy_z, riemann_siegel_theta};
use zetalab::QuadratureSpec;

fn main() -> zetalab::Result<()> {
    let q = QuadratureSpec::default();
    for z in find_zeros(10.0, 50.0, 0.05, &q)? {
        println!(
            "zero near t = {:.10}  (bracket [{:.2}, {:.2}])",
            z.refined_t, z.t_lo, z.t_hi
        );
    }
    for t in [5.0, 17.0, 23.5] {
        let z = hardy_z(t, &q)?.value;
        println!(
            "Z({t}) = {:+.12} (imag {:.1e}), theta = {:+.10}",
            z.re,
            z.im,
            riemann_siegel_theta(t)
        );
    }
    Ok(())
}
