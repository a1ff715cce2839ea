//! Complex gamma function by the Lanczos approximation (g = 607/128, 15
//! terms) with the reflection formula for `Re s < 1/2`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Error, Result};

const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_64e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// `ln Γ(z + 1)` for `Re z ≥ -1/2`, continuous in `z`.
fn lanczos_ln_gamma_p1(z: Complex64) -> Complex64 {
    let mut series = Complex64::new(LANCZOS[0], 0.0);
    for (k, &ck) in LANCZOS.iter().enumerate().skip(1) {
        series += ck / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + series.ln()
}

fn nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// Γ(s) for complex `s`; a [`Error::Pole`] at `0, -1, -2, …`.
pub fn gamma_complex(s: Complex64) -> Result<Complex64> {
    if nonpositive_integer(s) {
        return Err(Error::Pole {
            at: s,
            what: "gamma function",
        });
    }
    if s.re < 0.5 {
        // Γ(s) Γ(1-s) = π / sin(πs)
        let g = lanczos_ln_gamma_p1(-s).exp();
        return Ok(PI / ((PI * s).sin() * g));
    }
    Ok(lanczos_ln_gamma_p1(s - 1.0).exp())
}

/// Principal branch of `ln Γ(s)` on `Re s > 0`, continuous there.
pub fn log_gamma_complex(s: Complex64) -> Result<Complex64> {
    if !(s.re > 0.0) {
        return domain(format!("log_gamma needs Re s > 0, got {s}"));
    }
    if s.re >= 0.5 {
        Ok(lanczos_ln_gamma_p1(s - 1.0))
    } else {
        // ln Γ(s) = ln Γ(s+1) - ln s
        Ok(lanczos_ln_gamma_p1(s) - s.ln())
    }
}

/// `ln cos z` on any branch, finite for large `|Im z|`.
pub(crate) fn ln_cos(z: Complex64) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    // cos z = e^{∓iz}(1 + e^{±2iz})/2 with the decaying exponential inside
    if z.im >= 0.0 {
        -i * z + (1.0 + (2.0 * i * z).exp()).ln() - std::f64::consts::LN_2
    } else {
        i * z + (1.0 + (-2.0 * i * z).exp()).ln() - std::f64::consts::LN_2
    }
}

/// A logarithm of Γ(s) (branch unspecified) away from the poles.
pub(crate) fn ln_gamma_any(s: Complex64) -> Complex64 {
    if s.re >= 0.5 {
        lanczos_ln_gamma_p1(s - 1.0)
    } else {
        let sin = ln_cos(PI * s - std::f64::consts::FRAC_PI_2);
        PI.ln() - sin - lanczos_ln_gamma_p1(-s)
    }
}

/// `1/Γ(s)`, entire; zero at the non-positive integers.
pub fn recip_gamma(s: Complex64) -> Complex64 {
    if nonpositive_integer(s) {
        return Complex64::new(0.0, 0.0);
    }
    if s.re < 0.5 {
        let g = lanczos_ln_gamma_p1(-s).exp();
        (PI * s).sin() * g / PI
    } else {
        (-lanczos_ln_gamma_p1(s - 1.0)).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn small_integers_and_half() {
        assert!((gamma_complex(c(1.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        assert!((gamma_complex(c(0.5, 0.0)).unwrap() - PI.sqrt()).norm() < 1e-15);
        assert!((gamma_complex(c(5.0, 0.0)).unwrap() - 24.0).norm() < 24.0 * 1e-14);
        assert!((gamma_complex(c(-0.5, 0.0)).unwrap() + 2.0 * PI.sqrt()).norm() < 1e-14);
    }

    #[test]
    fn poles() {
        for k in 0..5 {
            let s = c(-(k as f64), 0.0);
            assert!(matches!(gamma_complex(s), Err(Error::Pole { .. })));
            assert_eq!(recip_gamma(s), c(0.0, 0.0));
        }
    }

    #[test]
    fn log_gamma_domain() {
        assert!(log_gamma_complex(c(0.0, 1.0)).is_err());
        assert!(log_gamma_complex(c(-1.0, 1.0)).is_err());
        assert!(log_gamma_complex(c(2.0, 0.0)).unwrap().norm() < 1e-15);
        let ln_fact9 = (362_880.0f64).ln();
        assert!((log_gamma_complex(c(10.0, 0.0)).unwrap() - ln_fact9).norm() < 1e-13);
    }

    #[test]
    fn log_gamma_matches_gamma() {
        let s = c(0.25, 7.0665);
        let g = gamma_complex(s).unwrap();
        let lg = log_gamma_complex(s).unwrap().exp();
        assert!((g - lg).norm() < 1e-12 * g.norm());
    }

    #[test]
    fn log_forms_exponentiate_back() {
        for s in [c(0.3, 2.0), c(-2.7, 1.0), c(-0.5, 40.0), c(3.0, -9.0)] {
            let g = gamma_complex(s).unwrap();
            assert!((ln_gamma_any(s).exp() - g).norm() < 1e-12 * g.norm(), "{s}");
            let cz = s.cos();
            assert!((ln_cos(s).exp() - cz).norm() < 1e-13 * cz.norm(), "{s}");
        }
    }

    #[test]
    fn reciprocal_is_reciprocal() {
        for s in [c(0.3, 2.0), c(-2.7, 1.0), c(4.0, -9.0), c(-0.5, 0.0)] {
            let r = recip_gamma(s) * gamma_complex(s).unwrap();
            assert!((r - 1.0).norm() < 1e-13, "{s}: {r}");
        }
    }
}
