//! Independent oracles shared by the integration tests. None of these call
//! into the library's numerics.
#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::PathBuf;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1e-300)
}

pub fn fixture(name: &str) -> serde_json::Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).unwrap()
}

/// `B_0, B_1, …, B_n` from `Σ_{k<m+1} C(m+1,k) B_k = 0`.
pub fn bernoulli(n: usize) -> Vec<f64> {
    let mut b = vec![0.0; n + 1];
    b[0] = 1.0;
    for m in 1..=n {
        let mut acc = 0.0;
        let mut binom = 1.0;
        for (k, bk) in b.iter().enumerate().take(m) {
            acc += binom * bk;
            binom *= (m + 1 - k) as f64 / (k + 1) as f64;
        }
        b[m] = -acc / (m + 1) as f64;
    }
    b
}

/// Euler–Maclaurin `ζ(s)` with `N` head terms and `M` Bernoulli corrections.
pub fn zeta_em(s: Complex64) -> Complex64 {
    let n_head = 40 + s.norm().ceil() as usize;
    let m = 10;
    let b = bernoulli(2 * m);
    let nf = n_head as f64;
    let mut sum: Complex64 = (1..n_head).map(|n| (-s * (n as f64).ln()).exp()).sum();
    let n_s = (-s * nf.ln()).exp();
    sum += n_s * nf / (s - 1.0) + 0.5 * n_s;
    // T_k = B_2k/(2k)! · s(s+1)…(s+2k-2) · N^{-s-2k+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut power = n_s / nf;
    for k in 1..=m {
        sum += b[2 * k] / fact * rising * power;
        rising *= (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        fact *= ((2 * k + 1) * (2 * k + 2)) as f64;
        power /= nf * nf;
    }
    sum
}

/// Stirling series for `ln Γ(z)` after shifting `Re z` above 15.
pub fn ln_gamma_stirling(mut z: Complex64) -> Complex64 {
    let mut shift = c(0.0, 0.0);
    while z.re < 15.0 {
        shift -= z.ln();
        z += 1.0;
    }
    let coeffs = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
    ];
    let mut series = c(0.0, 0.0);
    let inv = 1.0 / z;
    let mut p = inv;
    for a in coeffs {
        series += a * p;
        p *= inv * inv;
    }
    shift + (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series
}

/// `K_0(x)` from its ascending series.
pub fn k0_series(x: f64) -> f64 {
    let euler = 0.577_215_664_901_532_9;
    let q = x * x / 4.0;
    let (mut term, mut harmonic) = (1.0, 0.0);
    let (mut i0, mut tail) = (1.0, 0.0);
    for k in 1..60 {
        term *= q / (k * k) as f64;
        harmonic += 1.0 / k as f64;
        i0 += term;
        tail += term * harmonic;
    }
    -((x / 2.0).ln() + euler) * i0 + tail
}

/// `ψ(x) = Σ e^{-πn²x}` summed until terms vanish; meant for `x ≥ 0.01`.
pub fn psi_sum(x: f64) -> f64 {
    (1..2000).map(|n| (-PI * (n * n) as f64 * x).exp()).sum()
}

/// Composite Simpson with `n` (even) panels.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        s += f(a + k as f64 * h) * if k % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// `∫_0^∞ f` after `x = e^u`, Simpson on `u ∈ [lo, hi]`.
pub fn simpson_log<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, n: usize) -> f64 {
    simpson(|u| f(u.exp()) * u.exp(), lo, hi, n)
}

/// 40 points in the critical strip: `σ ∈ {0.1, 0.3, 0.7, 0.9}`,
/// `t ∈ {-27, -21, …, 27}`.
pub fn strip_grid() -> Vec<Complex64> {
    let mut out = Vec::new();
    for sigma in [0.1, 0.3, 0.7, 0.9] {
        for k in 0..10 {
            out.push(c(sigma, -27.0 + 6.0 * k as f64));
        }
    }
    out
}

/// `{0.1, 0.3, 0.5, 0.7, 0.9} × {0, 5i, 14i}`.
pub fn s_grid() -> Vec<Complex64> {
    let mut out = Vec::new();
    for sigma in [0.1, 0.3, 0.5, 0.7, 0.9] {
        for t in [0.0, 5.0, 14.0] {
            out.push(c(sigma, t));
        }
    }
    out
}
