//! Numerical toolkit for regularized Riemann zeta-functions.
//!
//! The crate evaluates the Riemann zeta-function and a family of
//! regularized variants obtained by inserting cut-offs `h(x)` with the
//! symmetry `h(1/x) = h(x)` into the Mellin representation
//! `∫_0^∞ ψ(x) x^{s/2-1} dx`, checks the generalized `s ↔ 1-s` functional
//! equations those cut-offs produce, and connects the two-parameter variant
//! to Laplace transforms of Euclidean and hyperbolic heat kernels.
//!
//! Layers, bottom up:
//!
//! - [`numerics`]: double-exponential quadrature, complex Γ, `K_ν`.
//! - [`theta`]: `ψ`, `Θ`, Jacobi `ϑ₃` and the modular law.
//! - [`zeta_classic`]: `ζ(s)`, `ϑ(s)`, `ξ(s)`, Hardy `Z(t)`, zero scanning.
//! - [`regularized`]: cut-offs and every regularized zeta representation.
//! - [`funceq`]: residual reports for each functional equation.
//! - [`diffusion`]: heat kernels on `ℝᵈ` and `ℍᵈ` and their transforms.
//! - [`cli`]: the `zetalab` command-line surface.

// `!(x > 0.0)` guards are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod diffusion;
pub mod error;
pub mod funceq;
pub mod numerics;
pub mod regularized;
pub mod theta;
pub mod zeta_classic;

pub use error::{Error, Result};
pub use numerics::{ComplexScalar, EvalResult, QuadratureSpec};
