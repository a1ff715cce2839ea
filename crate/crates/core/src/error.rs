use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by every numerical operation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at s = {at}: {what}")]
    Pole { at: Complex64, what: &'static str },

    /// The refinement budget ran out. The best estimate is kept so callers
    /// can still inspect it.
    #[error("no convergence after {evaluations} evaluations (estimate {estimate}, error {err_estimate:e})")]
    NonConvergence {
        estimate: Complex64,
        err_estimate: f64,
        evaluations: usize,
    },

    #[error("integrand is not finite at x = {x:e}")]
    NonFiniteIntegrand { x: f64 },

    #[error("cutoff fails the x -> 1/x symmetry check: {0}")]
    SymmetryViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
