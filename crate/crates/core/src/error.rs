//! Error type shared by every module.

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gcd({h}, {k}) != 1")]
    NotCoprime { h: i64, k: i64 },
    #[error("modulus must be positive, got {0}")]
    BadModulus(i64),
    #[error("invalid q: {0}")]
    InvalidQ(String),
    #[error("{op} is not available in the {regime} regime")]
    Regime { op: &'static str, regime: &'static str },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("tolerance must be finite and positive, got {0}")]
    Tolerance(f64),
    #[error("parity condition for {variant} fails at (h, k) = ({h}, {k}): needs {needs}")]
    Parity { variant: &'static str, h: i64, k: i64, needs: &'static str },
    #[error("pole: {0}")]
    Pole(String),
    #[error("no convergence after {terms} terms (tail bound {bound:e}, tolerance {tol:e})")]
    NotConverged { terms: usize, bound: f64, tol: f64 },
    #[error("divergent series: {0}")]
    Divergent(String),
    #[error("quadrature failed: {0}")]
    Quadrature(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// `true` for errors caused by the arguments rather than by a numerical failure.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::NotConverged { .. } | Error::Divergent(_) | Error::Quadrature(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Error::Tolerance(tol))
    }
}
