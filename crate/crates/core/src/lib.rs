//! Hardy-Berndt and Dedekind sums, their q-analogues built from q-Genocchi
//! generating functions, and the zeta and l-functions they connect to.
//!
//! Rational objects are computed exactly; analytic ones return a
//! [`SeriesValue`] whose `tail_bound` certifies the truncation error.

// `!(x > 0.0)` also rejects NaN; indexed loops mirror the summation formulas.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod dirichlet;
pub mod error;
pub mod exact;
pub mod finite;
pub mod gamma;
pub mod mellin;
pub mod numbers;
pub mod outcome;
pub mod qsums;
pub mod qzeta;
pub mod zeta;

pub use error::{Error, Result};
pub use exact::{QParam, Rational, SeriesValue};

/// Hard cap on the number of terms any single series may use.
pub const MAX_TERMS: usize = 50_000_000;
