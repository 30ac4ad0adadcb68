//! Result record shared by all identity checks.

use num_complex::Complex64;

/// Both sides of an identity, their error certificates and the verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationOutcome {
    /// Name of the identity being checked.
    pub check: String,
    /// Input parameters as `(name, value)` pairs, sorted by name.
    pub params: Vec<(String, String)>,
    pub lhs: Complex64,
    pub rhs: Complex64,
    /// Certified error bound (or residual estimate) of each side.
    pub lhs_bound: f64,
    pub rhs_bound: f64,
    pub abs_diff: f64,
    pub tolerance: f64,
    /// `abs_diff <= tolerance`.
    pub pass: bool,
    /// How each side was computed.
    pub route: String,
    /// Observations worth surfacing next to the verdict.
    pub notes: Vec<String>,
}

impl VerificationOutcome {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        check: impl Into<String>,
        mut params: Vec<(String, String)>,
        lhs: (Complex64, f64),
        rhs: (Complex64, f64),
        tolerance: f64,
        route: impl Into<String>,
    ) -> Self {
        params.sort();
        let abs_diff = (lhs.0 - rhs.0).norm();
        VerificationOutcome {
            check: check.into(),
            params,
            lhs: lhs.0,
            rhs: rhs.0,
            lhs_bound: lhs.1,
            rhs_bound: rhs.1,
            abs_diff,
            tolerance,
            pass: abs_diff <= tolerance,
            route: route.into(),
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Sort key: check name, then the parameter echo.
    pub fn key(&self) -> (String, Vec<(String, String)>) {
        (self.check.clone(), self.params.clone())
    }
}

/// `(name, value)` helper for parameter echoes.
pub fn param(name: &str, value: impl ToString) -> (String, String) {
    (name.to_string(), value.to_string())
}

/// Formats a complex number compactly for parameter echoes.
pub fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{},{}", z.re, z.im)
    }
}
