//! Damping schedules and Richardson extrapolation to zero offset.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// How per-offset values are combined into a limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extrapolation {
    /// Report the value at the smallest offset.
    None,
    /// Polynomial extrapolation to 0 eliminating this many powers of `eps`.
    Richardson(usize),
}

/// Damping offsets `eps_1 > ... > eps_m > 0` and the extrapolation rule.
#[derive(Debug, Clone, PartialEq)]
pub struct RegularizationSchedule {
    offsets: Vec<f64>,
    extrapolation: Extrapolation,
}

impl Default for RegularizationSchedule {
    /// `{0.05, 0.025, 0.0125, 0.00625}` with third-order Richardson.
    fn default() -> Self {
        RegularizationSchedule {
            offsets: vec![0.05, 0.025, 0.0125, 0.00625],
            extrapolation: Extrapolation::Richardson(3),
        }
    }
}

impl RegularizationSchedule {
    pub fn new(offsets: Vec<f64>, extrapolation: Extrapolation) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::Domain("empty damping schedule".into()));
        }
        if offsets.iter().any(|&e| !(e > 0.0 && e.is_finite())) {
            return Err(Error::Domain("damping offsets must be positive".into()));
        }
        if offsets.windows(2).any(|w| w[1] >= w[0]) {
            return Err(Error::Domain("damping offsets must be strictly decreasing".into()));
        }
        if let Extrapolation::Richardson(order) = extrapolation {
            if order == 0 || order >= offsets.len() {
                return Err(Error::Domain(format!(
                    "Richardson order {order} needs between 1 and {} for {} offsets",
                    offsets.len().saturating_sub(1),
                    offsets.len()
                )));
            }
        }
        Ok(RegularizationSchedule { offsets, extrapolation })
    }

    /// Offsets with the default extrapolation order for their count.
    pub fn with_offsets(offsets: Vec<f64>) -> Result<Self> {
        let order = offsets.len().saturating_sub(1).min(3);
        let ex = if order == 0 { Extrapolation::None } else { Extrapolation::Richardson(order) };
        RegularizationSchedule::new(offsets, ex)
    }

    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    pub fn extrapolation(&self) -> Extrapolation {
        self.extrapolation
    }

    /// The same schedule with `eps_m / 2` appended.
    pub fn halved(&self) -> Self {
        let mut offsets = self.offsets.clone();
        offsets.push(offsets[offsets.len() - 1] / 2.0);
        RegularizationSchedule { offsets, extrapolation: self.extrapolation }
    }

    /// Extrapolated value and residual estimate (size of the last correction).
    pub fn extrapolate(&self, values: &[Complex64]) -> (Complex64, f64) {
        extrapolate(&self.offsets, values, self.extrapolation)
    }
}

/// Neville tableau evaluated at 0 over the trailing `order + 1` offsets.
pub fn extrapolate(eps: &[f64], values: &[Complex64], ex: Extrapolation) -> (Complex64, f64) {
    let m = values.len();
    match ex {
        Extrapolation::None => {
            let last = values[m - 1];
            let res = if m >= 2 { (last - values[m - 2]).norm() } else { f64::INFINITY };
            (last, res)
        }
        Extrapolation::Richardson(order) => {
            let mut prev: Vec<Complex64> = values.to_vec();
            let mut before_last = prev[m - 1];
            for level in 1..=order {
                let row: Vec<Complex64> = (0..prev.len() - 1)
                    .map(|i| (eps[i] * prev[i + 1] - eps[i + level] * prev[i]) / (eps[i] - eps[i + level]))
                    .collect();
                before_last = prev[prev.len() - 1];
                prev = row;
            }
            let v = prev[prev.len() - 1];
            (v, (v - before_last).norm())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_on_polynomials() {
        let eps = [0.2, 0.1, 0.05, 0.025];
        let vals: Vec<Complex64> =
            eps.iter().map(|&e| Complex64::new(1.5 - 2.0 * e + 3.0 * e * e - e * e * e, e)).collect();
        let (v, _) = extrapolate(&eps, &vals, Extrapolation::Richardson(3));
        assert!((v - Complex64::new(1.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn validation() {
        assert!(RegularizationSchedule::new(vec![], Extrapolation::None).is_err());
        assert!(RegularizationSchedule::new(vec![0.1, 0.2], Extrapolation::None).is_err());
        assert!(RegularizationSchedule::new(vec![0.1, 0.0], Extrapolation::None).is_err());
        assert!(RegularizationSchedule::new(vec![0.1, 0.05], Extrapolation::Richardson(2)).is_err());
        assert!(RegularizationSchedule::new(vec![0.1], Extrapolation::None).is_ok());
        let h = RegularizationSchedule::default().halved();
        assert_eq!(h.offsets().last(), Some(&0.003125));
    }
}
