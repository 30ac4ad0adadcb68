//! Exact Dedekind and Hardy-Berndt sums.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{floor, neg_one_pow, rational, sawtooth, Rational};

/// One of the six Hardy-Berndt sums or the Dedekind sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SumVariant {
    S,
    S1,
    S2,
    S3,
    S4,
    S5,
    Dedekind,
}

impl SumVariant {
    /// The six Hardy-Berndt variants, in order.
    pub const HARDY_BERNDT: [SumVariant; 6] =
        [SumVariant::S, SumVariant::S1, SumVariant::S2, SumVariant::S3, SumVariant::S4, SumVariant::S5];

    pub fn name(self) -> &'static str {
        match self {
            SumVariant::S => "S",
            SumVariant::S1 => "s1",
            SumVariant::S2 => "s2",
            SumVariant::S3 => "s3",
            SumVariant::S4 => "s4",
            SumVariant::S5 => "s5",
            SumVariant::Dedekind => "dedekind",
        }
    }

    /// Index `j` of the matching generating-function sum `Y_j` (0 for `S`).
    pub fn index(self) -> Option<usize> {
        SumVariant::HARDY_BERNDT.iter().position(|&v| v == self)
    }
}

impl fmt::Display for SumVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "S" | "s0" | "0" => SumVariant::S,
            "s1" | "1" => SumVariant::S1,
            "s2" | "2" => SumVariant::S2,
            "s3" | "3" => SumVariant::S3,
            "s4" | "4" => SumVariant::S4,
            "s5" | "5" => SumVariant::S5,
            "dedekind" | "s" => SumVariant::Dedekind,
            _ => return Err(Error::Parse(format!("unknown sum variant {s:?}"))),
        })
    }
}

/// A validated `(variant, h, k)` triple with `k >= 1` and `gcd(h, k) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SumInput {
    pub variant: SumVariant,
    pub h: i64,
    pub k: i64,
}

impl SumInput {
    pub fn new(variant: SumVariant, h: i64, k: i64) -> Result<Self> {
        check_pair(h, k)?;
        Ok(SumInput { variant, h, k })
    }
}

pub(crate) fn check_pair(h: i64, k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::BadModulus(k));
    }
    if h.gcd(&k) != 1 {
        return Err(Error::NotCoprime { h, k });
    }
    Ok(())
}

/// Whether the hypothesis of the matching trigonometric-series identity holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCondition {
    pub variant: SumVariant,
    pub holds: bool,
    pub description: &'static str,
}

/// Parity hypothesis for `variant` at `(h, k)`.
pub fn parity_condition(variant: SumVariant, h: i64, k: i64) -> ParityCondition {
    let odd = |x: i64| x.rem_euclid(2) == 1;
    let (holds, description) = match variant {
        SumVariant::S => (odd(h + k), "h+k odd"),
        SumVariant::S1 => (!odd(h) && odd(k), "h even and k odd"),
        SumVariant::S2 => (odd(h) && !odd(k), "h odd and k even"),
        SumVariant::S3 => (odd(k), "k odd"),
        SumVariant::S4 => (odd(h), "h odd"),
        SumVariant::S5 => (odd(h) && odd(k), "h and k odd"),
        SumVariant::Dedekind => (true, "none"),
    };
    ParityCondition { variant, holds, description }
}

/// Exact value of a Hardy-Berndt sum (or the Dedekind sum for that variant).
pub fn hardy_berndt(input: &SumInput) -> Result<Rational> {
    let SumInput { variant, h, k } = *input;
    check_pair(h, k)?;
    let kb = BigInt::from(k);
    let saw = |num: i64| sawtooth(&rational(num, k));
    let fl = |j: i64| floor(&Rational::new(BigInt::from(h) * j, kb.clone()));
    let sign = |e: BigInt| neg_one_pow(&e);
    let mut acc = Rational::zero();
    match variant {
        SumVariant::S => {
            for j in 1..k {
                acc += rational(sign(fl(j) + j + 1), 1);
            }
        }
        SumVariant::S1 => {
            for j in 1..=k {
                acc += saw(j) * rational(sign(fl(j)), 1);
            }
        }
        SumVariant::S2 => {
            for j in 1..=k {
                acc += saw(j) * saw(h * j) * rational(sign(BigInt::from(j)), 1);
            }
        }
        SumVariant::S3 => {
            for j in 1..=k {
                acc += saw(h * j) * rational(sign(BigInt::from(j)), 1);
            }
        }
        SumVariant::S4 => {
            for j in 1..k {
                acc += rational(sign(fl(j)), 1);
            }
        }
        SumVariant::S5 => {
            for j in 1..=k {
                acc += saw(j) * rational(sign(fl(j) + j), 1);
            }
        }
        SumVariant::Dedekind => return dedekind_sum(h, k),
    }
    Ok(acc)
}

/// `s(h, k) = sum_{j=1}^{k-1} ((j/k)) ((hj/k))`.
pub fn dedekind_sum(h: i64, k: i64) -> Result<Rational> {
    check_pair(h, k)?;
    let mut acc = Rational::zero();
    for j in 1..k {
        acc += sawtooth(&rational(j, k)) * sawtooth(&rational(h * j, k));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn hb(v: SumVariant, h: i64, k: i64) -> Rational {
        hardy_berndt(&SumInput::new(v, h, k).unwrap()).unwrap()
    }

    #[test]
    fn documented_values() {
        assert_eq!(hb(SumVariant::S, 1, 2), int(1));
        assert_eq!(hb(SumVariant::S, 2, 3), int(2));
        assert_eq!(hb(SumVariant::S3, 1, 3), rational(1, 3));
        assert_eq!(hb(SumVariant::S4, 1, 3), int(2));
        assert_eq!(dedekind_sum(1, 1).unwrap(), int(0));
        assert_eq!(dedekind_sum(1, 2).unwrap(), int(0));
        assert_eq!(dedekind_sum(1, 3).unwrap(), rational(1, 18));
    }

    #[test]
    fn s1_by_hand() {
        // j = 1: (-1)^0 (1/3 - 1/2); j = 2: (-1)^1 (2/3 - 1/2); j = 3: 0
        assert_eq!(hb(SumVariant::S1, 2, 3), rational(-1, 6) - rational(1, 6));
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(SumInput::new(SumVariant::S, 2, 4), Err(Error::NotCoprime { h: 2, k: 4 }));
        assert!(dedekind_sum(3, 6).is_err());
        assert!(SumInput::new(SumVariant::S, 1, 0).is_err());
    }

    #[test]
    fn parity_table() {
        assert!(parity_condition(SumVariant::S, 1, 2).holds);
        assert!(!parity_condition(SumVariant::S5, 2, 3).holds);
        assert!(parity_condition(SumVariant::S3, 1, 3).holds);
        assert!(parity_condition(SumVariant::S1, -2, 3).holds);
    }
}
