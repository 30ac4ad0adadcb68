//! Exact rational arithmetic, the q-parameter, q-brackets and the sawtooth.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Nearest `f64` to a rational (correct for huge numerators and denominators).
pub fn to_f64(r: &Rational) -> f64 {
    if let Some(x) = r.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    // Scale both parts down so that the division fits in range.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = (nb.max(db) - 1000).max(0) as usize;
    let n = (r.numer() >> shift).to_f64().unwrap_or(0.0);
    let d = (r.denom() >> shift).to_f64().unwrap_or(f64::INFINITY);
    n / d
}

/// Floor of a rational.
pub fn floor(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `x - floor(x)`, in `[0, 1)`.
pub fn frac(x: &Rational) -> Rational {
    x - Rational::from_integer(floor(x))
}

/// The sawtooth `((x))`: `x - floor(x) - 1/2`, and `0` at integers.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        frac(x) - rational(1, 2)
    }
}

/// `(-1)^n` for an arbitrary integer `n`.
pub fn neg_one_pow(n: &BigInt) -> i64 {
    if n.is_even() {
        1
    } else {
        -1
    }
}

/// Regime tag of a [`QParam`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    RealUnit,
    Limit1,
    ComplexUnitDisk,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::RealUnit => "real-unit",
            Regime::Limit1 => "limit-1",
            Regime::ComplexUnitDisk => "complex-unit-disk",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The deformation parameter `q`.
#[derive(Debug, Clone, PartialEq)]
pub enum QParam {
    /// Exact rational with `0 < q < 1`.
    RealUnit(Rational),
    /// The classical limit `q = 1`.
    Limit1,
    /// Complex `q` with `0 < |q| < 1`.
    ComplexUnitDisk(Complex64),
}

impl QParam {
    /// Real `q` in `(0, 1)`; `q = 1` maps to [`QParam::Limit1`].
    pub fn real(q: Rational) -> Result<Self> {
        if q.is_one() {
            return Ok(QParam::Limit1);
        }
        if q.is_positive() && q < Rational::one() {
            Ok(QParam::RealUnit(q))
        } else {
            Err(Error::InvalidQ(format!("{q} is not in (0, 1]")))
        }
    }

    /// Complex `q` with `0 < |q| < 1`.
    pub fn complex(q: Complex64) -> Result<Self> {
        let r = q.norm();
        if r > 0.0 && r < 1.0 && q.re.is_finite() && q.im.is_finite() {
            Ok(QParam::ComplexUnitDisk(q))
        } else {
            Err(Error::InvalidQ(format!("|{q}| is not in (0, 1)")))
        }
    }

    pub fn regime(&self) -> Regime {
        match self {
            QParam::RealUnit(_) => Regime::RealUnit,
            QParam::Limit1 => Regime::Limit1,
            QParam::ComplexUnitDisk(_) => Regime::ComplexUnitDisk,
        }
    }

    /// Exact value when `q` is real.
    pub fn exact(&self) -> Option<Rational> {
        match self {
            QParam::RealUnit(q) => Some(q.clone()),
            QParam::Limit1 => Some(Rational::one()),
            QParam::ComplexUnitDisk(_) => None,
        }
    }

    /// `q` as a complex float.
    pub fn to_complex(&self) -> Complex64 {
        match self {
            QParam::RealUnit(q) => Complex64::new(to_f64(q), 0.0),
            QParam::Limit1 => Complex64::new(1.0, 0.0),
            QParam::ComplexUnitDisk(z) => *z,
        }
    }

    /// `q` as a real float, when real.
    pub fn to_f64(&self) -> Option<f64> {
        self.exact().map(|q| to_f64(&q))
    }

    /// `q^f` for `f >= 1`.
    pub fn pow(&self, f: u32) -> QParam {
        match self {
            QParam::RealUnit(q) => QParam::RealUnit(num_traits::pow(q.clone(), f as usize)),
            QParam::Limit1 => QParam::Limit1,
            QParam::ComplexUnitDisk(z) => QParam::ComplexUnitDisk(z.powu(f)),
        }
    }

    pub(crate) fn require(&self, op: &'static str, allowed: &[Regime]) -> Result<()> {
        if allowed.contains(&self.regime()) {
            Ok(())
        } else {
            Err(Error::Regime { op, regime: self.regime().name() })
        }
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QParam::RealUnit(q) => write!(f, "{q}"),
            QParam::Limit1 => f.write_str("1"),
            QParam::ComplexUnitDisk(z) => write!(f, "{},{}", z.re, z.im),
        }
    }
}

impl FromStr for QParam {
    type Err = Error;

    /// Accepts `1`, a fraction `a/b`, an exact decimal `0.999`, or a complex pair `re,im`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((re, im)) = s.split_once(',') {
            let re: f64 = re.trim().parse().map_err(|_| Error::Parse(format!("bad q: {s}")))?;
            let im: f64 = im.trim().parse().map_err(|_| Error::Parse(format!("bad q: {s}")))?;
            return QParam::complex(Complex64::new(re, im));
        }
        QParam::real(parse_rational(s)?)
    }
}

/// Parses `a`, `a/b` or a plain decimal such as `-0.125` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip = ip.trim_start_matches(['-', '+']);
        let digits: BigInt = format!("{}{}", if ip.is_empty() { "0" } else { ip }, fp).parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), fp.len());
        let r = Rational::new(digits, den);
        return Ok(if neg { -r } else { r });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// A q-dependent value: exact when `q` is rational, floating otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum QValue {
    Exact(Rational),
    Complex(Complex64),
}

impl QValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            QValue::Exact(r) => Complex64::new(to_f64(r), 0.0),
            QValue::Complex(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            QValue::Exact(r) => Some(r),
            QValue::Complex(_) => None,
        }
    }
}

/// `[n] = (1 - q^n)/(1 - q)` for an integer `n`; equals `n` in the limit regime.
pub fn qbracket(n: i64, q: &QParam) -> QValue {
    match q {
        QParam::RealUnit(q) => QValue::Exact(qbracket_exact(n, q)),
        QParam::Limit1 => QValue::Exact(int(n)),
        QParam::ComplexUnitDisk(z) => {
            let one = Complex64::new(1.0, 0.0);
            QValue::Complex((one - z.powi(n as i32)) / (one - z))
        }
    }
}

/// `[n]` for exact rational `q` (any `q != 0`; `q = 1` gives `n`).
pub fn qbracket_exact(n: i64, q: &Rational) -> Rational {
    if q.is_one() {
        return int(n);
    }
    let qn = if n >= 0 {
        num_traits::pow(q.clone(), n as usize)
    } else {
        num_traits::pow(q.recip(), n.unsigned_abs() as usize)
    };
    (Rational::one() - qn) / (Rational::one() - q)
}

/// `[x] = (1 - q^x)/(1 - q)` for real `x` and `0 < q <= 1`.
pub fn qbracket_real(x: f64, q: f64) -> f64 {
    if q == 1.0 {
        x
    } else {
        -(x * q.ln()).exp_m1() / (1.0 - q)
    }
}

/// Certified value of a series or limit: `|true - value| <= tail_bound`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    pub tail_bound: f64,
    pub terms_used: usize,
}

impl SeriesValue {
    pub fn new(value: Complex64, tail_bound: f64, terms_used: usize) -> Self {
        SeriesValue { value, tail_bound, terms_used }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(&rational(1, 3)), rational(-1, 6));
        assert_eq!(sawtooth(&rational(-1, 3)), rational(1, 6));
        assert_eq!(sawtooth(&int(5)), int(0));
        assert_eq!(sawtooth(&rational(7, 2)), int(0));
    }

    #[test]
    fn bracket_limit_and_exact() {
        assert_eq!(qbracket(7, &QParam::Limit1), QValue::Exact(int(7)));
        let q = QParam::real(rational(1, 2)).unwrap();
        assert_eq!(qbracket(3, &q), QValue::Exact(rational(7, 4)));
        assert_eq!(qbracket_exact(-1, &rational(1, 2)), int(-2));
    }

    #[test]
    fn parse_q() {
        assert_eq!("1".parse::<QParam>().unwrap(), QParam::Limit1);
        assert_eq!("0.25".parse::<QParam>().unwrap(), QParam::RealUnit(rational(1, 4)));
        assert_eq!("3/4".parse::<QParam>().unwrap(), QParam::RealUnit(rational(3, 4)));
        assert!("5/4".parse::<QParam>().is_err());
        assert!("0".parse::<QParam>().is_err());
        assert!(matches!("0.3,0.4".parse::<QParam>().unwrap(), QParam::ComplexUnitDisk(_)));
        assert!("0.8,0.8".parse::<QParam>().is_err());
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = num_traits::pow(BigInt::from(3), 2000);
        let r = Rational::new(big.clone() + 1, big);
        assert!((to_f64(&r) - 1.0).abs() < 1e-15);
    }
}
