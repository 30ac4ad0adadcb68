//! Bernoulli, Euler and Genocchi numbers, and their q-analogues.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{check_tol, Error, Result};
use crate::exact::{int, to_f64, QParam, QValue, Rational, SeriesValue};

/// Which classical sequence a [`NumberTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberKind {
    /// `t/(e^t - 1) = sum B_n t^n/n!`.
    Bernoulli,
    /// `2/(e^t + 1) = sum E_n t^n/n!`.
    Euler,
    /// `2t/(e^t + 1) = sum G_n t^n/n!`.
    Genocchi,
}

impl NumberKind {
    pub fn name(self) -> &'static str {
        match self {
            NumberKind::Bernoulli => "bernoulli",
            NumberKind::Euler => "euler",
            NumberKind::Genocchi => "genocchi",
        }
    }
}

impl fmt::Display for NumberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumberKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "b" | "bernoulli" => Ok(NumberKind::Bernoulli),
            "e" | "euler" => Ok(NumberKind::Euler),
            "g" | "genocchi" => Ok(NumberKind::Genocchi),
            _ => Err(Error::Parse(format!("unknown number kind {s:?}"))),
        }
    }
}

/// `entries[n]` is the `n`-th number of the given kind, for `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct NumberTable {
    pub kind: NumberKind,
    pub entries: Vec<Rational>,
}

/// Rows `0..=n` of Pascal's triangle.
pub(crate) fn binomial_rows(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// Exact table computed from the recurrence obtained by clearing the
/// denominator of the generating function.
pub fn number_table(kind: NumberKind, n_max: usize) -> NumberTable {
    let c = binomial_rows(n_max + 1);
    let mut e: Vec<Rational> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let v = match kind {
            // sum_{k<=n} C(n+1,k) B_k = [n = 0]
            NumberKind::Bernoulli => {
                if n == 0 {
                    Rational::one()
                } else {
                    let s: Rational = (0..n).map(|k| Rational::from_integer(c[n + 1][k].clone()) * &e[k]).sum();
                    -s / int(n as i64 + 1)
                }
            }
            // 2 E_n + sum_{k<n} C(n,k) E_k = 2 [n = 0]
            NumberKind::Euler => {
                let s: Rational = (0..n).map(|k| Rational::from_integer(c[n][k].clone()) * &e[k]).sum();
                let rhs = if n == 0 { int(2) } else { Rational::zero() };
                (rhs - s) / int(2)
            }
            // 2 G_n + sum_{k<n} C(n,k) G_k = 2 [n = 1]
            NumberKind::Genocchi => {
                let s: Rational = (0..n).map(|k| Rational::from_integer(c[n][k].clone()) * &e[k]).sum();
                let rhs = if n == 1 { int(2) } else { Rational::zero() };
                (rhs - s) / int(2)
            }
        };
        e.push(v);
    }
    NumberTable { kind, entries: e }
}

/// `E_{m,q} = [2] (1-q)^{-m} sum_{k=0}^{m} C(m,k) (-1)^k / (1 + q^{k+1})`.
///
/// Exact for rational `q`; the limit `q = 1` is rejected (use [`number_table`]).
pub fn q_euler_number(m: usize, q: &QParam) -> Result<QValue> {
    q.require("q_euler_number", &[crate::exact::Regime::RealUnit, crate::exact::Regime::ComplexUnitDisk])?;
    let row = binomial_rows(m).pop().unwrap();
    match q {
        QParam::RealUnit(q) => Ok(QValue::Exact(q_euler_exact(m, q, &row))),
        QParam::ComplexUnitDisk(z) => {
            let one = Complex64::new(1.0, 0.0);
            let mut s = Complex64::new(0.0, 0.0);
            for (k, c) in row.iter().enumerate() {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                s += sign * to_f64(&Rational::from_integer(c.clone())) / (one + z.powu(k as u32 + 1));
            }
            Ok(QValue::Complex((one + z) * s / (one - z).powu(m as u32)))
        }
        QParam::Limit1 => unreachable!(),
    }
}

fn q_euler_exact(m: usize, q: &Rational, row: &[BigInt]) -> Rational {
    let one = Rational::one();
    let mut s = Rational::zero();
    let mut qk = q.clone();
    for (k, c) in row.iter().enumerate() {
        let t = Rational::from_integer(c.clone()) / (&one + &qk);
        if k % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
        qk *= q;
    }
    (&one + q) * s / num_traits::pow(&one - q, m)
}

/// `G_{m,q} = [2] m sum_{n>=0} (-1)^n q^n [n]^{m-1}`, summed until the
/// geometric majorant `|q|^N (1-|q|)^{1-m} / (1-|q|)` is below `tol`.
pub fn q_genocchi_number(m: usize, q: &QParam, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    q.require("q_genocchi_number", &[crate::exact::Regime::RealUnit, crate::exact::Regime::ComplexUnitDisk])?;
    let zero = Complex64::new(0.0, 0.0);
    if m == 0 {
        return Ok(SeriesValue::new(zero, 0.0, 1));
    }
    let z = q.to_complex();
    let one = Complex64::new(1.0, 0.0);
    let r = z.norm();
    let two = one + z;
    let pref = two * m as f64;
    // |[n]| <= 1/(1-|q|) for every n
    let env = (1.0 / (1.0 - r)).powi(m as i32 - 1).max(1.0);
    let mut sum = zero;
    let mut abs_sum = 0.0;
    let mut qn = one; // q^n
    let mut n = 0usize;
    loop {
        let bracket = (one - qn) / (one - z);
        let pow = if m == 1 { one } else { bracket.powu(m as u32 - 1) };
        let term = if n.is_multiple_of(2) { qn * pow } else { -qn * pow };
        sum += term;
        abs_sum += term.norm();
        n += 1;
        qn *= z;
        let tail = pref.norm() * r.powi(n as i32) * env / (1.0 - r);
        if tail <= tol / 2.0 {
            let bound = tail + f64::EPSILON * pref.norm() * abs_sum * 4.0;
            return Ok(SeriesValue::new(pref * sum, bound, n));
        }
        if n > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: n, bound: tail, tol });
        }
    }
}

/// Exact `G_{m,q} = m E_{m-1,q}` for rational `q`; avoids the cancellation
/// of the defining series when `q` is close to 1.
pub fn q_genocchi_number_exact(m: usize, q: &Rational) -> Result<Rational> {
    if m == 0 {
        return Ok(Rational::zero());
    }
    let qp = QParam::real(q.clone())?;
    match q_euler_number(m - 1, &qp)? {
        QValue::Exact(e) => Ok(int(m as i64) * e),
        QValue::Complex(_) => unreachable!(),
    }
}
