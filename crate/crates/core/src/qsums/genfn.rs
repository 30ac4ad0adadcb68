//! The generating functions `f`, `F`, `f_chi`, `F_chi`.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use crate::dirichlet::DirichletCharacter;
use crate::error::{check_tol, Error, Result};
use crate::exact::{to_f64, QParam, Regime, SeriesValue};

/// Which generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenFnTag {
    /// `f(t, q) = sum_{n>=1} q^{-n} exp(-q^{-n}[n] t)`.
    Small,
    /// `F(t, q) = sum_{n>=1} (-1)^n q^{-n} exp(-q^{-n}[n] t)`.
    Big,
    /// `f_chi(t, q) = sum_{n>=1} chi(n) q^{-n} exp(-q^{-n}[n] t)`.
    SmallChi,
    /// `F_chi(t, q) = sum_{n>=1} (-1)^n chi(n) q^{-n} exp(-q^{-n}[n] t)`.
    BigChi,
}

impl GenFnTag {
    pub fn name(self) -> &'static str {
        match self {
            GenFnTag::Small => "f",
            GenFnTag::Big => "F",
            GenFnTag::SmallChi => "f_chi",
            GenFnTag::BigChi => "F_chi",
        }
    }

    pub fn alternating(self) -> bool {
        matches!(self, GenFnTag::Big | GenFnTag::BigChi)
    }
}

impl fmt::Display for GenFnTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generating function with its character, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct GenFnKind {
    tag: GenFnTag,
    chi: Option<DirichletCharacter>,
    /// Use the exponent `q^{n}[n]` instead of `q^{-n}[n]` (only for `f_chi`).
    verbatim_exponent: bool,
}

impl GenFnKind {
    pub fn new(tag: GenFnTag, chi: Option<DirichletCharacter>) -> Result<Self> {
        let needs = matches!(tag, GenFnTag::SmallChi | GenFnTag::BigChi);
        if needs != chi.is_some() {
            return Err(Error::Domain(format!(
                "{tag} {} a character",
                if needs { "requires" } else { "does not take" }
            )));
        }
        Ok(GenFnKind { tag, chi, verbatim_exponent: false })
    }

    pub fn small() -> Self {
        GenFnKind { tag: GenFnTag::Small, chi: None, verbatim_exponent: false }
    }

    pub fn big() -> Self {
        GenFnKind { tag: GenFnTag::Big, chi: None, verbatim_exponent: false }
    }

    /// `f_chi` with exponent `q^{n}[n] t` in place of `q^{-n}[n] t`.
    /// Its terms grow like `q^{-n}`, so evaluation reports divergence.
    pub fn small_chi_verbatim(chi: DirichletCharacter) -> Self {
        GenFnKind { tag: GenFnTag::SmallChi, chi: Some(chi), verbatim_exponent: true }
    }

    pub fn tag(&self) -> GenFnTag {
        self.tag
    }

    pub fn chi(&self) -> Option<&DirichletCharacter> {
        self.chi.as_ref()
    }

    /// Coefficient sign-and-character factor of the `n`-th term (without `q^{-n}`).
    pub fn coeff(&self, n: usize) -> Complex64 {
        let sign = if self.tag.alternating() && n % 2 == 1 { -1.0 } else { 1.0 };
        match &self.chi {
            Some(chi) => sign * chi.eval(n as i64),
            None => Complex64::new(sign, 0.0),
        }
    }
}

/// `sum_{n>=1} c_n q^{-n} exp(-lambda_n t)` with `lambda_n = q^{-n}[n]`
/// (`= n` at `q = 1`), for `Re t > 0`.
///
/// The majorant `q^{-n} exp(-lambda_n Re t)` has ratio
/// `q^{-1} exp(-q^{-n-1} Re t)`, decreasing in `n`; the tail is bounded by the
/// first omitted majorant term over one minus that ratio.
pub fn eval_gen(kind: &GenFnKind, t: Complex64, q: &QParam, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    q.require("eval_gen", &[Regime::RealUnit, Regime::Limit1])?;
    if !(t.re > 0.0) {
        return Err(Error::Domain(format!("generating functions need Re t > 0, got t = {t}")));
    }
    if kind.verbatim_exponent {
        return Err(Error::Divergent(
            "with exponent q^n[n] the terms chi(n) q^{-n} exp(-q^n[n] t) grow like q^{-n}".into(),
        ));
    }
    let tau = t.re;
    let lq = q.exact().map(|r| to_f64(&r).ln()).unwrap_or(0.0);
    let qf = lq.exp();
    // lambda_n and its log-magnitude terms
    let lambda = |n: f64| if lq == 0.0 { n } else { (-n * lq).exp_m1() / (1.0 - qf) };
    let mut sum = Complex64::zero();
    let mut abs = 0.0;
    let mut n = 1usize;
    loop {
        let ln = lambda(n as f64);
        let c = kind.coeff(n);
        let mag = (-(n as f64) * lq - ln * tau).exp();
        if c != Complex64::zero() && mag > 0.0 {
            let t_n = c * mag * Complex64::from_polar(1.0, -ln * t.im);
            sum += t_n;
            abs += t_n.norm();
        }
        n += 1;
        let next = (-(n as f64) * lq - lambda(n as f64) * tau).exp();
        let ratio = (-lq - (-(n as f64 + 1.0) * lq).exp() * tau).exp();
        if ratio < 1.0 && mag <= tol {
            let bound = next / (1.0 - ratio);
            if bound <= tol / 2.0 {
                return Ok(SeriesValue::new(sum, bound + 4.0 * f64::EPSILON * abs, n - 1));
            }
        }
        if n > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: n, bound: f64::INFINITY, tol });
        }
    }
}

/// `F(t, q)` at `q = 1` in closed form: `-1/(e^t + 1)`.
pub fn big_f_at_one(t: Complex64) -> Complex64 {
    -1.0 / (t.exp() + 1.0)
}

/// `f(t, q)` at `q = 1` in closed form: `1/(e^t - 1)`.
pub fn small_f_at_one(t: Complex64) -> Complex64 {
    1.0 / (t.exp() - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::characters_mod;
    use crate::exact::rational;

    fn half() -> QParam {
        QParam::real(rational(1, 2)).unwrap()
    }

    #[test]
    fn big_f_partial_sums() {
        let v = eval_gen(&GenFnKind::big(), Complex64::new(1.0, 0.0), &half(), 1e-15).unwrap();
        // lambda_n = 2^n - 1 ... times 2: q^{-n}[n] = 2(2^n - 1)
        let brute: f64 = (1..30)
            .map(|n| {
                let l = 2.0 * (2f64.powi(n) - 1.0);
                let s = if n % 2 == 0 { 1.0 } else { -1.0 };
                s * 2f64.powi(n) * (-l).exp()
            })
            .sum();
        assert!((v.value.re - brute).abs() < 1e-15);
        assert!(v.terms_used <= 8);
    }

    #[test]
    fn parity_split() {
        let t = Complex64::new(1.0, 0.0);
        let f = eval_gen(&GenFnKind::small(), t, &half(), 1e-15).unwrap().value;
        let big = eval_gen(&GenFnKind::big(), t, &half(), 1e-15).unwrap().value;
        let even: f64 =
            (1..30).filter(|n| n % 2 == 0).map(|n| 2f64.powi(n) * (-(2.0 * (2f64.powi(n) - 1.0))).exp()).sum();
        assert!((f + big - 2.0 * even).norm() < 1e-15);
    }

    #[test]
    fn principal_mod_one_reduces() {
        let chi = characters_mod(1).unwrap().remove(0);
        let t = Complex64::new(0.7, 2.0);
        let a = eval_gen(&GenFnKind::new(GenFnTag::BigChi, Some(chi)).unwrap(), t, &half(), 1e-14).unwrap();
        let b = eval_gen(&GenFnKind::big(), t, &half(), 1e-14).unwrap();
        assert!((a.value - b.value).norm() <= a.tail_bound + b.tail_bound);
    }

    #[test]
    fn closed_forms_at_one() {
        let t = Complex64::new(0.3, 1.1);
        let a = eval_gen(&GenFnKind::big(), t, &QParam::Limit1, 1e-14).unwrap();
        assert!((a.value - big_f_at_one(t)).norm() < 1e-13);
        let b = eval_gen(&GenFnKind::small(), t, &QParam::Limit1, 1e-14).unwrap();
        assert!((b.value - small_f_at_one(t)).norm() < 1e-13);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(eval_gen(&GenFnKind::big(), Complex64::new(0.0, 1.0), &half(), 1e-12).is_err());
        assert!(GenFnKind::new(GenFnTag::Big, characters_mod(3).unwrap().pop()).is_err());
        assert!(GenFnKind::new(GenFnTag::SmallChi, None).is_err());
        let v = GenFnKind::small_chi_verbatim(characters_mod(3).unwrap().remove(1));
        assert!(matches!(eval_gen(&v, Complex64::new(1.0, 0.0), &half(), 1e-12), Err(Error::Divergent(_))));
    }
}
