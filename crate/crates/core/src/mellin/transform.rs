//! `(1/Gamma(s)) int_0^inf t^{s-1} g(t) dt` for the generating functions.

use num_complex::Complex64;

use super::quad::integrate;
use crate::dirichlet::DirichletCharacter;
use crate::error::{check_tol, Error, Result};
use crate::exact::{to_f64, QParam, Regime, SeriesValue};
use crate::gamma::{gamma, GAMMA_REL_ERR};
use crate::outcome::{fmt_complex, param, VerificationOutcome};
use crate::qsums::genfn::{eval_gen, GenFnKind, GenFnTag};
use crate::qzeta::{big_l_q, im_q, im_q_hurwitz, l_q, zeta_q, HurwitzVariant};

/// Bound `|g(t)| <= GEN_BOUND / t` for all four generating functions and `0 < q < 1`.
pub const GEN_BOUND: f64 = 4.0;

/// Quadrature settings for [`mellin_transform`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// `(0, split]` is integrated in `u = ln(split/t)`, `[split, T]` directly.
    pub split: f64,
    /// Absolute target for the integral before division by `Gamma(s)`.
    pub tol: f64,
    /// Truncation point; `None` picks the smallest `1.5^j`-step point whose
    /// tail certificate is below `tol/10`.
    pub truncation: Option<f64>,
    pub max_intervals: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { split: 1.0, tol: 1e-11, truncation: None, max_intervals: 4000 }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        check_tol(self.tol)?;
        if !(self.split > 0.0 && self.split.is_finite()) {
            return Err(Error::Domain(format!("split point must be positive, got {}", self.split)));
        }
        if let Some(t) = self.truncation {
            if !(t > self.split && t.is_finite()) {
                return Err(Error::Domain(format!("truncation point {t} must exceed the split point {}", self.split)));
            }
        }
        Ok(())
    }
}

/// A generating function at fixed real `q`, optionally in the Hurwitz form
/// `sum_{n>=0} c_n q^{-n} exp(-(q^{-n}[n] + x) t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MellinIntegrand {
    kind: GenFnKind,
    q: QParam,
    shift: Option<f64>,
}

impl MellinIntegrand {
    pub fn new(kind: GenFnKind, q: &QParam, shift: Option<f64>) -> Result<Self> {
        q.require("mellin_transform", &[Regime::RealUnit])?;
        if let Some(x) = shift {
            if !(x > 0.0 && x.is_finite()) {
                return Err(Error::Domain(format!("shift x must be positive, got {x}")));
            }
        }
        Ok(MellinIntegrand { kind, q: q.clone(), shift })
    }

    /// `F(t, q)`.
    pub fn big(q: &QParam) -> Result<Self> {
        Self::new(GenFnKind::big(), q, None)
    }

    /// `f(t, q)`.
    pub fn small(q: &QParam) -> Result<Self> {
        Self::new(GenFnKind::small(), q, None)
    }

    /// `F(t, x, q) = sum_{n>=0} (-1)^n q^{-n} exp(-(q^{-n}[n] + x) t)`.
    pub fn big_hurwitz(q: &QParam, x: f64) -> Result<Self> {
        Self::new(GenFnKind::big(), q, Some(x))
    }

    /// `F_chi(t, q)`.
    pub fn big_chi(q: &QParam, chi: &DirichletCharacter) -> Result<Self> {
        Self::new(GenFnKind::new(GenFnTag::BigChi, Some(chi.clone()))?, q, None)
    }

    /// `f_chi(t, q)`.
    pub fn small_chi(q: &QParam, chi: &DirichletCharacter) -> Result<Self> {
        Self::new(GenFnKind::new(GenFnTag::SmallChi, Some(chi.clone()))?, q, None)
    }

    /// Coefficient of the `n = 0` term (zero without a shift).
    fn c0(&self) -> Complex64 {
        match self.shift {
            Some(_) => self.kind.coeff(0),
            None => Complex64::new(0.0, 0.0),
        }
    }

    /// `g(t)` for real `t > 0` to absolute accuracy `tol`.
    pub fn eval(&self, t: f64, tol: f64) -> Result<Complex64> {
        let g = eval_gen(&self.kind, Complex64::new(t, 0.0), &self.q, tol)?.value;
        Ok(match self.shift {
            Some(x) => (self.c0() + g) * (-x * t).exp(),
            None => g,
        })
    }

    /// Bound on `int_T^inf t^{sigma-1} |g(t)| dt`, or `None` when `T` is too
    /// small for the bound to apply.
    fn tail_bound(&self, sigma: f64, big_t: f64) -> Option<f64> {
        let q = to_f64(&self.q.exact().expect("real q"));
        let x = self.shift.unwrap_or(0.0);
        // majorant ratio of consecutive n >= 1 terms
        let r = (-big_t / (q * q)).exp() / q;
        if r > 0.5 {
            return None;
        }
        let integral = |c: f64| {
            let slope = c - (sigma - 1.0).max(0.0) / big_t;
            (slope > 0.0).then(|| big_t.powf(sigma - 1.0) * (-c * big_t).exp() / slope)
        };
        let mut b = integral(x + 1.0 / q)? / (q * (1.0 - r));
        let c0 = self.c0().norm();
        if c0 > 0.0 {
            b += c0 * integral(x)?;
        }
        Some(b)
    }
}

/// `(1/Gamma(s)) int_0^inf t^{s-1} g(t) dt` for `Re s > 1`.
///
/// The `tail_bound` collects the quadrature error estimates, the cut-off
/// bounds near `0` (from `|g(t)| <= B/t`) and beyond `T`, per-point truncation
/// and the relative error of `Gamma`.
pub fn mellin_transform(g: &MellinIntegrand, s: Complex64, cfg: &QuadratureConfig) -> Result<SeriesValue> {
    cfg.validate()?;
    let sigma = s.re;
    if !(sigma > 1.0) || !s.im.is_finite() {
        return Err(Error::Domain(format!("the Mellin integral needs Re s > 1, got s = {s}")));
    }
    let part_tol = cfg.tol / 10.0;
    let big_t = match cfg.truncation {
        Some(t) => t,
        None => {
            let mut t = 2.0 * cfg.split.max(1.0);
            while g.tail_bound(sigma, t).is_none_or(|b| b > part_tol) {
                t *= 1.5;
                if t > 1e5 {
                    return Err(Error::Quadrature("no truncation point meets the tail tolerance".into()));
                }
            }
            t
        }
    };
    let tail = g
        .tail_bound(sigma, big_t)
        .ok_or_else(|| Error::Quadrature(format!("truncation point {big_t} too small for the tail bound")))?;

    let bound_b = GEN_BOUND + g.c0().norm() * cfg.split;
    let delta = (part_tol * (sigma - 1.0) / bound_b).powf(1.0 / (sigma - 1.0)).min(cfg.split);
    let near_zero = bound_b * delta.powf(sigma - 1.0) / (sigma - 1.0);
    let u_max = (cfg.split / delta).ln();
    if u_max > 700.0 {
        return Err(Error::Quadrature(format!("Re s = {sigma} too close to 1 for the cut-off near 0")));
    }
    let point_tol = part_tol / (cfg.split.powf(sigma) + big_t.powf(sigma)).max(1.0);
    let point_err = point_tol * (cfg.split.powf(sigma) + big_t.powf(sigma)) / sigma;

    let lower = integrate(
        |u| {
            let t = cfg.split * (-u).exp();
            Ok((s * t.ln()).exp() * g.eval(t, point_tol)?)
        },
        0.0,
        u_max,
        part_tol,
        cfg.max_intervals,
    )?;
    let upper = integrate(
        |t| Ok(((s - 1.0) * t.ln()).exp() * g.eval(t, point_tol)?),
        cfg.split,
        big_t,
        part_tol,
        cfg.max_intervals,
    )?;
    let gs = gamma(s);
    let value = (lower.value + upper.value) / gs;
    let raw = lower.error + upper.error + near_zero + tail + point_err;
    let bound = raw / gs.norm() + value.norm() * GAMMA_REL_ERR;
    Ok(SeriesValue::new(value, bound, lower.intervals + upper.intervals))
}

/// Series-side function matched by a Mellin integral.
#[derive(Debug, Clone, PartialEq)]
pub enum MellinCheck {
    /// `F` against `Im_q(s)`.
    ImQ,
    /// `F(t, x, q)` against the additive Hurwitz `Im_q(s, x)`.
    ImQHurwitz(f64),
    /// `F_chi` against `l_q(s, chi)`.
    LQ(DirichletCharacter),
    /// `f` against `zeta_q(s)`.
    ZetaQ,
    /// `f_chi` against `L_q(s, chi)`.
    BigLQ(DirichletCharacter),
}

impl MellinCheck {
    pub fn name(&self) -> &'static str {
        match self {
            MellinCheck::ImQ => "mellin F = Im_q",
            MellinCheck::ImQHurwitz(_) => "mellin F(t,x) = Im_q(s,x)",
            MellinCheck::LQ(_) => "mellin F_chi = l_q",
            MellinCheck::ZetaQ => "mellin f = zeta_q",
            MellinCheck::BigLQ(_) => "mellin f_chi = L_q",
        }
    }
}

/// Quadrature route against series route for one definitional integral.
pub fn verify_mellin_definition(
    check: &MellinCheck,
    s: Complex64,
    q: &QParam,
    tol: f64,
) -> Result<VerificationOutcome> {
    check_tol(tol)?;
    let cfg = QuadratureConfig { tol: (tol * 1e-3).max(1e-13), ..QuadratureConfig::default() };
    let stol = (tol * 1e-3).max(1e-15);
    let mut params = vec![param("s", fmt_complex(s)), param("q", q)];
    let (integrand, series) = match check {
        MellinCheck::ImQ => (MellinIntegrand::big(q)?, im_q(s, q, stol, false)?),
        MellinCheck::ImQHurwitz(x) => {
            params.push(param("x", x));
            (MellinIntegrand::big_hurwitz(q, *x)?, im_q_hurwitz(s, *x, q, stol, HurwitzVariant::Additive, false)?)
        }
        MellinCheck::LQ(chi) => {
            params.push(param("chi", chi));
            (MellinIntegrand::big_chi(q, chi)?, l_q(s, chi, q, stol, false, None)?)
        }
        MellinCheck::ZetaQ => (MellinIntegrand::small(q)?, zeta_q(s, q, stol)?),
        MellinCheck::BigLQ(chi) => {
            params.push(param("chi", chi));
            (MellinIntegrand::small_chi(q, chi)?, big_l_q(s, chi, q, stol)?)
        }
    };
    let m = mellin_transform(&integrand, s, &cfg)?;
    Ok(VerificationOutcome::new(
        check.name(),
        params,
        (m.value, m.tail_bound),
        (series.value, series.tail_bound),
        tol,
        "lhs: adaptive Gauss-Kronrod Mellin quadrature; rhs: direct series",
    ))
}
