//! q-Genocchi zeta and l-functions: `Im_q`, its Hurwitz-type variants, the
//! character twists, the non-alternating `zeta_q` and `L_q`, the
//! Cenkci-Can-Kurt variant, and the residue-class decomposition checks.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::dirichlet::DirichletCharacter;
use crate::error::{check_tol, Error, Result};
use crate::exact::{qbracket_exact, to_f64, QParam, Regime, SeriesValue};
use crate::outcome::{fmt_complex, param, VerificationOutcome};

/// How the shift `x` enters a Hurwitz-type sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HurwitzVariant {
    /// `sum_{n>=0} (-1)^n q^{-n} (q^{-n}[n] + x)^{-s}`.
    Additive,
    /// `sum_{n>=0} (-1)^n q^{-n(1-s)} [n+x]^{-s}`.
    Bracket,
}

/// Inputs shared by the q-zeta family.
#[derive(Debug, Clone)]
pub struct QZetaRequest {
    pub s: Complex64,
    pub q: QParam,
    pub x: Option<f64>,
    pub chi: Option<DirichletCharacter>,
    pub tol: f64,
}

impl QZetaRequest {
    /// Checks `Re s > 1`, `0 < x <= 1` and the tolerance.
    pub fn validate(&self) -> Result<()> {
        check_tol(self.tol)?;
        check_s(self.s)?;
        if let Some(x) = self.x {
            check_x(x)?;
        }
        Ok(())
    }
}

fn check_s(s: Complex64) -> Result<()> {
    if s.re > 1.0 && s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("needs Re s > 1, got s = {s}")))
    }
}

fn check_x(x: f64) -> Result<()> {
    if x > 0.0 && x <= 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("needs 0 < x <= 1, got x = {x}")))
    }
}

/// `[2] = 1 + q`.
pub fn two_bracket(q: &QParam) -> Complex64 {
    1.0 + q.to_complex()
}

/// Term weights of a q-series `sum c_n q^{-n} (q^{-n}[n] + x)^{-s}`.
#[derive(Clone, Copy)]
pub(crate) enum Coeff<'a> {
    /// `(-1)^n`.
    Alternating,
    /// `1`.
    Plain,
    /// `(-1)^n chi(n)`.
    AltChi(&'a DirichletCharacter),
    /// `chi(n)`.
    Chi(&'a DirichletCharacter),
}

impl Coeff<'_> {
    pub(crate) fn at(&self, n: usize) -> Complex64 {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        match self {
            Coeff::Alternating => Complex64::new(sign, 0.0),
            Coeff::Plain => Complex64::new(1.0, 0.0),
            Coeff::AltChi(chi) => sign * chi.eval(n as i64),
            Coeff::Chi(chi) => chi.eval(n as i64),
        }
    }
}

/// `sum_{n>=start} c_n q^{-n} (q^{-n}[n] + x)^{-s}` for `Re s > 1`, `x >= 0`,
/// `q` real in `(0,1)` or complex in the unit disk (principal branch).
///
/// Stops when the geometric majorant of the tail is below `tol/2` and the
/// last term is below `tol/2`.
pub(crate) fn q_series(s: Complex64, q: &QParam, x: f64, start: usize, coeff: Coeff, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    check_s(s)?;
    if x < 0.0 || (x == 0.0 && start == 0) {
        return Err(Error::Domain(format!("shift x = {x} is not admissible")));
    }
    let sig = s.re;
    let mut sum = Complex64::zero();
    let mut abs = 0.0;
    match q {
        QParam::RealUnit(qr) => {
            let qf = to_f64(qr);
            let lq = qf.ln();
            let ratio = (lq * (sig - 1.0)).exp();
            let mut n = start;
            loop {
                let c = coeff.at(n);
                if c != Complex64::zero() {
                    let bracket = -(lq * n as f64).exp_m1() / (1.0 - qf);
                    let base = bracket + x * (lq * n as f64).exp();
                    // q^{-n} (q^{-n} base)^{-s} = exp(n(s-1) ln q - s ln base)
                    let t = c * ((s - 1.0) * (n as f64 * lq) - s * base.ln()).exp();
                    sum += t;
                    abs += t.norm();
                }
                n += 1;
                let bn = -(lq * n as f64).exp_m1() / (1.0 - qf);
                let bound = bn.powf(-sig) * (lq * n as f64 * (sig - 1.0)).exp() / (1.0 - ratio);
                let last = if n > 1 {
                    let bl = -(lq * (n - 1) as f64).exp_m1() / (1.0 - qf);
                    bl.powf(-sig) * (lq * (n - 1) as f64 * (sig - 1.0)).exp()
                } else {
                    f64::INFINITY
                };
                if bound <= tol / 2.0 && last <= tol / 2.0 {
                    return Ok(SeriesValue::new(sum, bound + 4.0 * f64::EPSILON * abs, n - start));
                }
                if n > crate::MAX_TERMS {
                    return Err(Error::NotConverged { terms: n, bound, tol });
                }
            }
        }
        QParam::ComplexUnitDisk(z) => {
            let r = z.norm();
            let lnr = r.ln();
            let argq = z.arg();
            let one = Complex64::new(1.0, 0.0);
            let growth = (PI * s.im.abs()).exp();
            let mut zn = one;
            for _ in 0..start {
                zn *= z;
            }
            let mut n = start;
            loop {
                let c = coeff.at(n);
                if c != Complex64::zero() {
                    let u = (one - zn) / (one - z) + x * zn;
                    // w = q^{-n} u, with the principal logarithm of w
                    let ln_abs = -(n as f64) * lnr + u.norm().ln();
                    let mut arg = -(n as f64) * argq + u.arg();
                    arg = arg - 2.0 * PI * ((arg + PI) / (2.0 * PI)).floor();
                    if arg <= -PI {
                        arg += 2.0 * PI;
                    }
                    let log_w = Complex64::new(ln_abs, arg);
                    let t = c * (Complex64::new(-(n as f64) * lnr, -(n as f64) * argq) - s * log_w).exp();
                    sum += t;
                    abs += t.norm();
                }
                n += 1;
                zn *= z;
                let rn = r.powi(n as i32);
                let u_min = (1.0 - rn) / (one - z).norm() - x * rn;
                if u_min > 0.0 {
                    let geo = (lnr * (sig - 1.0)).exp();
                    let bound = growth * u_min.powf(-sig) * (lnr * n as f64 * (sig - 1.0)).exp() / (1.0 - geo);
                    if bound <= tol / 2.0 {
                        return Ok(SeriesValue::new(sum, bound + 4.0 * f64::EPSILON * abs, n - start));
                    }
                }
                if n > crate::MAX_TERMS {
                    return Err(Error::NotConverged { terms: n, bound: f64::INFINITY, tol });
                }
            }
        }
        QParam::Limit1 => Err(Error::Regime { op: "q-zeta series", regime: Regime::Limit1.name() }),
    }
}

fn scaled(v: SeriesValue, factor: Complex64) -> SeriesValue {
    SeriesValue::new(v.value * factor, v.tail_bound * factor.norm(), v.terms_used)
}

fn maybe_scale(v: SeriesValue, q: &QParam, genocchi_scale: bool) -> SeriesValue {
    if genocchi_scale {
        scaled(v, two_bracket(q))
    } else {
        v
    }
}

/// `Im_q(s) = sum_{n>=1} (-1)^n q^{-n} (q^{-n}[n])^{-s}`; times `[2]` when
/// `genocchi_scale` (giving `Im_{G,q}`).
pub fn im_q(s: Complex64, q: &QParam, tol: f64, genocchi_scale: bool) -> Result<SeriesValue> {
    let t = if genocchi_scale { tol / two_bracket(q).norm() } else { tol };
    Ok(maybe_scale(q_series(s, q, 0.0, 1, Coeff::Alternating, t)?, q, genocchi_scale))
}

/// Hurwitz-type `Im_q(s, x)` for `0 < x <= 1`, either variant.
pub fn im_q_hurwitz(
    s: Complex64,
    x: f64,
    q: &QParam,
    tol: f64,
    variant: HurwitzVariant,
    genocchi_scale: bool,
) -> Result<SeriesValue> {
    check_x(x)?;
    let t = if genocchi_scale { tol / two_bracket(q).norm() } else { tol };
    let v = match variant {
        HurwitzVariant::Additive => q_series(s, q, x, 0, Coeff::Alternating, t)?,
        HurwitzVariant::Bracket => bracket_series(s, x, q, t)?,
    };
    Ok(maybe_scale(v, q, genocchi_scale))
}

/// Additive Hurwitz sum for any shift `x > 0` (decomposition arguments may exceed 1).
pub(crate) fn im_q_shifted(s: Complex64, x: f64, q: &QParam, tol: f64) -> Result<SeriesValue> {
    q_series(s, q, x, 0, Coeff::Alternating, tol)
}

/// `sum_{n>=0} (-1)^n q^{n(s-1)} [n+x]^{-s}` (real `q` only).
fn bracket_series(s: Complex64, x: f64, q: &QParam, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    check_s(s)?;
    let qf = match q {
        QParam::RealUnit(r) => to_f64(r),
        _ => return Err(Error::Regime { op: "bracket Hurwitz variant", regime: q.regime().name() }),
    };
    let lq = qf.ln();
    let sig = s.re;
    let ratio = (lq * (sig - 1.0)).exp();
    let mut sum = Complex64::zero();
    let mut abs = 0.0;
    let mut n = 0usize;
    loop {
        let b = -(lq * (n as f64 + x)).exp_m1() / (1.0 - qf);
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        let t = sign * ((s - 1.0) * (n as f64 * lq) - s * b.ln()).exp();
        sum += t;
        abs += t.norm();
        n += 1;
        let bn = -(lq * n as f64).exp_m1() / (1.0 - qf);
        let bound = bn.powf(-sig) * (lq * n as f64 * (sig - 1.0)).exp() / (1.0 - ratio);
        if bound <= tol / 2.0 && t.norm() <= tol / 2.0 {
            return Ok(SeriesValue::new(sum, bound + 4.0 * f64::EPSILON * abs, n));
        }
        if n > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: n, bound, tol });
        }
    }
}

/// `l_q(s, chi) = sum_{n>=1} (-1)^n chi(n) q^{-n} (q^{-n}[n])^{-s}`, or with
/// `two_var_x = Some(x)` the two-variable
/// `l_q(s, x, chi) = sum_{n>=0} (-1)^n chi(n) q^{-n} (q^{-n}[n] + x)^{-s}`.
pub fn l_q(
    s: Complex64,
    chi: &DirichletCharacter,
    q: &QParam,
    tol: f64,
    genocchi_scale: bool,
    two_var_x: Option<f64>,
) -> Result<SeriesValue> {
    let t = if genocchi_scale { tol / two_bracket(q).norm() } else { tol };
    let v = match two_var_x {
        None => q_series(s, q, 0.0, 1, Coeff::AltChi(chi), t)?,
        Some(x) => {
            check_x(x)?;
            q_series(s, q, x, 0, Coeff::AltChi(chi), t)?
        }
    };
    Ok(maybe_scale(v, q, genocchi_scale))
}

/// Non-alternating `zeta_q(s) = sum_{n>=1} q^{-n} (q^{-n}[n])^{-s}`.
pub fn zeta_q(s: Complex64, q: &QParam, tol: f64) -> Result<SeriesValue> {
    q_series(s, q, 0.0, 1, Coeff::Plain, tol)
}

/// Non-alternating `L_q(s, chi) = sum_{n>=1} chi(n) q^{-n} (q^{-n}[n])^{-s}`.
pub fn big_l_q(s: Complex64, chi: &DirichletCharacter, q: &QParam, tol: f64) -> Result<SeriesValue> {
    q_series(s, q, 0.0, 1, Coeff::Chi(chi), tol)
}

/// Cenkci-Can-Kurt q-Genocchi zeta `q(1+q) sum_{n>=1} (-1)^{n+1} q^n [n]^{-s}`
/// (real `q`; any `s`, since the terms decay like `q^n`).
pub fn cck_zeta(s: Complex64, q: &QParam, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    let qf = match q {
        QParam::RealUnit(r) => to_f64(r),
        _ => return Err(Error::Regime { op: "cck_zeta", regime: q.regime().name() }),
    };
    let lq = qf.ln();
    let sig = s.re;
    let pref = qf * (1.0 + qf);
    // [n]^{-sig} <= max(1, (1-q)^{sig})
    let env = if sig >= 0.0 { 1.0 } else { (1.0 - qf).powf(sig) };
    let mut sum = Complex64::zero();
    let mut abs = 0.0;
    let mut n = 1usize;
    loop {
        let b = -(lq * n as f64).exp_m1() / (1.0 - qf);
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        let t = sign * (n as f64 * lq - s * b.ln()).exp();
        sum += t;
        abs += t.norm();
        n += 1;
        let bound = pref * env * (lq * n as f64).exp() / (1.0 - qf);
        if bound <= tol / 2.0 {
            return Ok(SeriesValue::new(pref * sum, bound + 4.0 * f64::EPSILON * pref * abs, n - 1));
        }
        if n > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: n, bound, tol });
        }
    }
}

fn decomposition_inputs(chi: &DirichletCharacter, q: &QParam, op: &'static str) -> Result<(u32, crate::Rational)> {
    let qr = match q {
        QParam::RealUnit(r) => r.clone(),
        _ => return Err(Error::Regime { op, regime: q.regime().name() }),
    };
    let f = chi.modulus();
    if f.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "modulus {f} is even; splitting n = a + mf turns (-1)^n into (-1)^a (-1)^m only for odd f"
        )));
    }
    Ok((f as u32, qr))
}

/// Shared right-hand side
/// `[2] [f]^{-s} sum_{a=1}^{f} (-1)^a q^{a(s-1)} chi(a) Im_{q^f}(s, x_a)`
/// with `x_a = ([a] + x q^a)/[f]`.
fn decomposition_rhs(
    s: Complex64,
    x: f64,
    chi: &DirichletCharacter,
    f: u32,
    qr: &crate::Rational,
    tol: f64,
) -> Result<(Complex64, f64)> {
    let qf = to_f64(qr);
    let big_q = QParam::RealUnit(num_traits::pow(qr.clone(), f as usize));
    let brf = to_f64(&qbracket_exact(f as i64, qr));
    let pref = (1.0 + qf) * crate::zeta::real_pow_neg(brf, s);
    let per = tol / (f as f64 * pref.norm().max(1e-300));
    let mut sum = Complex64::zero();
    let mut bound = 0.0;
    for a in 1..=f {
        let ca = chi.eval(a as i64);
        if ca == Complex64::zero() {
            continue;
        }
        let bra = qbracket_exact(a as i64, qr).to_f64().unwrap_or(f64::NAN);
        let xa = (bra + x * qf.powi(a as i32)) / brf;
        let sign = if a % 2 == 0 { 1.0 } else { -1.0 };
        let w = sign * ca * ((s - 1.0) * (a as f64 * qf.ln())).exp();
        let h = im_q_shifted(s, xa, &big_q, per / w.norm().max(1.0))?;
        sum += w * h.value;
        bound += w.norm() * h.tail_bound;
    }
    Ok((pref * sum, pref.norm() * bound))
}

fn scale_note(q: &crate::Rational, f: u32) -> String {
    let qf = to_f64(q);
    format!(
        "the [2] factor is taken in base q on both sides; reading Im_{{G,q^f}} with [2:q^f] instead \
         multiplies the right side by {:.17e}",
        (1.0 + qf.powi(f as i32)) / (1.0 + qf)
    )
}

/// Residue-class decomposition of `l_{G,q}(s, chi)` through the Hurwitz-type
/// function in base `q^f` (odd modulus `f`, real `q`).
pub fn verify_l_decomposition(
    s: Complex64,
    chi: &DirichletCharacter,
    q: &QParam,
    tol: f64,
) -> Result<VerificationOutcome> {
    check_tol(tol)?;
    let (f, qr) = decomposition_inputs(chi, q, "verify_l_decomposition")?;
    let lhs = l_q(s, chi, q, tol / 10.0, true, None)?;
    let rhs = decomposition_rhs(s, 0.0, chi, f, &qr, tol / 10.0)?;
    let params = vec![param("s", fmt_complex(s)), param("q", q), param("chi", chi)];
    Ok(VerificationOutcome::new(
        "l_Gq decomposition",
        params,
        (lhs.value, lhs.tail_bound),
        rhs,
        tol,
        "series l_Gq(s,chi) vs residue classes of Im_{q^f}(s,[a]/[f])",
    )
    .with_note(scale_note(&qr, f)))
}

/// Residue-class decomposition of the two-variable `l_{G,q}(s, x, chi)`.
pub fn verify_two_variable_decomposition(
    s: Complex64,
    x: f64,
    chi: &DirichletCharacter,
    q: &QParam,
    tol: f64,
) -> Result<VerificationOutcome> {
    check_tol(tol)?;
    check_x(x)?;
    let (f, qr) = decomposition_inputs(chi, q, "verify_two_variable_decomposition")?;
    let lhs = l_q(s, chi, q, tol / 10.0, true, Some(x))?;
    let rhs = decomposition_rhs(s, x, chi, f, &qr, tol / 10.0)?;
    let params = vec![param("s", fmt_complex(s)), param("q", q), param("chi", chi), param("x", x)];
    let mut out = VerificationOutcome::new(
        "two-variable l_Gq decomposition",
        params,
        (lhs.value, lhs.tail_bound),
        rhs,
        tol,
        "series l_Gq(s,x,chi) vs residue classes of Im_{q^f}(s,([a]+xq^a)/[f])",
    )
    .with_note(scale_note(&qr, f));
    if f == 1 {
        out = out.with_note(
            "modulus 1 has chi(0) = 1, so the left side keeps the n = 0 term [2] x^{-s} that no residue class a >= 1 covers",
        );
    }
    Ok(out)
}
