//! The sums `Y_j(h, k; q)` of generating-function differences, their
//! regularized evaluation, and the q-Hardy-Berndt and q-Dedekind sums.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::genfn::{GenFnKind, GenFnTag};
use super::regularize::RegularizationSchedule;
use super::trig::{damped_trig_series, lattice_bound, lattice_sine_sum, Shape};
use crate::dirichlet::DirichletCharacter;
use crate::error::{check_tol, Error, Result};
use crate::exact::{frac, int, to_f64, QParam, Rational};
use crate::finite::{check_pair, parity_condition, SumVariant};
use crate::zeta::{digamma, hurwitz_zeta};

/// Which `Y` sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YKind {
    /// `Y_j` belonging to a Hardy-Berndt variant (`S -> Y_0`, `s1 -> Y_1`, ...).
    HardyBerndt(SumVariant),
    /// `Y_p` with weights `m^{-p}` and angles `2 pi m h/k`, `p` odd.
    Dedekind(u32),
}

impl fmt::Display for YKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            YKind::HardyBerndt(v) => write!(f, "Y{}", v.index().unwrap_or(0)),
            YKind::Dedekind(p) => write!(f, "Yp(p={p})"),
        }
    }
}

/// Evaluation route for a `Y` sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum YRoute {
    /// Trig-series route at `q = 1` when available, literal otherwise.
    Auto,
    /// At `q = 1`: `i sum_m trig(angle_m) e^{-eps w_m}/w_m`, the tangent (F-based)
    /// or cotangent (f-based) series the difference quotients reduce to.
    TrigSeries,
    /// The double sum taken literally, inner sum over `m` in closed form,
    /// outer sum over `n` damped by `exp(-lambda_n eps)`.
    Literal,
    /// The literal double sum with the order swapped (`q = 1` only): inner
    /// sum over `n` in closed form, outer sum over `m` by residue classes.
    MFirst,
}

impl YRoute {
    pub fn name(self) -> &'static str {
        match self {
            YRoute::Auto => "auto",
            YRoute::TrigSeries => "trig-series",
            YRoute::Literal => "literal",
            YRoute::MFirst => "m-first",
        }
    }
}

impl fmt::Display for YRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Options for [`y_sum`].
#[derive(Debug, Clone, PartialEq)]
pub struct YSumOptions {
    pub schedule: RegularizationSchedule,
    pub route: YRoute,
    /// Target accuracy. Each damped value is truncated at `1e-3 * tol`; the
    /// divergence flag trips when the extrapolation residual exceeds `1e3 * tol`.
    pub tol: f64,
    pub terms_max: usize,
}

impl Default for YSumOptions {
    fn default() -> Self {
        YSumOptions {
            schedule: RegularizationSchedule::default(),
            route: YRoute::Auto,
            tol: 1e-7,
            terms_max: 10_000_000,
        }
    }
}

/// Regularized value of a `Y` sum.
#[derive(Debug, Clone, PartialEq)]
pub struct YSumResult {
    pub value: Complex64,
    /// `(eps, damped value)` for each offset of the schedule.
    pub per_offset: Vec<(f64, Complex64)>,
    /// Size of the last extrapolation correction.
    pub residual: f64,
    /// Route actually used.
    pub route: YRoute,
    pub terms_used: usize,
    /// Residual above `1e3 * tol`: the damped values do not settle.
    pub diverged: bool,
}

fn gen_kind(shape: &Shape, chi: Option<&DirichletCharacter>) -> GenFnKind {
    let tag = match (shape.gen, chi.is_some()) {
        (GenFnTag::Small, false) => GenFnTag::Small,
        (GenFnTag::Small, true) => GenFnTag::SmallChi,
        (_, false) => GenFnTag::Big,
        (_, true) => GenFnTag::BigChi,
    };
    GenFnKind::new(tag, chi.cloned()).expect("tag and character agree")
}

/// Exact `lambda_n = q^{-n}[n]` for rational `q = a/b`: `b (b^n - a^n) / (a^n (b - a))`.
struct Lambdas {
    a: BigInt,
    b: BigInt,
    an: BigInt,
    bn: BigInt,
    n: u64,
    limit: bool,
}

impl Lambdas {
    fn new(q: &QParam) -> Self {
        let (a, b, limit) = match q {
            QParam::RealUnit(r) => (r.numer().clone(), r.denom().clone(), false),
            _ => (BigInt::one(), BigInt::one(), true),
        };
        Lambdas { an: BigInt::one(), bn: BigInt::one(), a, b, n: 0, limit }
    }

    fn next(&mut self) -> Rational {
        self.n += 1;
        if self.limit {
            return int(self.n as i64);
        }
        self.an *= &self.a;
        self.bn *= &self.b;
        Rational::new(&self.b * (&self.bn - &self.an), &self.an * (&self.b - &self.a))
    }
}

/// `2i sum_n c_n q^{-n} e^{-lambda_n eps} L(lambda_n)` with `L` the closed-form
/// inner sum over `m`.
#[allow(clippy::too_many_arguments)]
fn literal_offset(
    shape: &Shape,
    gk: &GenFnKind,
    h: i64,
    k: i64,
    q: &QParam,
    eps: f64,
    tol: f64,
    terms_max: usize,
) -> Result<(Complex64, usize)> {
    let u = shape.unit_angle(h, k);
    let lmax = lattice_bound(shape, k);
    let lq = q.to_f64().unwrap().ln();
    let qf = lq.exp();
    let lam_f = |n: f64| if lq == 0.0 { n } else { (-n * lq).exp_m1() / (1.0 - qf) };
    let mut lams = Lambdas::new(q);
    let mut sum = Complex64::zero();
    let mut n = 1usize;
    loop {
        let lam = lams.next();
        let mag = (-(n as f64) * lq - to_f64(&lam) * eps).exp();
        let c = gk.coeff(n);
        if mag > 0.0 && c != Complex64::zero() {
            sum += c * mag * lattice_sine_sum(shape, &(&lam * &u), k);
        }
        n += 1;
        let next = (-(n as f64) * lq - lam_f(n as f64) * eps).exp();
        let ratio = (-lq - (-(n as f64 + 1.0) * lq).exp() * eps).exp();
        if ratio < 1.0 && mag * lmax <= tol && lmax * next / (1.0 - ratio) <= tol / 2.0 {
            return Ok((Complex64::new(0.0, 2.0) * sum, n - 1));
        }
        if n > terms_max {
            return Err(Error::NotConverged { terms: n, bound: f64::INFINITY, tol });
        }
    }
}

/// `G(t) = sum_n c_n e^{-n t}` at `q = 1`, with `c_n` periodic of period `pa`.
fn gen_at_one(coeffs: &[Complex64], t: Complex64) -> Complex64 {
    let pa = coeffs.len() as f64;
    let mut num = Complex64::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        num += c * (-(i as f64 + 1.0) * t).exp();
    }
    num / (1.0 - (-pa * t).exp())
}

/// Literal double sum at `q = 1`, outer over `m` by residue classes.
fn m_first_offset(shape: &Shape, gk: &GenFnKind, h: i64, k: i64, eps: f64, tol: f64) -> Result<(Complex64, usize)> {
    let sign_period: i64 = if gk.tag().alternating() { 2 } else { 1 };
    let pa = match gk.chi() {
        Some(chi) => sign_period.lcm(&(chi.modulus() as i64)),
        None => sign_period,
    };
    let coeffs: Vec<Complex64> = (1..=pa).map(|n| gk.coeff(n as usize)).collect();
    let u = shape.unit_angle(h, k);
    let dw: i64 = if shape.odd { 2 } else { 1 };
    // smallest P with P * dw * u even
    let v: Rational = &u * int(dw) / int(2);
    let p_m = {
        let d = v.denom().clone();
        let d: i64 = d.try_into().map_err(|_| Error::Domain("angle period too large".into()))?;
        d.lcm(&k)
    };
    let delta = (dw * p_m) as f64;
    let mut nvals: Vec<(i64, Complex64)> = Vec::new();
    for m in 1..=p_m {
        if shape.excluded(m, k) {
            continue;
        }
        let w = shape.weight(m);
        // reduce angle/pi into (-1, 1]
        let y = frac(&(&u * int(w) / int(2))) * int(2);
        let yf = to_f64(&y);
        let yf = if yf > 1.0 { yf - 2.0 } else { yf };
        let nv = if yf == 0.0 {
            Complex64::zero()
        } else {
            let th = PI * yf;
            gen_at_one(&coeffs, Complex64::new(eps, -th)) - gen_at_one(&coeffs, Complex64::new(eps, th))
        };
        nvals.push((w, nv));
    }
    let p = shape.power;
    let mut acc = Complex64::zero();
    let mut terms = 0;
    if p == 1 {
        let total: Complex64 = nvals.iter().map(|v| v.1).sum();
        let scale: f64 = nvals.iter().map(|v| v.1.norm()).sum::<f64>() + 1.0;
        if total.norm() > 1e-9 * scale {
            return Err(Error::Divergent(format!("outer sum over m diverges: period sum {}", total.norm())));
        }
        for &(w, nv) in &nvals {
            acc -= nv * digamma(w as f64 / delta, tol)?;
        }
        acc /= delta;
        terms = nvals.len();
    } else {
        let s = Complex64::new(p as f64, 0.0);
        for &(w, nv) in &nvals {
            let hz = hurwitz_zeta(s, w as f64 / delta, tol)?;
            acc += nv * hz.value;
            terms += hz.terms_used;
        }
        acc /= delta.powi(p as i32);
    }
    Ok((acc, terms))
}

fn is_trivial(chi: Option<&DirichletCharacter>) -> bool {
    chi.is_none_or(|c| c.modulus() == 1)
}

/// Regularized `Y` sum: each damped value on the schedule, extrapolated to
/// zero offset.
pub fn y_sum(
    kind: YKind,
    h: i64,
    k: i64,
    q: &QParam,
    chi: Option<&DirichletCharacter>,
    opts: &YSumOptions,
) -> Result<YSumResult> {
    check_pair(h, k)?;
    check_tol(opts.tol)?;
    q.require("y_sum", &[crate::exact::Regime::RealUnit, crate::exact::Regime::Limit1])?;
    let shape = match kind {
        YKind::HardyBerndt(SumVariant::Dedekind) => {
            return Err(Error::Domain("use YKind::Dedekind for the Dedekind-type sum".into()))
        }
        YKind::HardyBerndt(v) => Shape::hardy_berndt(v),
        YKind::Dedekind(p) => {
            if p % 2 == 0 {
                return Err(Error::Domain(format!("p must be odd, got {p}")));
            }
            if chi.is_some() {
                return Err(Error::Domain("the Dedekind-type sum takes no character".into()));
            }
            Shape::dedekind(p)
        }
    };
    let limit = *q == QParam::Limit1;
    let hb = matches!(kind, YKind::HardyBerndt(_));
    let route = match opts.route {
        YRoute::Auto if limit && hb && is_trivial(chi) => YRoute::TrigSeries,
        YRoute::Auto => YRoute::Literal,
        YRoute::TrigSeries if !(limit && hb && is_trivial(chi)) => {
            return Err(Error::Domain(
                "the trig-series route needs q = 1, a Hardy-Berndt variant and no character".into(),
            ))
        }
        YRoute::MFirst if !limit => return Err(Error::Regime { op: "m-first route", regime: q.regime().name() }),
        r => r,
    };
    let chi = if route == YRoute::TrigSeries { None } else { chi };
    let gk = gen_kind(&shape, chi);
    let per_tol = (opts.tol * 1e-3).max(1e-15);
    let mut per_offset = Vec::with_capacity(opts.schedule.offsets().len());
    let mut terms = 0;
    for &eps in opts.schedule.offsets() {
        let (v, t) = match route {
            YRoute::TrigSeries => damped_trig_series(&shape, h, k, eps, per_tol)?,
            YRoute::Literal => literal_offset(&shape, &gk, h, k, q, eps, per_tol, opts.terms_max)?,
            YRoute::MFirst => m_first_offset(&shape, &gk, h, k, eps, per_tol)?,
            YRoute::Auto => unreachable!(),
        };
        terms += t;
        per_offset.push((eps, v));
    }
    let values: Vec<Complex64> = per_offset.iter().map(|p| p.1).collect();
    let (value, residual) = opts.schedule.extrapolate(&values);
    let diverged = !(residual <= 1e3 * opts.tol);
    Ok(YSumResult { value, per_offset, residual, route, terms_used: terms, diverged })
}

/// The scaling constant between a `Y` sum and its q-sum: `4/(pi i)` for `S`,
/// `-2/(pi i)`, `-1/(2 pi i)`, `1/(pi i)`, `4/(pi i)`, `2/(pi i)` for
/// `s1..s5`, and `p!/(2 pi i)^p` for the Dedekind type.
pub fn sum_constant(kind: YKind) -> Complex64 {
    match kind {
        YKind::HardyBerndt(v) => Complex64::new(0.0, -Shape::hardy_berndt(v).c),
        YKind::Dedekind(p) => {
            let mut fact = 1.0;
            for i in 2..=p {
                fact *= i as f64;
            }
            fact / Complex64::new(0.0, 2.0 * PI).powu(p)
        }
    }
}

/// Parity-hypothesis handling for [`q_hardy_berndt`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityMode {
    Strict,
    /// Proceed and report `parity_holds = false`.
    Warn,
}

/// A q-sum: its constant times its regularized `Y` sum.
#[derive(Debug, Clone, PartialEq)]
pub struct QSumValue {
    pub value: Complex64,
    pub constant: Complex64,
    pub y: YSumResult,
    pub parity_holds: bool,
}

/// q-Hardy-Berndt sum `S(h,k;q) = (4/(pi i)) Y_0(h,k;q)` and its siblings
/// (twisted by `chi` when given).
pub fn q_hardy_berndt(
    variant: SumVariant,
    h: i64,
    k: i64,
    q: &QParam,
    chi: Option<&DirichletCharacter>,
    opts: &YSumOptions,
    mode: ParityMode,
) -> Result<QSumValue> {
    check_pair(h, k)?;
    if variant == SumVariant::Dedekind {
        return Err(Error::Domain("use q_dedekind_sum for the Dedekind-type sum".into()));
    }
    let pc = parity_condition(variant, h, k);
    if !pc.holds && mode == ParityMode::Strict {
        return Err(Error::Parity { variant: variant.name(), h, k, needs: pc.description });
    }
    let kind = YKind::HardyBerndt(variant);
    let y = y_sum(kind, h, k, q, chi, opts)?;
    let constant = sum_constant(kind);
    Ok(QSumValue { value: constant * y.value, constant, y, parity_holds: pc.holds })
}

/// q-Dedekind sum `S_p(h,k;q) = p!/(2 pi i)^p Y_p(h,k;q)` for odd `p`.
pub fn q_dedekind_sum(p: u32, h: i64, k: i64, q: &QParam, opts: &YSumOptions) -> Result<QSumValue> {
    if p == 0 || p.is_multiple_of(2) {
        return Err(Error::Domain(format!("p must be odd and positive, got {p}")));
    }
    let kind = YKind::Dedekind(p);
    let y = y_sum(kind, h, k, q, None, opts)?;
    let constant = sum_constant(kind);
    Ok(QSumValue { value: constant * y.value, constant, y, parity_holds: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::finite::{dedekind_sum, hardy_berndt, SumInput};

    fn opts(route: YRoute) -> YSumOptions {
        YSumOptions { route, ..YSumOptions::default() }
    }

    fn exact(v: SumVariant, h: i64, k: i64) -> f64 {
        to_f64(&hardy_berndt(&SumInput::new(v, h, k).unwrap()).unwrap())
    }

    #[test]
    fn trig_series_route_recovers_exact_sums() {
        for v in SumVariant::HARDY_BERNDT {
            for (h, k) in [(1, 2), (2, 3), (1, 3), (3, 4), (1, 5), (2, 5), (3, 8)] {
                if !parity_condition(v, h, k).holds {
                    continue;
                }
                let r =
                    q_hardy_berndt(v, h, k, &QParam::Limit1, None, &opts(YRoute::Auto), ParityMode::Strict).unwrap();
                assert_eq!(r.y.route, YRoute::TrigSeries);
                assert!(!r.y.diverged);
                assert!((r.value.re - exact(v, h, k)).abs() < 1e-6, "{} {h} {k}: {}", v.name(), r.value);
                assert!(r.value.im.abs() < 1e-12);
            }
        }
    }

    #[test]
    fn n_first_and_m_first_agree() {
        for v in SumVariant::HARDY_BERNDT {
            for (h, k) in [(1, 2), (2, 3), (1, 5), (3, 4)] {
                if !parity_condition(v, h, k).holds {
                    continue;
                }
                let l = y_sum(YKind::HardyBerndt(v), h, k, &QParam::Limit1, None, &opts(YRoute::Literal)).unwrap();
                let m = y_sum(YKind::HardyBerndt(v), h, k, &QParam::Limit1, None, &opts(YRoute::MFirst)).unwrap();
                assert!((l.value - m.value).norm() < 1e-8, "{} {h} {k}", v.name());
            }
        }
        for p in [1, 3] {
            let l = q_dedekind_sum(p, 2, 5, &QParam::Limit1, &opts(YRoute::Literal)).unwrap();
            let m = q_dedekind_sum(p, 2, 5, &QParam::Limit1, &opts(YRoute::MFirst)).unwrap();
            assert!((l.value - m.value).norm() < 1e-8);
        }
    }

    #[test]
    fn literal_dedekind_p1_is_dedekind_sum() {
        for (h, k) in [(1, 3), (3, 7), (2, 9)] {
            let r = q_dedekind_sum(1, h, k, &QParam::Limit1, &YSumOptions::default()).unwrap();
            let s = to_f64(&dedekind_sum(h, k).unwrap());
            assert!((r.value.re - s).abs() < 1e-6, "{h} {k}: {} vs {s}", r.value);
        }
    }

    #[test]
    fn literal_s_at_one_is_minus_doubled_modulus_sum() {
        // Summing over n first turns tan(theta) into tan(theta/2).
        for (h, k) in [(1, 2), (3, 4), (1, 4)] {
            let r =
                q_hardy_berndt(SumVariant::S, h, k, &QParam::Limit1, None, &opts(YRoute::Literal), ParityMode::Strict)
                    .unwrap();
            assert!((r.value.re + exact(SumVariant::S, h, 2 * k)).abs() < 1e-4, "{h} {k}: {}", r.value);
        }
    }

    #[test]
    fn real_q_damped_sums_do_not_settle() {
        // With lambda_n ~ q^{-n}/(1-q) the damped sums carry a log-periodic
        // term of size ~ 1/eps (small amplitude, from complex Mellin poles).
        let q = QParam::real(rational(1, 2)).unwrap();
        let r = y_sum(YKind::HardyBerndt(SumVariant::S), 1, 2, &q, None, &YSumOptions::default()).unwrap();
        assert_eq!(r.route, YRoute::Literal);
        assert!(r.diverged);
        let v: Vec<f64> = r.per_offset.iter().map(|p| p.1.im).collect();
        let spread = v.iter().cloned().fold(f64::MIN, f64::max) - v.iter().cloned().fold(f64::MAX, f64::min);
        assert!(spread > 0.5, "{v:?}");
        let d = q_dedekind_sum(3, 1, 3, &q, &YSumOptions::default()).unwrap();
        assert!(d.y.diverged);
    }

    #[test]
    fn rejections() {
        let o = YSumOptions::default();
        assert!(matches!(q_dedekind_sum(2, 1, 3, &QParam::Limit1, &o), Err(Error::Domain(_))));
        let z = QParam::complex(Complex64::new(0.3, 0.2)).unwrap();
        assert!(matches!(q_dedekind_sum(1, 1, 3, &z, &o), Err(Error::Regime { .. })));
        assert!(matches!(
            q_hardy_berndt(SumVariant::S, 1, 3, &QParam::Limit1, None, &o, ParityMode::Strict),
            Err(Error::Parity { .. })
        ));
        assert!(matches!(
            q_hardy_berndt(SumVariant::S, 1, 3, &QParam::Limit1, None, &o, ParityMode::Warn),
            Err(Error::Pole(_))
        ));
        let w = q_hardy_berndt(SumVariant::S2, 2, 3, &QParam::Limit1, None, &o, ParityMode::Warn).unwrap();
        assert!(!w.parity_holds);
        assert!(matches!(q_dedekind_sum(1, 2, 4, &QParam::Limit1, &o), Err(Error::NotCoprime { .. })));
        let q = QParam::real(rational(1, 2)).unwrap();
        assert!(q_hardy_berndt(SumVariant::S, 1, 2, &q, None, &opts(YRoute::TrigSeries), ParityMode::Strict).is_err());
        assert!(q_hardy_berndt(SumVariant::S, 1, 2, &q, None, &opts(YRoute::MFirst), ParityMode::Strict).is_err());
    }

    #[test]
    fn sum_constants() {
        assert!((sum_constant(YKind::HardyBerndt(SumVariant::S)) - Complex64::new(0.0, -4.0 / PI)).norm() < 1e-15);
        let d3 = sum_constant(YKind::Dedekind(3));
        assert!((d3 - Complex64::new(0.0, 6.0 / (2.0 * PI).powi(3))).norm() < 1e-15);
    }
}
