//! Conditionally convergent tangent/cotangent series and their closed forms
//! by residue classes and the digamma function.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;

use super::genfn::GenFnTag;
use crate::error::{Error, Result};
use crate::exact::{frac, int, rational, to_f64, Rational};
use crate::finite::{check_pair, hardy_berndt, parity_condition, SumInput, SumVariant};
use crate::outcome::{param, VerificationOutcome};
use crate::zeta::{digamma, lerch_phi};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Trig {
    Tan,
    Cot,
}

/// Which weights are dropped from a sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Exclusion {
    None,
    /// Odd weight `w` with `w = 0 (mod k)`.
    WeightMultipleOfK,
    /// Index `m` with `2m = 0 (mod k)`.
    TwiceIndexMultipleOfK,
}

/// Structure shared by a Hardy-Berndt variant's trigonometric series and its
/// generating-function sum `Y_j`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Shape {
    pub gen: GenFnTag,
    /// Weights `2m - 1` when true, `m` otherwise.
    pub odd: bool,
    pub exclusion: Exclusion,
    /// Real constant `c` with `value = c * sum trig(angle_m)/w_m`.
    pub c: f64,
    pub trig: Trig,
    /// Angle at weight `w` is `pi * w * h * unit / k`.
    pub unit: (i64, i64),
    /// Power of the weight in the denominator.
    pub power: u32,
}

impl Shape {
    pub(crate) fn hardy_berndt(v: SumVariant) -> Shape {
        use Exclusion::*;
        let (gen, odd, exclusion, c, trig) = match v {
            SumVariant::S => (GenFnTag::Big, true, None, 4.0 / PI, Trig::Tan),
            SumVariant::S1 => (GenFnTag::Small, true, WeightMultipleOfK, -2.0 / PI, Trig::Cot),
            SumVariant::S2 => (GenFnTag::Big, false, TwiceIndexMultipleOfK, -1.0 / (2.0 * PI), Trig::Tan),
            SumVariant::S3 => (GenFnTag::Big, false, None, 1.0 / PI, Trig::Tan),
            SumVariant::S4 => (GenFnTag::Small, true, None, 4.0 / PI, Trig::Cot),
            SumVariant::S5 => (GenFnTag::Big, true, WeightMultipleOfK, 2.0 / PI, Trig::Tan),
            SumVariant::Dedekind => unreachable!("Dedekind sums use Shape::dedekind"),
        };
        let unit = if odd { (1, 2) } else { (1, 1) };
        Shape { gen, odd, exclusion, c, trig, unit, power: 1 }
    }

    pub(crate) fn dedekind(p: u32) -> Shape {
        Shape {
            gen: GenFnTag::Small,
            odd: false,
            exclusion: Exclusion::None,
            c: f64::NAN,
            trig: Trig::Cot,
            unit: (2, 1),
            power: p,
        }
    }

    pub(crate) fn weight(&self, m: i64) -> i64 {
        if self.odd {
            2 * m - 1
        } else {
            m
        }
    }

    pub(crate) fn excluded(&self, m: i64, k: i64) -> bool {
        match self.exclusion {
            Exclusion::None => false,
            Exclusion::WeightMultipleOfK => self.weight(m) % k == 0,
            Exclusion::TwiceIndexMultipleOfK => (2 * m) % k == 0,
        }
    }

    /// `angle/pi` at unit weight: `h * unit / k`.
    pub(crate) fn unit_angle(&self, h: i64, k: i64) -> Rational {
        rational(h * self.unit.0, self.unit.1 * k)
    }

    /// Weight step per period of `k` indices.
    pub(crate) fn period_step(&self, k: i64) -> i64 {
        if self.odd {
            2 * k
        } else {
            k
        }
    }
}

/// `tan(pi y)` or `cot(pi y)`, `None` at a pole; `y` is reduced exactly.
pub(crate) fn trig_at(trig: Trig, y: &Rational) -> Option<f64> {
    let r = frac(y);
    let half = rational(1, 2);
    let x = PI * crate::exact::to_f64(&r);
    match trig {
        Trig::Tan => (r != half).then(|| if r.is_zero() { 0.0 } else { x.tan() }),
        Trig::Cot => (!r.is_zero()).then(|| if r == half { 0.0 } else { 1.0 / x.tan() }),
    }
}

/// One period of `trig(angle_m)` over non-excluded indices `m = 1..=k`:
/// `(weight, trig value)` pairs.
pub(crate) fn period_values(shape: &Shape, h: i64, k: i64) -> Result<Vec<(i64, f64)>> {
    let u = shape.unit_angle(h, k);
    let mut out = Vec::new();
    for m in 1..=k {
        if shape.excluded(m, k) {
            continue;
        }
        let w = shape.weight(m);
        let y = &u * int(w);
        match trig_at(shape.trig, &y) {
            Some(t) => out.push((w, t)),
            None => {
                return Err(Error::Pole(format!(
                    "{} of pi*{} is infinite at residue m = {m} (h = {h}, k = {k})",
                    if shape.trig == Trig::Tan { "tan" } else { "cot" },
                    y
                )))
            }
        }
    }
    Ok(out)
}

fn check_period_sum(vals: &[(i64, f64)]) -> Result<()> {
    let total: f64 = vals.iter().map(|v| v.1).sum();
    let scale: f64 = vals.iter().map(|v| v.1.abs()).sum::<f64>() + 1.0;
    if total.abs() > 1e-9 * scale {
        return Err(Error::Divergent(format!("period sum of the trigonometric factors is {total:e}, not 0")));
    }
    Ok(())
}

/// The Hardy-Berndt trigonometric series, e.g. `(4/pi) sum tan(pi h (2n-1)/2k)/(2n-1)`,
/// in closed form: grouping by residue, the series equals
/// `c/D sum_r trig_r (-psi(w_r/D))` with `D` the weight step of one period.
pub fn classical_trig_series(variant: SumVariant, h: i64, k: i64, tol: f64) -> Result<f64> {
    check_pair(h, k)?;
    if variant == SumVariant::Dedekind {
        return Err(Error::Domain("the Dedekind sum has no tangent series here".into()));
    }
    let pc = parity_condition(variant, h, k);
    if !pc.holds {
        return Err(Error::Parity { variant: variant.name(), h, k, needs: pc.description });
    }
    let shape = Shape::hardy_berndt(variant);
    let vals = period_values(&shape, h, k)?;
    check_period_sum(&vals)?;
    let d = shape.period_step(k) as f64;
    let mut acc = 0.0;
    for &(w, t) in &vals {
        acc -= t * digamma(w as f64 / d, tol / (vals.len() as f64 + 1.0))?;
    }
    Ok(shape.c * acc / d)
}

/// Closed-form trigonometric series against the exact finite sum.
pub fn verify_trig_series(variant: SumVariant, h: i64, k: i64, tol: f64) -> Result<VerificationOutcome> {
    let series = classical_trig_series(variant, h, k, (tol * 1e-3).max(1e-15))?;
    let exact = hardy_berndt(&SumInput::new(variant, h, k)?)?;
    Ok(VerificationOutcome::new(
        format!("{} trig series = finite sum", variant.name()),
        vec![param("variant", variant.name()), param("h", h), param("k", k)],
        (Complex64::new(series, 0.0), tol * 1e-3),
        (Complex64::new(to_f64(&exact), 0.0), 0.0),
        tol,
        "lhs: residue classes and digamma; rhs: exact rational sum",
    ))
}

/// `i sum_m trig(angle_m) e^{-eps w_m}/w_m` over non-excluded `m`, by residue
/// classes: `e^{-eps w_r}/D * Phi(e^{-eps D}, 1, w_r/D)` per class.
pub(crate) fn damped_trig_series(shape: &Shape, h: i64, k: i64, eps: f64, tol: f64) -> Result<(Complex64, usize)> {
    let vals = period_values(shape, h, k)?;
    check_period_sum(&vals)?;
    let d = shape.period_step(k) as f64;
    let z = Complex64::new((-eps * d).exp(), 0.0);
    let mut acc = 0.0;
    let mut terms = 0;
    for &(w, t) in &vals {
        if t == 0.0 {
            continue;
        }
        let p = lerch_phi(z, Complex64::new(1.0, 0.0), w as f64 / d, tol / t.abs().max(1.0))?;
        acc += t * (-eps * w as f64).exp() / d * p.value.re;
        terms += p.terms_used;
    }
    Ok((Complex64::new(0.0, acc), terms))
}

/// Closed form of `sum_{m} sin(angle_m y pi)/w_m^p` over the variant's weights,
/// as a function of the exact unit-angle multiple `y` (`angle = pi * w * y`).
pub(crate) fn lattice_sine_sum(shape: &Shape, y: &Rational, k: i64) -> f64 {
    let sgn_sin = |y: &Rational| -> f64 {
        let r = y - int(2) * Rational::from_integer(crate::exact::floor(&(y / int(2))));
        if r.is_zero() || r == int(1) {
            0.0
        } else if r < int(1) {
            1.0
        } else {
            -1.0
        }
    };
    let saw = |y: &Rational| crate::exact::to_f64(&crate::exact::sawtooth(y));
    if shape.power > 1 || shape.unit == (2, 1) {
        // sum sin(2 pi m z)/m^p with z = y/2
        let z = y / int(2);
        let fz = frac(&z);
        if fz.is_zero() {
            return 0.0;
        }
        let p = shape.power as usize;
        let mut fact = 1.0;
        for i in 2..=p {
            fact *= i as f64;
        }
        let sign = if p.div_ceil(2).is_multiple_of(2) { 1.0 } else { -1.0 };
        return sign * (2.0 * PI).powi(p as i32) * crate::zeta::bernoulli_poly(p, crate::exact::to_f64(&fz))
            / (2.0 * fact);
    }
    if shape.odd {
        let mut v = PI / 4.0 * sgn_sin(y);
        if shape.exclusion == Exclusion::WeightMultipleOfK && k % 2 == 1 {
            v -= PI / 4.0 * sgn_sin(&(y * int(k))) / k as f64;
        }
        v
    } else {
        let mut v = -PI * saw(&(y / int(2)));
        if shape.exclusion == Exclusion::TwiceIndexMultipleOfK {
            let kp = if k % 2 == 0 { k / 2 } else { k };
            v -= -PI * saw(&(y * int(kp) / int(2))) / kp as f64;
        }
        v
    }
}

/// Uniform bound on [`lattice_sine_sum`].
pub(crate) fn lattice_bound(shape: &Shape, k: i64) -> f64 {
    if shape.power > 1 {
        1.21
    } else if shape.odd {
        PI / 4.0 * (1.0 + 1.0 / k as f64)
    } else {
        PI / 2.0 * (1.0 + 1.0 / k as f64)
    }
}
