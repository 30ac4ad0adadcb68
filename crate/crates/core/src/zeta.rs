//! Riemann, odd-denominator, Genocchi and Hurwitz zeta functions, the
//! Hurwitz-Lerch transcendent and the digamma function.

use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::dirichlet::DirichletCharacter;
use crate::error::{check_tol, Error, Result};
use crate::exact::{int, to_f64, Rational, SeriesValue};
use crate::gamma::{gamma, gamma_real};
use crate::numbers::{number_table, NumberKind};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const EM_ORDERS: usize = 60;

/// `B_{2j}/(2j)!` for `j = 0..=EM_ORDERS`.
fn scaled_even_bernoulli() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = number_table(NumberKind::Bernoulli, 2 * EM_ORDERS).entries;
        let mut fact = Rational::one();
        let mut out = Vec::with_capacity(EM_ORDERS + 1);
        for (n, bn) in b.iter().enumerate() {
            if n > 0 {
                fact *= int(n as i64);
            }
            if n % 2 == 0 {
                out.push(to_f64(&(bn / &fact)));
            }
        }
        out
    })
}

/// `x^{-s}` for real `x > 0`.
pub(crate) fn real_pow_neg(x: f64, s: Complex64) -> Complex64 {
    (-s * x.ln()).exp()
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn is_nonpositive_integer(s: Complex64) -> Option<u64> {
    (s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()).then(|| (-s.re) as u64)
}

/// `zeta(-m) = (-1)^m B_{m+1}/(m+1)`, exactly.
pub fn zeta_nonpositive(m: u64) -> Rational {
    let b = number_table(NumberKind::Bernoulli, m as usize + 1).entries;
    let v = &b[m as usize + 1] / int(m as i64 + 1);
    if m.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Alternating zeta `eta(s) = sum_{n>=1} (-1)^{n-1} n^{-s}` for `Re s > 0`,
/// by Cohen-Rodriguez Villegas-Zagier acceleration.
///
/// With `(n+1)^{-s} = int_0^1 x^n dmu` and total variation
/// `Gamma(Re s)/|Gamma(s)|`, the error after `N` terms is at most
/// `2 Gamma(Re s)/|Gamma(s)| (3+sqrt 8)^{-N}`.
pub fn dirichlet_eta(s: Complex64, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if s.re <= 0.0 {
        return Err(Error::Domain(format!("eta acceleration needs Re s > 0, got {s}")));
    }
    let variation = gamma_real(s.re) / gamma(s).norm();
    let rate = (3.0 + 8f64.sqrt()).ln();
    let n = (((2.0 * variation / (tol / 2.0)).ln() / rate).ceil().max(1.0)) as usize;
    if n > 400 {
        return Err(Error::NotConverged { terms: n, bound: f64::INFINITY, tol });
    }
    let mut d = (3.0 + 8f64.sqrt()).powi(n as i32);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0;
    let mut cc = -d;
    let mut sum = Complex64::zero();
    let mut abs = 0.0;
    for k in 0..n {
        cc = b - cc;
        let t = cc * real_pow_neg((k + 1) as f64, s);
        sum += t;
        abs += t.norm();
        let kf = k as f64;
        let nf = n as f64;
        b = (kf + nf) * (kf - nf) * b / ((kf + 0.5) * (kf + 1.0));
    }
    let value = sum / d;
    let bound = 2.0 * variation * (-rate * n as f64).exp() + 8.0 * f64::EPSILON * abs / d;
    Ok(SeriesValue::new(value, bound, n))
}

/// Riemann zeta. Exact Bernoulli route at non-positive integers, the
/// alternating series for `Re s > 0`, Euler-Maclaurin elsewhere.
pub fn riemann_zeta(s: Complex64, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if s == c(1.0) {
        return Err(Error::Pole("zeta has a pole at s = 1".into()));
    }
    if let Some(m) = is_nonpositive_integer(s) {
        return Ok(SeriesValue::new(c(to_f64(&zeta_nonpositive(m))), 0.0, 1));
    }
    let factor = c(1.0) - (c(2f64.ln()) * (c(1.0) - s)).exp();
    if s.re > 0.0 && factor.norm() > 1e-3 {
        let eta = dirichlet_eta(s, tol * factor.norm())?;
        return Ok(SeriesValue::new(eta.value / factor, eta.tail_bound / factor.norm(), eta.terms_used));
    }
    hurwitz_zeta(s, 1.0, tol)
}

/// How [`zeta_star`] is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaStarRoute {
    /// `sum_{m<=M} (2m-1)^{-s} + 2^{-s} zeta(s, M + 1/2)`, `Re s > 1`.
    Direct,
    /// `(1 - 2^{-s}) zeta(s)`.
    Identity,
}

/// `zeta*(s) = sum_{m>=1} (2m-1)^{-s}`.
pub fn zeta_star(s: Complex64, tol: f64, route: ZetaStarRoute) -> Result<SeriesValue> {
    check_tol(tol)?;
    if s == c(1.0) {
        return Err(Error::Pole("zeta* has a pole at s = 1".into()));
    }
    match route {
        ZetaStarRoute::Identity => {
            let f = c(1.0) - real_pow_neg(2.0, s);
            let z = riemann_zeta(s, tol / f.norm().max(1.0))?;
            Ok(SeriesValue::new(f * z.value, f.norm() * z.tail_bound, z.terms_used))
        }
        ZetaStarRoute::Direct => {
            if s.re <= 1.0 {
                return Err(Error::Domain(format!("direct zeta* needs Re s > 1, got {s}")));
            }
            let m = 64usize;
            let head: Complex64 = (1..=m).map(|j| real_pow_neg((2 * j - 1) as f64, s)).sum();
            let h = hurwitz_zeta(s, m as f64 + 0.5, tol / 2.0)?;
            let p = real_pow_neg(2.0, s);
            Ok(SeriesValue::new(head + p * h.value, p.norm() * h.tail_bound + 1e-16 * m as f64, m + h.terms_used))
        }
    }
}

/// Classical Genocchi zeta `zeta_G(s) = 2 sum_{n>=1} (-1)^n n^{-s} = -2 eta(s)`.
pub fn genocchi_zeta_classical(s: Complex64, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if let Some(m) = is_nonpositive_integer(s) {
        return Ok(SeriesValue::new(c(to_f64(&genocchi_zeta_nonpositive(m + 1))), 0.0, 1));
    }
    if s.re > 0.0 {
        let e = dirichlet_eta(s, tol / 2.0)?;
        return Ok(SeriesValue::new(-2.0 * e.value, 2.0 * e.tail_bound, e.terms_used));
    }
    let f = c(1.0) - (c(2f64.ln()) * (c(1.0) - s)).exp();
    let z = riemann_zeta(s, tol / (2.0 * f.norm()).max(1.0))?;
    Ok(SeriesValue::new(-2.0 * f * z.value, 2.0 * f.norm() * z.tail_bound, z.terms_used))
}

/// Exact `zeta_G(1 - n) = -2 (1 - 2^n) zeta(1 - n)` for `n >= 1`.
pub fn genocchi_zeta_nonpositive(n: u64) -> Rational {
    assert!(n >= 1, "n must be positive");
    let f = Rational::one() - Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(2), n as usize));
    int(-2) * f * zeta_nonpositive(n - 1)
}

/// Hurwitz zeta `zeta(s, a) = sum_{n>=0} (n+a)^{-s}` for `a > 0`, `s != 1`,
/// by Euler-Maclaurin summation (which also gives the continuation).
///
/// The remainder after the `B_{2J}` correction is at most
/// `2 |B_{2J}|/(2J)! |(s)_{2J}| (N+a)^{1-Re s-2J} / (Re s + 2J - 1)`.
pub fn hurwitz_zeta(s: Complex64, a: f64, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    if s == c(1.0) {
        return Err(Error::Pole("Hurwitz zeta has a pole at s = 1".into()));
    }
    let b = scaled_even_bernoulli();
    let sig = s.re;
    // Smallest cutoff first: for Re s < 0 the partial sum cancels against
    // corrections of size (N+a)^{1-Re s}, so large N costs precision.
    let mut n = ((s.norm() / std::f64::consts::TAU).ceil() as usize).max(1);
    for _ in 0..24 {
        let x = n as f64 + a;
        let mut poch = s; // (s)_{2j-1}
        let mut chosen = None;
        for j in 1..=EM_ORDERS {
            let poch2 = poch * (s + (2 * j - 1) as f64); // (s)_{2j}
            let den = sig + (2 * j) as f64 - 1.0;
            if den > 0.0 {
                let bound = 2.0 * b[j].abs() * poch2.norm() * x.powf(1.0 - sig - (2 * j) as f64) / den;
                if bound <= tol / 2.0 {
                    chosen = Some((j, bound));
                    break;
                }
            }
            poch = poch2 * (s + (2 * j) as f64);
        }
        if let Some((jmax, bound)) = chosen {
            let mut sum = Complex64::zero();
            let mut abs = 0.0;
            for k in 0..n {
                let t = real_pow_neg(k as f64 + a, s);
                sum += t;
                abs += t.norm();
            }
            let xs = real_pow_neg(x, s);
            let head = xs * x / (s - 1.0) + xs / 2.0;
            sum += head;
            abs += head.norm();
            let mut poch = s;
            let mut xp = xs / x;
            for j in 1..=jmax {
                let t = b[j] * poch * xp;
                sum += t;
                abs += t.norm();
                poch = poch * (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
                xp /= x * x;
            }
            let round = 4.0 * f64::EPSILON * (abs + sum.norm());
            return Ok(SeriesValue::new(sum, bound + round, n + jmax));
        }
        n *= 2;
    }
    Err(Error::NotConverged { terms: n, bound: f64::INFINITY, tol })
}

/// `sum_{n>=1} c_n n^{-s}` for coefficients periodic with period `L = coeffs.len()`,
/// `coeffs[a-1] = c_a`, through `L^{-s} sum_a c_a zeta(s, a/L)`.
///
/// Needs `Re s > 1` unless the coefficients sum to zero over a period.
pub fn periodic_dirichlet_series(coeffs: &[Complex64], s: Complex64, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    let l = coeffs.len();
    if l == 0 {
        return Err(Error::Domain("empty coefficient period".into()));
    }
    let total: Complex64 = coeffs.iter().sum();
    if s.re <= 1.0 && total.norm() > 1e-12 {
        return Err(Error::Domain(format!("series diverges at s = {s}")));
    }
    let ls = real_pow_neg(l as f64, s);
    let per = tol / (l as f64 * ls.norm().max(1e-300));
    let mut sum = Complex64::zero();
    let mut bound = 0.0;
    let mut terms = 0;
    for (i, &ca) in coeffs.iter().enumerate() {
        if ca == Complex64::zero() {
            continue;
        }
        let h = hurwitz_zeta(s, (i + 1) as f64 / l as f64, per.min(1.0))?;
        sum += ca * h.value;
        bound += ca.norm() * h.tail_bound;
        terms += h.terms_used;
    }
    Ok(SeriesValue::new(ls * sum, ls.norm() * bound, terms))
}

/// Classical Genocchi-type l-function `2 sum_{n>=1} (-1)^n chi(n) n^{-s}`.
pub fn genocchi_l_classical(s: Complex64, chi: &DirichletCharacter, tol: f64) -> Result<SeriesValue> {
    let f = chi.modulus() as usize;
    let l = if f.is_multiple_of(2) { f } else { 2 * f };
    let coeffs: Vec<Complex64> =
        (1..=l).map(|a| if a % 2 == 0 { chi.eval(a as i64) } else { -chi.eval(a as i64) } * 2.0).collect();
    periodic_dirichlet_series(&coeffs, s, tol)
}

/// Hurwitz-Lerch transcendent `Phi(z, s, a) = sum_{m>=0} z^m (m+a)^{-s}`.
///
/// Geometric summation for `|z| < 1`; `z = 1` and `z = -1` reduce to Hurwitz
/// zeta; other points of the unit circle need `Re s > 1`.
pub fn lerch_phi(z: Complex64, s: Complex64, a: f64, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::Domain(format!("Lerch Phi needs a > 0, got {a}")));
    }
    let r = z.norm();
    if r > 1.0 + 1e-15 {
        return Err(Error::Domain(format!("Lerch Phi needs |z| <= 1, got |z| = {r}")));
    }
    if z == c(1.0) {
        if s.re <= 1.0 {
            return Err(Error::Domain(format!("Phi(1, s, a) needs Re s > 1, got {s}")));
        }
        return hurwitz_zeta(s, a, tol);
    }
    if z == c(-1.0) {
        if s == c(1.0) {
            let d = (digamma((a + 1.0) / 2.0, tol)? - digamma(a / 2.0, tol)?) / 2.0;
            return Ok(SeriesValue::new(c(d), tol, 1));
        }
        let h1 = hurwitz_zeta(s, a / 2.0, tol)?;
        let h2 = hurwitz_zeta(s, (a + 1.0) / 2.0, tol)?;
        let p = real_pow_neg(2.0, s);
        return Ok(SeriesValue::new(
            p * (h1.value - h2.value),
            p.norm() * (h1.tail_bound + h2.tail_bound),
            h1.terms_used + h2.terms_used,
        ));
    }
    if r < 1.0 {
        return geometric_lerch(z, s, a, tol);
    }
    if s.re <= 1.0 {
        return Err(Error::Domain(format!("Phi on |z| = 1 needs Re s > 1, got {s}")));
    }
    // Unimodular z: plain summation with the integral tail bound.
    let sig = s.re;
    let mut sum = Complex64::zero();
    let mut zm = c(1.0);
    let mut m = 0usize;
    loop {
        sum += zm * real_pow_neg(m as f64 + a, s);
        zm *= z;
        m += 1;
        let bound = (m as f64 + a - 1.0).max(a).powf(1.0 - sig) / (sig - 1.0);
        if bound <= tol {
            return Ok(SeriesValue::new(sum, bound + 1e-16 * m as f64, m));
        }
        if m > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: m, bound, tol });
        }
    }
}

fn geometric_lerch(z: Complex64, s: Complex64, a: f64, tol: f64) -> Result<SeriesValue> {
    let r = z.norm();
    let sig = s.re;
    let mut sum = Complex64::zero();
    let mut abs = 0.0;
    let mut zm = c(1.0);
    let mut m = 0usize;
    loop {
        let t = zm * real_pow_neg(m as f64 + a, s);
        sum += t;
        abs += t.norm();
        zm *= z;
        m += 1;
        // tail from index m: |z|^m (m+a)^{-sig} / (1 - ratio)
        let x = m as f64 + a;
        let ratio = r * if sig < 0.0 { ((x + 1.0) / x).powf(-sig) } else { 1.0 };
        if ratio < 1.0 {
            let bound = zm.norm() * x.powf(-sig) / (1.0 - ratio);
            if bound <= tol {
                return Ok(SeriesValue::new(sum, bound + 4.0 * f64::EPSILON * abs, m));
            }
        }
        if zm.norm() == 0.0 {
            return Ok(SeriesValue::new(sum, 4.0 * f64::EPSILON * abs, m));
        }
        if m > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: m, bound: f64::INFINITY, tol });
        }
    }
}

/// `sum_{m>=1} z^m / (2m-1)^s`, summed term by term (`z = 1` goes through
/// the direct [`zeta_star`] route).
pub fn odd_power_sum(z: Complex64, s: Complex64, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if z == c(1.0) {
        return zeta_star(s, tol, ZetaStarRoute::Direct);
    }
    let r = z.norm();
    if r > 1.0 + 1e-15 || (r >= 1.0 && s.re <= 1.0) {
        return Err(Error::Domain(format!("odd power sum diverges at z = {z}, s = {s}")));
    }
    let sig = s.re;
    let mut sum = Complex64::zero();
    let mut abs = 0.0;
    let mut zm = z;
    let mut m = 1usize;
    loop {
        let t = zm * real_pow_neg((2 * m - 1) as f64, s);
        sum += t;
        abs += t.norm();
        zm *= z;
        m += 1;
        let x = (2 * m - 1) as f64;
        let bound = if r < 1.0 {
            let ratio = r * if sig < 0.0 { ((x + 2.0) / x).powf(-sig) } else { 1.0 };
            if ratio < 1.0 {
                zm.norm() * x.powf(-sig) / (1.0 - ratio)
            } else {
                f64::INFINITY
            }
        } else {
            (x - 2.0).powf(1.0 - sig) / (2.0 * (sig - 1.0))
        };
        if bound <= tol {
            return Ok(SeriesValue::new(sum, bound + 4.0 * f64::EPSILON * abs, m - 1));
        }
        if m > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: m, bound, tol });
        }
    }
}

/// The same sum split into `b` residue classes:
/// `(2b)^{-s} sum_{j=1}^{b} z^j Phi(z^b, s, (2j-1)/(2b))`.
pub fn odd_power_sum_decomposed(z: Complex64, s: Complex64, b: u32, tol: f64) -> Result<SeriesValue> {
    check_tol(tol)?;
    if b == 0 {
        return Err(Error::Domain("b must be positive".into()));
    }
    let zb = z.powu(b);
    let pref = real_pow_neg(2.0 * b as f64, s);
    let per = tol / (b as f64 * pref.norm().max(1e-300));
    let mut sum = Complex64::zero();
    let mut bound = 0.0;
    let mut terms = 0;
    let mut zj = z;
    for j in 1..=b {
        let p = lerch_phi(zb, s, (2 * j - 1) as f64 / (2 * b) as f64, per)?;
        sum += zj * p.value;
        bound += zj.norm() * p.tail_bound;
        terms += p.terms_used;
        zj *= z;
    }
    Ok(SeriesValue::new(pref * sum, pref.norm() * bound, terms))
}

/// Digamma `psi(x)` for `x > 0`: upward recurrence then the asymptotic series,
/// whose error is below the first omitted term.
pub fn digamma(x: f64, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::Domain(format!("digamma needs x > 0, got {x}")));
    }
    let b = scaled_even_bernoulli();
    let mut acc = 0.0;
    let mut y = x;
    while y < 12.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    // psi(y) ~ ln y - 1/(2y) - sum_k B_{2k}/(2k y^{2k})
    let mut v = y.ln() - 0.5 / y;
    let y2 = y * y;
    let mut yp = y2;
    let mut fact = 1.0; // (2k-1)!
    for k in 1..=EM_ORDERS {
        let b2k = b[k] * fact; // B_{2k}/(2k)
        let t = b2k / yp;
        if t.abs() < (tol / 4.0).min(1e-17 * v.abs().max(1.0)) {
            break;
        }
        v -= t;
        yp *= y2;
        fact *= ((2 * k) * (2 * k + 1)) as f64;
    }
    Ok(acc + v)
}

/// Bernoulli polynomial `B_p(y)`.
pub fn bernoulli_poly(p: usize, y: f64) -> f64 {
    let b = number_table(NumberKind::Bernoulli, p).entries;
    let rows = crate::numbers::binomial_rows(p);
    let mut acc = 0.0;
    for (k, bk) in b.iter().enumerate() {
        let coef = to_f64(&(Rational::from_integer(rows[p][k].clone()) * bk));
        acc += coef * y.powi((p - k) as i32);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    /// Brute-force partial sums with an integral tail correction.
    fn brute_zeta(s: f64, a: f64) -> f64 {
        let n = 200_000;
        let head: f64 = (0..n).map(|k| (k as f64 + a).powf(-s)).sum();
        head + (n as f64 + a).powf(1.0 - s) / (s - 1.0) + 0.5 * (n as f64 + a).powf(-s)
    }

    #[test]
    fn riemann_known_values() {
        let z2 = riemann_zeta(c(2.0), 1e-12).unwrap();
        assert!(close(z2.value, c(PI * PI / 6.0), 1e-10));
        assert!(z2.tail_bound <= 1e-12);
        assert!(close(riemann_zeta(c(4.0), 1e-12).unwrap().value, c(PI.powi(4) / 90.0), 1e-10));
        assert_eq!(riemann_zeta(c(-1.0), 1e-12).unwrap().value, c(-1.0 / 12.0));
        assert_eq!(zeta_nonpositive(1), crate::exact::rational(-1, 12));
        assert_eq!(zeta_nonpositive(0), crate::exact::rational(-1, 2));
        assert!(riemann_zeta(c(1.0), 1e-12).is_err());
        // continuation route against the exact values
        let z = riemann_zeta(Complex64::new(-2.5, 0.0), 1e-12).unwrap();
        let h = hurwitz_zeta(Complex64::new(-2.5, 0.0), 1.0, 1e-12).unwrap();
        assert!(close(z.value, h.value, 1e-12));
    }

    #[test]
    fn hurwitz_at_negative_integers_within_bound() {
        for m in 1..=9u64 {
            let h = hurwitz_zeta(c(-(m as f64)), 1.0, 1e-15).unwrap();
            let exact = to_f64(&zeta_nonpositive(m));
            assert!((h.value.re - exact).abs() <= h.tail_bound, "m = {m}: {} vs {exact}", h.value.re);
            assert!(h.tail_bound <= 1e-10, "m = {m}: bound {}", h.tail_bound);
        }
    }

    #[test]
    fn eta_and_hurwitz_agree_off_axis() {
        for s in [Complex64::new(0.5, 14.0), Complex64::new(2.0, 1.0), Complex64::new(3.0, -2.0)] {
            let a = riemann_zeta(s, 1e-12).unwrap();
            let b = hurwitz_zeta(s, 1.0, 1e-12).unwrap();
            assert!(close(a.value, b.value, 1e-10), "s = {s}: {} vs {}", a.value, b.value);
        }
    }

    #[test]
    fn zeta_star_routes() {
        let a = zeta_star(c(2.0), 1e-12, ZetaStarRoute::Identity).unwrap();
        assert!(close(a.value, c(PI * PI / 8.0), 1e-10));
        for s in [c(3.0), Complex64::new(2.0, 1.0), Complex64::new(3.0, -2.0), c(4.0)] {
            let d = zeta_star(s, 1e-12, ZetaStarRoute::Direct).unwrap();
            let i = zeta_star(s, 1e-12, ZetaStarRoute::Identity).unwrap();
            assert!((d.value - i.value).norm() <= d.tail_bound + i.tail_bound + 1e-14, "s = {s}");
        }
    }

    #[test]
    fn genocchi_zeta_values() {
        let g2 = genocchi_zeta_classical(c(2.0), 1e-12).unwrap();
        assert!(close(g2.value, c(-PI * PI / 6.0), 1e-10));
        assert_eq!(genocchi_zeta_classical(c(-1.0), 1e-12).unwrap().value, c(-0.5));
        assert_eq!(genocchi_zeta_nonpositive(2), crate::exact::rational(-1, 2));
    }

    #[test]
    fn hurwitz_values() {
        for s in [2.0, 3.0] {
            let h = hurwitz_zeta(c(s), 1.0, 1e-12).unwrap();
            let z = riemann_zeta(c(s), 1e-12).unwrap();
            assert!(close(h.value, z.value, 1e-10));
        }
        let h = hurwitz_zeta(c(2.0), 0.5, 1e-12).unwrap();
        assert!(close(h.value, c(PI * PI / 2.0), 1e-10));
        let h = hurwitz_zeta(c(3.0), 0.25, 1e-12).unwrap();
        assert!((h.value.re - brute_zeta(3.0, 0.25)).abs() < 1e-8);
        assert!(hurwitz_zeta(c(2.0), 0.0, 1e-12).is_err());
        for a in [0.25, 0.5, 0.75] {
            for s in [c(2.0), c(3.0)] {
                let d = hurwitz_zeta(s, a, 1e-13).unwrap().value - hurwitz_zeta(s, a + 1.0, 1e-13).unwrap().value;
                assert!(close(d, real_pow_neg(a, s), 1e-10));
            }
        }
    }

    #[test]
    fn lerch_values() {
        let s = Complex64::new(2.5, 0.5);
        assert!(close(lerch_phi(c(0.0), s, 0.3, 1e-14).unwrap().value, real_pow_neg(0.3, s), 1e-15));
        let p = lerch_phi(c(1.0), c(2.0), 0.5, 1e-12).unwrap();
        let h = hurwitz_zeta(c(2.0), 0.5, 1e-12).unwrap();
        assert!(close(p.value, h.value, 1e-10));
        let p = lerch_phi(c(0.5), c(2.0), 1.0, 1e-13).unwrap();
        let brute: f64 = (0..200).map(|m| 0.5f64.powi(m) / ((m + 1) as f64).powi(2)).sum();
        assert!((p.value.re - brute).abs() < 1e-10);
        for z in [c(0.5), Complex64::new(0.3, -0.6), c(-1.0)] {
            for a in [0.25, 0.5, 1.5] {
                let l = lerch_phi(z, c(2.0), a, 1e-13).unwrap().value;
                let r = z * lerch_phi(z, c(2.0), a + 1.0, 1e-13).unwrap().value + real_pow_neg(a, c(2.0));
                assert!(close(l, r, 1e-10), "z = {z}, a = {a}");
            }
        }
    }

    #[test]
    fn odd_power_sums() {
        let a = odd_power_sum(c(1.0), c(2.0), 1e-12).unwrap();
        assert!(close(a.value, c(PI * PI / 8.0), 1e-10));
        let d = odd_power_sum(c(0.5), c(2.0), 1e-13).unwrap();
        let brute: f64 = (1..200).map(|m| 0.5f64.powi(m) / ((2 * m - 1) as f64).powi(2)).sum();
        assert!((d.value.re - brute).abs() < 1e-10);
        for b in 1..=4 {
            let e = odd_power_sum_decomposed(c(0.5), c(2.0), b, 1e-13).unwrap();
            assert!(close(d.value, e.value, 1e-10), "b = {b}");
        }
    }

    #[test]
    fn digamma_values() {
        assert!((digamma(1.0, 1e-12).unwrap() + EULER_GAMMA).abs() < 1e-10);
        assert!((digamma(0.5, 1e-12).unwrap() + EULER_GAMMA + 2.0 * 2f64.ln()).abs() < 1e-10);
        let x = 1.0 / 3.0;
        assert!((digamma(x + 1.0, 1e-12).unwrap() - digamma(x, 1e-12).unwrap() - 1.0 / x).abs() < 1e-10);
        // independent series: psi(x) = -gamma + sum_{n>=0} (1/(n+1) - 1/(n+x))
        let n = 2_000_000;
        let series: f64 = -EULER_GAMMA + (0..n).map(|k| 1.0 / (k as f64 + 1.0) - 1.0 / (k as f64 + x)).sum::<f64>();
        assert!((digamma(x, 1e-12).unwrap() - series).abs() < 1e-6);
        assert!(digamma(0.0, 1e-12).is_err());
    }

    #[test]
    fn bernoulli_polynomials() {
        assert!((bernoulli_poly(1, 0.25) + 0.25).abs() < 1e-15);
        assert!((bernoulli_poly(3, 0.25) - (0.25f64.powi(3) - 1.5 * 0.0625 + 0.5 * 0.25)).abs() < 1e-15);
    }
}
