//! Mellin transforms of the `m`-summed generating-function differences and
//! their factorization into a q-zeta value times `zeta*(s+1)` or `zeta(s+1)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;

use crate::dirichlet::DirichletCharacter;
use crate::error::{check_tol, Error, Result};
use crate::exact::{to_f64, QParam, Regime};
use crate::outcome::{fmt_complex, param, VerificationOutcome};
use crate::qsums::genfn::{GenFnKind, GenFnTag};
use crate::qsums::regularize::RegularizationSchedule;
use crate::qzeta::{big_l_q, im_q, l_q, two_bracket, zeta_q};
use crate::zeta::{hurwitz_zeta, riemann_zeta, zeta_star, ZetaStarRoute};

/// Number of explicit `m` terms before the Hurwitz-zeta tail.
const M_TERMS: usize = 400;

/// The five product identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductIdentity {
    /// `y_0` (from `F`, odd `m`-weights) against `Im_{G,q}(s) zeta*(s+1)`.
    Y0,
    /// `y_1` (from `f`, odd weights) against `zeta_q(s) zeta*(s+1)`.
    Y1,
    /// `y_2` (from `F`, weights `m`) against `Im_{G,q}(s) zeta(s+1)`.
    Y2,
    /// `y_{0,chi}` against `l_{G,q}(s, chi) zeta*(s+1)`.
    Y0Chi,
    /// `y_{1,chi}` against `L_q(s, chi) zeta*(s+1)`.
    Y1Chi,
}

impl ProductIdentity {
    pub const ALL: [ProductIdentity; 5] =
        [ProductIdentity::Y0, ProductIdentity::Y1, ProductIdentity::Y2, ProductIdentity::Y0Chi, ProductIdentity::Y1Chi];

    /// Short label: `y0`, `y1`, `y2`, `y0chi`, `y1chi`.
    pub fn label(self) -> &'static str {
        match self {
            ProductIdentity::Y0 => "y0",
            ProductIdentity::Y1 => "y1",
            ProductIdentity::Y2 => "y2",
            ProductIdentity::Y0Chi => "y0chi",
            ProductIdentity::Y1Chi => "y1chi",
        }
    }

    /// `true` for the two character-twisted identities.
    pub fn needs_character(self) -> bool {
        matches!(self, ProductIdentity::Y0Chi | ProductIdentity::Y1Chi)
    }

    pub fn name(self) -> &'static str {
        match self {
            ProductIdentity::Y0 => "mellin y0 = Im_Gq zeta*",
            ProductIdentity::Y1 => "mellin y1 = zeta_q zeta*",
            ProductIdentity::Y2 => "mellin y2 = Im_Gq zeta",
            ProductIdentity::Y0Chi => "mellin y0chi = l_Gq zeta*",
            ProductIdentity::Y1Chi => "mellin y1chi = L_q zeta*",
        }
    }

    fn tag(self) -> GenFnTag {
        match self {
            ProductIdentity::Y0 | ProductIdentity::Y2 => GenFnTag::Big,
            ProductIdentity::Y1 => GenFnTag::Small,
            ProductIdentity::Y0Chi => GenFnTag::BigChi,
            ProductIdentity::Y1Chi => GenFnTag::SmallChi,
        }
    }

    fn odd_weights(self) -> bool {
        self != ProductIdentity::Y2
    }

    fn genocchi_scaled(self) -> bool {
        matches!(self, ProductIdentity::Y0 | ProductIdentity::Y2 | ProductIdentity::Y0Chi)
    }
}

impl std::str::FromStr for ProductIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductIdentity::ALL
            .into_iter()
            .find(|p| p.label() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown product identity {s:?}; expected y0, y1, y2, y0chi or y1chi")))
    }
}

/// `i^{-s} ((-1)^{-s} - 1)` on principal branches; exactly zero at even integers.
pub fn product_prefactor(s: Complex64) -> Complex64 {
    if s.im == 0.0 && (s.re / 2.0).fract() == 0.0 {
        return Complex64::zero();
    }
    let i_pow = (-s * Complex64::new(0.0, PI / 2.0)).exp();
    i_pow * ((-s * Complex64::new(0.0, PI)).exp() - 1.0)
}

/// `(-i)^{-s} - i^{-s} = 2i sin(pi s/2)`: the factor produced by transforming
/// `exp(i a t) - exp(-i a t)` termwise.
pub fn termwise_prefactor(s: Complex64) -> Complex64 {
    if s.im == 0.0 && (s.re / 2.0).fract() == 0.0 {
        return Complex64::zero();
    }
    Complex64::new(0.0, 2.0) * (PI * s / 2.0).sin()
}

/// `sum_n c_n q^{-n} [(eps - i lambda_n w)^{-s} - (eps + i lambda_n w)^{-s}]`.
fn inner_sum(kind: &GenFnKind, lq: f64, s: Complex64, eps: f64, w: f64, tol: f64) -> Result<Complex64> {
    let qf = lq.exp();
    let sigma = s.re;
    let growth = (PI * s.im.abs() / 2.0).exp();
    // consecutive-term ratio of the majorant q^{-n} (lambda_n w)^{-sigma}, n >= 1
    let ratio = (lq * (sigma - 1.0)).exp();
    let mut sum = Complex64::zero();
    let mut n = 1usize;
    loop {
        let lam = (-(n as f64) * lq).exp_m1() / (1.0 - qf);
        let a = lam * w;
        let c = kind.coeff(n);
        let weight = (-(n as f64) * lq).exp();
        if c != Complex64::zero() {
            let d = (-s * Complex64::new(eps, -a).ln()).exp() - (-s * Complex64::new(eps, a).ln()).exp();
            sum += c * weight * d;
        }
        let major = 2.0 * growth * weight * a.powf(-sigma);
        if major * ratio / (1.0 - ratio) <= tol {
            return Ok(sum);
        }
        n += 1;
        if n > crate::MAX_TERMS {
            return Err(Error::NotConverged { terms: n, bound: major, tol });
        }
    }
}

/// Damped double sum `sum_m w_m^{-1} inner(eps, w_m)`; beyond `M` terms the
/// undamped `inner(0, w) = w^{-s} inner(0, 1)` is summed by a Hurwitz zeta.
fn damped_lhs(id: ProductIdentity, kind: &GenFnKind, lq: f64, s: Complex64, eps: f64, tol: f64) -> Result<Complex64> {
    let mut acc = Complex64::zero();
    for m in 1..=M_TERMS {
        let w = if id.odd_weights() { 2 * m - 1 } else { m } as f64;
        acc += inner_sum(kind, lq, s, eps, w, tol)? / w;
    }
    let one = inner_sum(kind, lq, s, 0.0, 1.0, tol)?;
    let tail = if id.odd_weights() {
        (-(s + 1.0) * 2f64.ln()).exp() * hurwitz_zeta(s + 1.0, M_TERMS as f64 + 0.5, tol)?.value
    } else {
        hurwitz_zeta(s + 1.0, M_TERMS as f64 + 1.0, tol)?.value
    };
    Ok(acc + one * tail)
}

/// Both sides of a product identity. The left side is the termwise Mellin
/// transform of the damped integrand, extrapolated to zero damping; the right
/// side is `i^{-s}((-1)^{-s}-1)` times the q-zeta factor times `zeta*(s+1)`
/// (`zeta(s+1)` for `y_2`). Notes record the observed ratio when the right
/// side is nonzero.
pub fn verify_product_identity(
    which: ProductIdentity,
    s: Complex64,
    q: &QParam,
    chi: Option<&DirichletCharacter>,
    tol: f64,
) -> Result<VerificationOutcome> {
    check_tol(tol)?;
    let id = which.label();
    q.require("verify_product_identity", &[Regime::RealUnit])?;
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!("product identities need Re s > 1, got s = {s}")));
    }
    let chi = match (which.needs_character(), chi) {
        (true, Some(c)) => Some(c),
        (true, None) => return Err(Error::Domain(format!("identity {id} needs a character"))),
        (false, Some(_)) => return Err(Error::Domain(format!("identity {id} takes no character"))),
        (false, None) => None,
    };
    let kind = GenFnKind::new(which.tag(), chi.cloned())?;
    let lq = to_f64(&q.exact().expect("real q")).ln();
    let inner_tol = (tol * 1e-4).max(1e-15);

    let schedule = RegularizationSchedule::default();
    let mut values = Vec::new();
    for &eps in schedule.offsets() {
        values.push(damped_lhs(which, &kind, lq, s, eps, inner_tol)?);
    }
    let (lhs, residual) = schedule.extrapolate(&values);

    let stol = inner_tol;
    let factor = match which {
        ProductIdentity::Y0 | ProductIdentity::Y2 => im_q(s, q, stol, true)?,
        ProductIdentity::Y1 => zeta_q(s, q, stol)?,
        ProductIdentity::Y0Chi => l_q(s, chi.expect("checked"), q, stol, true, None)?,
        ProductIdentity::Y1Chi => big_l_q(s, chi.expect("checked"), q, stol)?,
    };
    let z = match which {
        ProductIdentity::Y2 => riemann_zeta(s + 1.0, stol)?,
        _ => zeta_star(s + 1.0, stol, ZetaStarRoute::Direct)?,
    };
    let pre = product_prefactor(s);
    let rhs = pre * factor.value * z.value;
    let rhs_bound = pre.norm() * (factor.tail_bound * z.value.norm() + z.tail_bound * factor.value.norm());

    let mut params = vec![param("s", fmt_complex(s)), param("q", q), param("identity", id)];
    if let Some(c) = chi {
        params.push(param("chi", c));
    }
    let mut out = VerificationOutcome::new(
        which.name(),
        params,
        (lhs, residual),
        (rhs, rhs_bound),
        tol,
        "lhs: damped termwise Mellin double sum, Richardson to zero damping; rhs: prefactor x series",
    );
    if pre.norm() == 0.0 {
        out = out.with_note("prefactor i^{-s}((-1)^{-s}-1) vanishes at even integer s");
    } else {
        let mut predicted = termwise_prefactor(s) / pre;
        if which.genocchi_scaled() {
            predicted /= two_bracket(q);
        }
        out = out.with_note(format!(
            "ratio lhs/rhs = {}; termwise transform predicts {}",
            fmt_complex(lhs / rhs),
            fmt_complex(predicted)
        ));
    }
    Ok(out)
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
    fn prefactor_zeros() {
        for s in [2.0, 4.0] {
            assert_eq!(product_prefactor(Complex64::new(s, 0.0)), Complex64::zero());
        }
        assert!(product_prefactor(Complex64::new(3.0, 0.0)).norm() > 1.0);
    }

    #[test]
    fn vanishing_at_even_s() {
        let chi = characters_mod(4).unwrap().remove(1);
        for id in ProductIdentity::ALL {
            let c = if id.needs_character() { Some(&chi) } else { None };
            let o = verify_product_identity(id, Complex64::new(2.0, 0.0), &half(), c, 1e-4).unwrap();
            assert!(o.pass, "{}: {}", id.label(), o.abs_diff);
            assert!(o.lhs.norm() < 1e-6);
        }
    }

    #[test]
    fn odd_s_ratio_matches_termwise_prediction() {
        // At s = 3 the lhs equals the termwise factor times the unscaled q-series.
        for id in [ProductIdentity::Y0, ProductIdentity::Y1, ProductIdentity::Y2] {
            let o = verify_product_identity(id, Complex64::new(3.0, 0.0), &half(), None, 1e-4).unwrap();
            let mut predicted =
                termwise_prefactor(Complex64::new(3.0, 0.0)) / product_prefactor(Complex64::new(3.0, 0.0));
            if id != ProductIdentity::Y1 {
                predicted /= 1.5;
            }
            let ratio = o.lhs / o.rhs;
            assert!((ratio - predicted).norm() < 1e-5, "{}: {ratio} vs {predicted}", id.label());
        }
    }

    #[test]
    fn rejections() {
        let s = Complex64::new(2.0, 0.0);
        assert!("y3".parse::<ProductIdentity>().is_err());
        assert!(verify_product_identity(ProductIdentity::Y0Chi, s, &half(), None, 1e-4).is_err());
        assert!(verify_product_identity(ProductIdentity::Y0, s, &QParam::Limit1, None, 1e-4).is_err());
        assert!(verify_product_identity(ProductIdentity::Y0, Complex64::new(1.0, 0.0), &half(), None, 1e-4).is_err());
    }
}
