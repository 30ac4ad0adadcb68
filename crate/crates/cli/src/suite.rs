//! Fixed verification grids and single-case checks.

use hbq::dirichlet::{characters_mod, DirichletCharacter};
use hbq::exact::{to_f64, QParam};
use hbq::finite::{hardy_berndt, parity_condition, SumInput, SumVariant};
use hbq::mellin::{verify_mellin_definition, verify_product_identity, MellinCheck, ProductIdentity};
use hbq::outcome::{fmt_complex, param, VerificationOutcome};
use hbq::qsums::{q_hardy_berndt, verify_trig_series, ParityMode, YSumOptions};
use hbq::qzeta::{verify_l_decomposition, verify_two_variable_decomposition};
use hbq::{Error, Result};
use num_complex::Complex64;
use num_integer::Integer;
use rayon::prelude::*;

use crate::report::CheckRecord;

/// Verification targets of the `verify` subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    /// Closed-form tangent/cotangent series against exact finite sums.
    TrigSeries,
    /// Residue-class decomposition of `l_{G,q}(s, chi)`.
    LDecomposition,
    /// Residue-class decomposition of the two-variable `l_{G,q}(s, x, chi)`.
    TwoVariableDecomposition,
    /// Mellin quadrature against the series definitions.
    MellinDefs,
    /// q-Hardy-Berndt sums at `q = 1` against exact finite sums.
    QSumRecovery,
    /// Halving the last damping offset moves each q-sum by less than its residual.
    RegularizationStability,
    /// Product identity for `y_0`: Mellin double sum against `Im_{G,q}(s) zeta*(s+1)`.
    ProductY0,
    /// Product identity for `y_1`: Mellin double sum against `zeta_q(s) zeta*(s+1)`.
    ProductY1,
    /// Product identity for `y_2`: Mellin double sum against `Im_{G,q}(s) zeta(s+1)`.
    ProductY2,
    /// Twisted `y_0`: Mellin double sum against `l_{G,q}(s, chi) zeta*(s+1)`.
    ProductY0chi,
    /// Twisted `y_1`: Mellin double sum against `L_q(s, chi) zeta*(s+1)`.
    ProductY1chi,
    /// Every grid above.
    All,
}

impl Target {
    fn product(self) -> Option<ProductIdentity> {
        Some(match self {
            Target::ProductY0 => ProductIdentity::Y0,
            Target::ProductY1 => ProductIdentity::Y1,
            Target::ProductY2 => ProductIdentity::Y2,
            Target::ProductY0chi => ProductIdentity::Y0Chi,
            Target::ProductY1chi => ProductIdentity::Y1Chi,
            _ => return None,
        })
    }
}

/// One unit of work in a grid.
#[derive(Debug, Clone)]
pub enum Case {
    Trig { variant: SumVariant, h: i64, k: i64, tol: f64 },
    LDecomp { s: Complex64, chi: DirichletCharacter, q: QParam, tol: f64 },
    TwoVar { s: Complex64, x: f64, chi: DirichletCharacter, q: QParam, tol: f64 },
    Mellin { check: MellinCheck, s: Complex64, q: QParam, tol: f64 },
    QSum { variant: SumVariant, h: i64, k: i64, tol: f64 },
    Stability { variant: SumVariant, h: i64, k: i64 },
    Product { id: ProductIdentity, s: Complex64, q: QParam, chi: Option<DirichletCharacter>, tol: f64 },
}

pub const TRIG_TOL: f64 = 1e-9;
pub const DECOMP_TOL: f64 = 1e-10;
pub const MELLIN_TOL: f64 = 1e-8;
pub const QSUM_TOL: f64 = 1e-6;
pub const PRODUCT_TOL: f64 = 1e-4;

/// Pairs used by the q-sum recovery and stability grids.
pub const QSUM_PAIRS: [(i64, i64); 5] = [(1, 2), (2, 3), (1, 3), (3, 4), (1, 5)];

fn q(s: &str) -> QParam {
    s.parse().expect("grid q values parse")
}

fn nonprincipal_mod4() -> DirichletCharacter {
    characters_mod(4).expect("modulus 4").remove(1)
}

fn decomposition_characters() -> Vec<DirichletCharacter> {
    let mut v = characters_mod(3).expect("modulus 3");
    v.extend(characters_mod(5).expect("modulus 5"));
    v
}

/// The fixed grid for a target.
pub fn grid(target: Target) -> Vec<Case> {
    let mut out = Vec::new();
    let all = target == Target::All;
    if all || target == Target::TrigSeries {
        for k in 1..=15i64 {
            for h in 1..=k {
                if h.gcd(&k) != 1 {
                    continue;
                }
                for variant in SumVariant::HARDY_BERNDT {
                    if parity_condition(variant, h, k).holds {
                        out.push(Case::Trig { variant, h, k, tol: TRIG_TOL });
                    }
                }
            }
        }
    }
    let dq = [q("1/2"), q("1/3")];
    let ds = [Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)];
    if all || target == Target::LDecomposition {
        for chi in decomposition_characters() {
            for s in ds {
                for qq in &dq {
                    out.push(Case::LDecomp { s, chi: chi.clone(), q: qq.clone(), tol: DECOMP_TOL });
                }
            }
        }
    }
    if all || target == Target::TwoVariableDecomposition {
        for chi in decomposition_characters() {
            for s in ds {
                for qq in &dq {
                    for x in [0.25, 0.5] {
                        out.push(Case::TwoVar { s, x, chi: chi.clone(), q: qq.clone(), tol: DECOMP_TOL });
                    }
                }
            }
        }
    }
    if all || target == Target::MellinDefs {
        let checks = [MellinCheck::ImQ, MellinCheck::ImQHurwitz(0.5), MellinCheck::LQ(nonprincipal_mod4())];
        for check in checks {
            for s in [2.0, 3.0, 2.5] {
                for qq in ["3/10", "1/2", "4/5"] {
                    out.push(Case::Mellin {
                        check: check.clone(),
                        s: Complex64::new(s, 0.0),
                        q: q(qq),
                        tol: MELLIN_TOL,
                    });
                }
            }
        }
    }
    if all || target == Target::QSumRecovery || target == Target::RegularizationStability {
        for (h, k) in QSUM_PAIRS {
            for variant in SumVariant::HARDY_BERNDT {
                if !parity_condition(variant, h, k).holds {
                    continue;
                }
                if all || target == Target::QSumRecovery {
                    out.push(Case::QSum { variant, h, k, tol: QSUM_TOL });
                }
                if all || target == Target::RegularizationStability {
                    out.push(Case::Stability { variant, h, k });
                }
            }
        }
    }
    for id in ProductIdentity::ALL {
        let t = match id {
            ProductIdentity::Y0 => Target::ProductY0,
            ProductIdentity::Y1 => Target::ProductY1,
            ProductIdentity::Y2 => Target::ProductY2,
            ProductIdentity::Y0Chi => Target::ProductY0chi,
            ProductIdentity::Y1Chi => Target::ProductY1chi,
        };
        if all || target == t {
            let chi = id.needs_character().then(nonprincipal_mod4);
            out.push(Case::Product { id, s: Complex64::new(2.0, 0.0), q: q("1/2"), chi, tol: PRODUCT_TOL });
        }
    }
    out
}

/// Single case for a target from explicit parameters.
#[allow(clippy::too_many_arguments)]
pub fn single_case(
    target: Target,
    variant: Option<SumVariant>,
    h: Option<i64>,
    k: Option<i64>,
    s: Option<Complex64>,
    qp: Option<QParam>,
    chi: Option<DirichletCharacter>,
    x: Option<f64>,
    tol: Option<f64>,
) -> std::result::Result<Case, String> {
    let need = |name: &str| format!("--{name} is required for a single {target:?} case");
    Ok(match target {
        Target::TrigSeries | Target::QSumRecovery | Target::RegularizationStability => {
            let variant = variant.ok_or_else(|| need("variant"))?;
            let h = h.ok_or_else(|| need("h"))?;
            let k = k.ok_or_else(|| need("k"))?;
            match target {
                Target::TrigSeries => Case::Trig { variant, h, k, tol: tol.unwrap_or(TRIG_TOL) },
                Target::QSumRecovery => Case::QSum { variant, h, k, tol: tol.unwrap_or(QSUM_TOL) },
                _ => Case::Stability { variant, h, k },
            }
        }
        Target::LDecomposition => Case::LDecomp {
            s: s.ok_or_else(|| need("s"))?,
            chi: chi.ok_or_else(|| need("chi"))?,
            q: qp.ok_or_else(|| need("q"))?,
            tol: tol.unwrap_or(DECOMP_TOL),
        },
        Target::TwoVariableDecomposition => Case::TwoVar {
            s: s.ok_or_else(|| need("s"))?,
            x: x.ok_or_else(|| need("x"))?,
            chi: chi.ok_or_else(|| need("chi"))?,
            q: qp.ok_or_else(|| need("q"))?,
            tol: tol.unwrap_or(DECOMP_TOL),
        },
        Target::MellinDefs => {
            let check = match (chi, x) {
                (Some(c), None) => MellinCheck::LQ(c),
                (None, Some(x)) => MellinCheck::ImQHurwitz(x),
                (None, None) => MellinCheck::ImQ,
                (Some(_), Some(_)) => return Err("give at most one of --chi and --x for mellin-defs".into()),
            };
            Case::Mellin {
                check,
                s: s.ok_or_else(|| need("s"))?,
                q: qp.ok_or_else(|| need("q"))?,
                tol: tol.unwrap_or(MELLIN_TOL),
            }
        }
        Target::All => return Err("`all` runs the fixed grid and takes no case parameters".into()),
        t => Case::Product {
            id: t.product().expect("product target"),
            s: s.ok_or_else(|| need("s"))?,
            q: qp.ok_or_else(|| need("q"))?,
            chi,
            tol: tol.unwrap_or(PRODUCT_TOL),
        },
    })
}

fn qsum_params(variant: SumVariant, h: i64, k: i64) -> Vec<(String, String)> {
    vec![param("variant", variant.name()), param("h", h), param("k", k), param("q", "1")]
}

fn run_case(case: &Case) -> Result<VerificationOutcome> {
    match case {
        Case::Trig { variant, h, k, tol } => verify_trig_series(*variant, *h, *k, *tol),
        Case::LDecomp { s, chi, q, tol } => verify_l_decomposition(*s, chi, q, *tol),
        Case::TwoVar { s, x, chi, q, tol } => verify_two_variable_decomposition(*s, *x, chi, q, *tol),
        Case::Mellin { check, s, q, tol } => verify_mellin_definition(check, *s, q, *tol),
        Case::Product { id, s, q, chi, tol } => verify_product_identity(*id, *s, q, chi.as_ref(), *tol),
        Case::QSum { variant, h, k, tol } => {
            let r =
                q_hardy_berndt(*variant, *h, *k, &QParam::Limit1, None, &YSumOptions::default(), ParityMode::Strict)?;
            let exact = to_f64(&hardy_berndt(&SumInput::new(*variant, *h, *k)?)?);
            let mut o = VerificationOutcome::new(
                format!("{} q-sum at q=1 = finite sum", variant.name()),
                qsum_params(*variant, *h, *k),
                (r.value, r.y.residual * r.constant.norm()),
                (Complex64::new(exact, 0.0), 0.0),
                *tol,
                format!("lhs: regularized Y sum ({}); rhs: exact rational sum", r.y.route),
            );
            if r.y.diverged {
                o = o.with_note("damped values did not settle");
            }
            Ok(o)
        }
        Case::Stability { variant, h, k } => {
            let base = YSumOptions::default();
            let halved = YSumOptions { schedule: base.schedule.halved(), ..base.clone() };
            let a = q_hardy_berndt(*variant, *h, *k, &QParam::Limit1, None, &base, ParityMode::Strict)?;
            let b = q_hardy_berndt(*variant, *h, *k, &QParam::Limit1, None, &halved, ParityMode::Strict)?;
            let residual = a.y.residual * a.constant.norm();
            Ok(VerificationOutcome::new(
                format!("{} q-sum stable under halving", variant.name()),
                qsum_params(*variant, *h, *k),
                (a.value, residual),
                (b.value, b.y.residual * b.constant.norm()),
                residual,
                "lhs: default schedule; rhs: schedule with the last offset halved; tolerance: lhs residual",
            ))
        }
    }
}

fn case_label(case: &Case) -> (String, Vec<(String, String)>, f64) {
    match case {
        Case::Trig { variant, h, k, tol } => {
            ("trig series".into(), vec![param("variant", variant.name()), param("h", h), param("k", k)], *tol)
        }
        Case::LDecomp { s, chi, q, tol } => {
            ("l_Gq decomposition".into(), vec![param("s", fmt_complex(*s)), param("chi", chi), param("q", q)], *tol)
        }
        Case::TwoVar { s, x, chi, q, tol } => (
            "two-variable l_Gq decomposition".into(),
            vec![param("s", fmt_complex(*s)), param("x", x), param("chi", chi), param("q", q)],
            *tol,
        ),
        Case::Mellin { check, s, q, tol } => {
            (check.name().into(), vec![param("s", fmt_complex(*s)), param("q", q)], *tol)
        }
        Case::QSum { variant, h, k, tol } => ("q-sum at q=1".into(), qsum_params(*variant, *h, *k), *tol),
        Case::Stability { variant, h, k } => ("q-sum stability".into(), qsum_params(*variant, *h, *k), 0.0),
        Case::Product { id, s, q, tol, .. } => {
            (id.name().into(), vec![param("identity", id.label()), param("s", fmt_complex(*s)), param("q", q)], *tol)
        }
    }
}

/// Runs one case; numerical failures become failing records, input errors are returned.
pub fn run_single(case: &Case) -> std::result::Result<CheckRecord, Error> {
    match run_case(case) {
        Ok(o) => Ok(CheckRecord::from(o)),
        Err(e) if e.is_input_error() => Err(e),
        Err(e) => {
            let (name, params, tol) = case_label(case);
            Ok(CheckRecord::failed(&name, params, tol, &e))
        }
    }
}

/// Runs cases in parallel; errors become failing records.
pub fn run(cases: &[Case]) -> Vec<CheckRecord> {
    cases
        .par_iter()
        .map(|c| match run_case(c) {
            Ok(o) => CheckRecord::from(o),
            Err(e) => {
                let (name, params, tol) = case_label(c);
                CheckRecord::failed(&name, params, tol, &e)
            }
        })
        .collect()
}
