//! `hbq`: compute q-Hardy-Berndt sums, q-Genocchi zeta values and related
//! objects, and run identity checks with machine-readable reports.

mod report;
mod suite;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hbq::dirichlet::{characters_mod, parse_character, CharValue, DirichletCharacter};
use hbq::exact::{to_f64, QParam, QValue};
use hbq::finite::{dedekind_sum, hardy_berndt, parity_condition, SumInput, SumVariant};
use hbq::numbers::{number_table, q_euler_number, q_genocchi_number, q_genocchi_number_exact, NumberKind};
use hbq::outcome::{fmt_complex, param};
use hbq::qsums::{q_dedekind_sum, q_hardy_berndt, ParityMode, RegularizationSchedule, YRoute, YSumOptions};
use hbq::qzeta::{big_l_q, cck_zeta, im_q, im_q_hurwitz, l_q, zeta_q, HurwitzVariant};
use hbq::zeta::{
    dirichlet_eta, genocchi_l_classical, genocchi_zeta_classical, genocchi_zeta_nonpositive, hurwitz_zeta,
    riemann_zeta, zeta_star, ZetaStarRoute,
};
use hbq::Error;
use num_complex::Complex64;

use report::{Report, ValueRecord};
use suite::Target;

#[derive(Parser)]
#[command(name = "hbq", version, about = "q-Hardy-Berndt sums, q-Genocchi zeta functions and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
struct Opts {
    /// `q` as `1`, an exact fraction `a/b`, an exact decimal, or `re,im`.
    #[arg(long, global = true, value_parser = parse_q)]
    q: Option<QParam>,
    /// `s` as `re` or `re,im`.
    #[arg(long, global = true, value_parser = parse_s)]
    s: Option<Complex64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    h: Option<i64>,
    #[arg(long, global = true)]
    k: Option<i64>,
    /// `S`, `s1`..`s5` or `dedekind`.
    #[arg(long, global = true, value_parser = parse_variant)]
    variant: Option<SumVariant>,
    /// Dirichlet character as `f:index`.
    #[arg(long, global = true, value_parser = parse_chi)]
    chi: Option<DirichletCharacter>,
    #[arg(long, global = true)]
    x: Option<f64>,
    /// Order of the Dedekind-type q-sum (odd).
    #[arg(long, global = true)]
    p: Option<u32>,
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Damping offsets, strictly decreasing: `e1,e2,...`.
    #[arg(long, global = true, value_parser = parse_eps)]
    eps: Option<RegularizationSchedule>,
    #[arg(long = "terms-max", global = true)]
    terms_max: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Exact classical Hardy-Berndt or Dedekind sum.
    Finite,
    /// Bernoulli, Euler or Genocchi numbers; q-Euler and q-Genocchi numbers with --q.
    Numbers {
        #[arg(long, default_value = "genocchi", value_parser = parse_kind)]
        kind: NumberKind,
        /// Largest index.
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// List the characters modulo --modulus, or evaluate --chi at --n.
    Characters {
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Classical zeta-type functions.
    Zeta {
        #[arg(long, value_enum)]
        func: ZetaFunc,
        /// For `genocchi-nonpositive`: evaluate at `1 - n`.
        #[arg(long)]
        n: Option<u64>,
    },
    /// q-zeta and q-L functions.
    Qzeta {
        #[arg(long, value_enum)]
        func: QZetaFunc,
        /// Multiply by `[2] = 1 + q` (the Genocchi normalization).
        #[arg(long)]
        genocchi: bool,
        #[arg(long, value_enum, default_value_t = Hurwitz::Additive)]
        hurwitz: Hurwitz,
    },
    /// Regularized q-Hardy-Berndt or q-Dedekind sum.
    Qsum {
        #[arg(long, value_enum, default_value_t = Route::Auto)]
        route: Route,
        /// Proceed when the parity hypothesis fails.
        #[arg(long)]
        allow_parity: bool,
    },
    /// Run identity checks on a fixed grid, or on one case given by flags.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZetaFunc {
    Riemann,
    Eta,
    ZetaStar,
    Genocchi,
    GenocchiNonpositive,
    Hurwitz,
    GenocchiL,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum QZetaFunc {
    /// Alternating `Im_q(s)`; Hurwitz form with --x.
    Im,
    /// Alternating twisted `l_q(s, chi)`; two-variable form with --x.
    L,
    /// Non-alternating `zeta_q(s)`.
    Zeta,
    /// Non-alternating twisted `L_q(s, chi)`.
    BigL,
    /// `q(1+q) sum (-1)^{n+1} q^n [n]^{-s}`.
    Cck,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Hurwitz {
    Additive,
    Bracket,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Auto,
    TrigSeries,
    Literal,
    MFirst,
}

fn parse_q(s: &str) -> Result<QParam, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_s(s: &str) -> Result<Complex64, String> {
    let bad = || format!("s must be \"re\" or \"re,im\", got {s:?}");
    let (re, im) = match s.split_once(',') {
        Some((a, b)) => (a, b),
        None => (s, "0"),
    };
    Ok(Complex64::new(re.trim().parse().map_err(|_| bad())?, im.trim().parse().map_err(|_| bad())?))
}

fn parse_variant(s: &str) -> Result<SumVariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_chi(s: &str) -> Result<DirichletCharacter, String> {
    parse_character(s).map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<NumberKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_eps(s: &str) -> Result<RegularizationSchedule, String> {
    let offsets: Vec<f64> = s
        .split(',')
        .map(|e| e.trim().parse().map_err(|_| format!("bad offset {e:?} in --eps")))
        .collect::<Result<_, _>>()?;
    RegularizationSchedule::with_offsets(offsets).map_err(|e| e.to_string())
}

/// Usage-level failure: message and exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

fn require<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Usage> {
    v.clone().ok_or_else(|| Usage(format!("missing --{flag}")))
}

fn char_value_text(v: CharValue) -> String {
    match v {
        CharValue::Zero => "0".into(),
        CharValue::Root { num: 0, .. } => "1".into(),
        CharValue::Root { num: 1, den: 2 } => "-1".into(),
        CharValue::Root { num: 1, den: 4 } => "i".into(),
        CharValue::Root { num: 3, den: 4 } => "-i".into(),
        CharValue::Root { num, den } => format!("e({num}/{den})"),
    }
}

fn finite(o: &Opts) -> Result<Vec<ValueRecord>, Usage> {
    let variant = o.variant.unwrap_or(SumVariant::S);
    let h = require(&o.h, "h")?;
    let k = require(&o.k, "k")?;
    let params = vec![param("variant", variant.name()), param("h", h), param("k", k)];
    let v = if variant == SumVariant::Dedekind {
        dedekind_sum(h, k)?
    } else {
        hardy_berndt(&SumInput::new(variant, h, k)?)?
    };
    let mut rec =
        ValueRecord::new(format!("{}(h,k)", variant.name()), params, "exact").exact(v.to_string(), to_f64(&v));
    let pc = parity_condition(variant, h, k);
    if !pc.holds {
        rec = rec.note(format!("parity hypothesis fails: needs {}", pc.description));
    }
    Ok(vec![rec])
}

fn numbers(o: &Opts, kind: NumberKind, n: usize) -> Result<Vec<ValueRecord>, Usage> {
    let mut out = Vec::new();
    match &o.q {
        None => {
            let t = number_table(kind, n);
            for (i, e) in t.entries.iter().enumerate() {
                out.push(
                    ValueRecord::new(format!("{kind}"), vec![param("n", i)], "recurrence")
                        .exact(e.to_string(), to_f64(e)),
                );
            }
        }
        Some(q) => {
            let tol = o.tol.unwrap_or(1e-12);
            for m in 0..=n {
                let params = vec![param("n", m), param("q", q)];
                let rec = match kind {
                    NumberKind::Euler => match q_euler_number(m, q)? {
                        QValue::Exact(r) => {
                            ValueRecord::new("q-euler", params, "exact").exact(r.to_string(), to_f64(&r))
                        }
                        QValue::Complex(z) => ValueRecord::new("q-euler", params, "closed form").value(z, 0.0),
                    },
                    NumberKind::Genocchi => match q.exact() {
                        Some(r) if q.regime() == hbq::exact::Regime::RealUnit => {
                            let g = q_genocchi_number_exact(m, &r)?;
                            ValueRecord::new("q-genocchi", params, "exact").exact(g.to_string(), to_f64(&g))
                        }
                        _ => ValueRecord::new("q-genocchi", params, "series").series(&q_genocchi_number(m, q, tol)?),
                    },
                    NumberKind::Bernoulli => return Err(Usage("no q-variant of the Bernoulli numbers here".into())),
                };
                out.push(rec);
            }
        }
    }
    Ok(out)
}

fn characters(o: &Opts, modulus: Option<u64>, n: Option<i64>) -> Result<Vec<ValueRecord>, Usage> {
    match (&o.chi, modulus) {
        (Some(chi), _) => {
            let n = n.ok_or_else(|| Usage("missing --n".into()))?;
            let v = chi.value(n);
            let z = chi.eval(n);
            Ok(vec![ValueRecord::new("chi(n)", vec![param("chi", chi), param("n", n)], "exact")
                .exact(char_value_text(v), z.re)
                .value(z, 0.0)])
        }
        (None, Some(f)) => Ok(characters_mod(f)?
            .iter()
            .map(|c| {
                let vals: Vec<String> = (1..=f as i64).map(|a| char_value_text(c.value(a))).collect();
                ValueRecord::new("character", vec![param("chi", c)], "exact")
                    .note(format!(
                        "order {}, {}, {}",
                        c.order(),
                        if c.is_real() { "real" } else { "complex" },
                        if c.is_odd() { "odd" } else { "even" }
                    ))
                    .note(format!("values at 1..{f}: {}", vals.join(" ")))
            })
            .collect()),
        (None, None) => Err(Usage("give --modulus to list or --chi with --n to evaluate".into())),
    }
}

fn zeta(o: &Opts, func: ZetaFunc, n: Option<u64>) -> Result<Vec<ValueRecord>, Usage> {
    let tol = o.tol.unwrap_or(1e-12);
    if func == ZetaFunc::GenocchiNonpositive {
        let n = n.ok_or_else(|| Usage("missing --n".into()))?;
        let v = genocchi_zeta_nonpositive(n);
        return Ok(
            vec![ValueRecord::new("zeta_G(1-n)", vec![param("n", n)], "exact").exact(v.to_string(), to_f64(&v))],
        );
    }
    let s = require(&o.s, "s")?;
    let mut params = vec![param("s", fmt_complex(s))];
    let (name, route, v) = match func {
        ZetaFunc::Riemann => ("zeta", "eta relation", riemann_zeta(s, tol)?),
        ZetaFunc::Eta => ("eta", "alternating series acceleration", dirichlet_eta(s, tol)?),
        ZetaFunc::ZetaStar => ("zeta*", "odd-term series with Hurwitz tail", zeta_star(s, tol, ZetaStarRoute::Direct)?),
        ZetaFunc::Genocchi => ("zeta_G", "-2 eta", genocchi_zeta_classical(s, tol)?),
        ZetaFunc::Hurwitz => {
            let x = require(&o.x, "x")?;
            params.push(param("x", x));
            ("zeta(s,x)", "Euler-Maclaurin", hurwitz_zeta(s, x, tol)?)
        }
        ZetaFunc::GenocchiL => {
            let chi = require(&o.chi, "chi")?;
            params.push(param("chi", &chi));
            ("l_G(s,chi)", "periodic Dirichlet series", genocchi_l_classical(s, &chi, tol)?)
        }
        ZetaFunc::GenocchiNonpositive => unreachable!(),
    };
    Ok(vec![ValueRecord::new(name, params, route).series(&v)])
}

fn qzeta(o: &Opts, func: QZetaFunc, genocchi: bool, hurwitz: Hurwitz) -> Result<Vec<ValueRecord>, Usage> {
    let tol = o.tol.unwrap_or(1e-12);
    let s = require(&o.s, "s")?;
    let q = require(&o.q, "q")?;
    let mut params = vec![param("s", fmt_complex(s)), param("q", &q)];
    if genocchi {
        params.push(param("scale", "[2]"));
    }
    let (name, v) = match func {
        QZetaFunc::Im => match o.x {
            None => ("Im_q(s)", im_q(s, &q, tol, genocchi)?),
            Some(x) => {
                params.push(param("x", x));
                let variant = match hurwitz {
                    Hurwitz::Additive => HurwitzVariant::Additive,
                    Hurwitz::Bracket => HurwitzVariant::Bracket,
                };
                params.push(param("form", if hurwitz == Hurwitz::Additive { "additive" } else { "bracket" }));
                ("Im_q(s,x)", im_q_hurwitz(s, x, &q, tol, variant, genocchi)?)
            }
        },
        QZetaFunc::L => {
            let chi = require(&o.chi, "chi")?;
            params.push(param("chi", &chi));
            if let Some(x) = o.x {
                params.push(param("x", x));
            }
            ("l_q(s,chi)", l_q(s, &chi, &q, tol, genocchi, o.x)?)
        }
        QZetaFunc::Zeta => ("zeta_q(s)", zeta_q(s, &q, tol)?),
        QZetaFunc::BigL => {
            let chi = require(&o.chi, "chi")?;
            params.push(param("chi", &chi));
            ("L_q(s,chi)", big_l_q(s, &chi, &q, tol)?)
        }
        QZetaFunc::Cck => ("cck zeta", cck_zeta(s, &q, tol)?),
    };
    Ok(vec![ValueRecord::new(name, params, "q-series with geometric majorant").series(&v)])
}

fn qsum(o: &Opts, route: Route, allow_parity: bool) -> Result<Vec<ValueRecord>, Usage> {
    let variant = o.variant.unwrap_or(SumVariant::S);
    let h = require(&o.h, "h")?;
    let k = require(&o.k, "k")?;
    let q = o.q.clone().unwrap_or(QParam::Limit1);
    let mut opts = YSumOptions::default();
    if let Some(s) = &o.eps {
        opts.schedule = s.clone();
    }
    if let Some(t) = o.tol {
        opts.tol = t;
    }
    if let Some(t) = o.terms_max {
        opts.terms_max = t;
    }
    opts.route = match route {
        Route::Auto => YRoute::Auto,
        Route::TrigSeries => YRoute::TrigSeries,
        Route::Literal => YRoute::Literal,
        Route::MFirst => YRoute::MFirst,
    };
    let mut params = vec![param("variant", variant.name()), param("h", h), param("k", k), param("q", &q)];
    let r = if variant == SumVariant::Dedekind {
        let p = o.p.unwrap_or(1);
        params.push(param("p", p));
        q_dedekind_sum(p, h, k, &q, &opts)?
    } else {
        let mode = if allow_parity { ParityMode::Warn } else { ParityMode::Strict };
        if let Some(chi) = &o.chi {
            params.push(param("chi", chi));
        }
        q_hardy_berndt(variant, h, k, &q, o.chi.as_ref(), &opts, mode)?
    };
    let mut rec = ValueRecord::new(format!("{}(h,k;q)", variant.name()), params.clone(), r.y.route.name());
    rec.value = Some(r.value.into());
    rec.residual = Some(report::Float(r.y.residual * r.constant.norm()));
    rec.terms_used = Some(r.y.terms_used);
    rec = rec.note(format!("constant {}", fmt_complex(r.constant)));
    if !r.parity_holds {
        rec = rec.note("parity hypothesis fails");
    }
    if r.y.diverged {
        rec = rec.note("damped values did not settle (residual above 1e3 * tol)");
    }
    let mut y = ValueRecord::new("Y(h,k;q)", params, r.y.route.name());
    y.value = Some(r.y.value.into());
    y.residual = Some(report::Float(r.y.residual));
    y.terms_used = Some(r.y.terms_used);
    for (eps, v) in &r.y.per_offset {
        y = y.note(format!("eps {eps}: {}", fmt_complex(*v)));
    }
    Ok(vec![rec, y])
}

fn verify(o: &Opts, target: Target) -> Result<Vec<report::CheckRecord>, Usage> {
    let explicit = o.variant.is_some()
        || o.h.is_some()
        || o.k.is_some()
        || o.s.is_some()
        || o.q.is_some()
        || o.chi.is_some()
        || o.x.is_some();
    if explicit {
        let case = suite::single_case(target, o.variant, o.h, o.k, o.s, o.q.clone(), o.chi.clone(), o.x, o.tol)
            .map_err(Usage)?;
        return Ok(vec![suite::run_single(&case)?]);
    }
    Ok(suite::run(&suite::grid(target)))
}

fn execute(cli: &Cli) -> Result<Report, Usage> {
    let o = &cli.opts;
    let command: Vec<String> = std::env::args().skip(1).collect();
    let mut checks = Vec::new();
    let values = match &cli.command {
        Command::Finite => finite(o)?,
        Command::Numbers { kind, n } => numbers(o, *kind, *n)?,
        Command::Characters { modulus, n } => characters(o, *modulus, *n)?,
        Command::Zeta { func, n } => zeta(o, *func, *n)?,
        Command::Qzeta { func, genocchi, hurwitz } => qzeta(o, *func, *genocchi, *hurwitz)?,
        Command::Qsum { route, allow_parity } => qsum(o, *route, *allow_parity)?,
        Command::Verify { target } => {
            checks = verify(o, *target)?;
            Vec::new()
        }
    };
    Ok(Report::new(command, checks, values))
}

fn configure_threads() {
    if let Some(n) = std::env::var("HBQ_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.opts.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    match &cli.opts.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
