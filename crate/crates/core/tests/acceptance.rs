//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! Runs without the libtest harness so the lines always reach the output of
//! `cargo test`.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::One;

use hbq::dirichlet::{characters_mod, CharValue, DirichletCharacter};
use hbq::exact::{int, to_f64};
use hbq::finite::{hardy_berndt, parity_condition, SumInput, SumVariant};
use hbq::mellin::{verify_mellin_definition, verify_product_identity, MellinCheck, ProductIdentity};
use hbq::numbers::{number_table, NumberKind};
use hbq::qsums::{classical_trig_series, q_hardy_berndt, ParityMode, YSumOptions};
use hbq::qzeta::{im_q, l_q, verify_l_decomposition, verify_two_variable_decomposition};
use hbq::zeta::{genocchi_l_classical, genocchi_zeta_classical, hurwitz_zeta};
use hbq::{QParam, Rational};

const QSUM_PAIRS: [(i64, i64); 5] = [(1, 2), (2, 3), (1, 3), (3, 4), (1, 5)];

struct Line {
    pass: bool,
    detail: String,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line { pass, detail: detail.into() }
}

fn q(s: &str) -> QParam {
    s.parse().expect("q parses")
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn admissible(h: i64, k: i64) -> impl Iterator<Item = SumVariant> {
    SumVariant::HARDY_BERNDT.into_iter().filter(move |&v| parity_condition(v, h, k).holds)
}

fn trig_sweep() -> Line {
    let start = Instant::now();
    let (mut cases, mut worst, mut errors) = (0, 0f64, Vec::new());
    for k in 1..=15i64 {
        for h in (1..=k).filter(|h| h.gcd(&k) == 1) {
            for v in admissible(h, k) {
                let exact = to_f64(&hardy_berndt(&SumInput::new(v, h, k).unwrap()).unwrap());
                match classical_trig_series(v, h, k, 1e-10) {
                    Ok(x) => worst = worst.max((x - exact).abs()),
                    Err(e) => errors.push(format!("{v}({h},{k}): {e}")),
                }
                cases += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    line(
        errors.is_empty() && worst <= 1e-9 && secs < 5.0,
        format!(
            "trig series vs finite sums, k <= 15: {cases} cases, max err {worst:.2e}, {secs:.2} s, errors {errors:?}"
        ),
    )
}

fn qsum_recovery() -> Line {
    let opts = YSumOptions::default();
    let (mut cases, mut worst, mut errors) = (0, 0f64, Vec::new());
    for (h, k) in QSUM_PAIRS {
        for v in admissible(h, k) {
            let exact = to_f64(&hardy_berndt(&SumInput::new(v, h, k).unwrap()).unwrap());
            match q_hardy_berndt(v, h, k, &QParam::Limit1, None, &opts, ParityMode::Strict) {
                Ok(x) => worst = worst.max((x.value - exact).norm()),
                Err(e) => errors.push(format!("{v}({h},{k}): {e}")),
            }
            cases += 1;
        }
    }
    line(
        errors.is_empty() && worst <= 1e-6,
        format!("q = 1 q-sums recover finite sums: {cases} cases, max err {worst:.2e}, errors {errors:?}"),
    )
}

fn mellin_round_trips() -> Line {
    let start = Instant::now();
    let chi = characters_mod(4).unwrap().remove(1);
    let checks = [MellinCheck::ImQ, MellinCheck::ImQHurwitz(0.5), MellinCheck::LQ(chi)];
    let (mut cases, mut worst, mut failed) = (0, 0f64, Vec::new());
    for check in &checks {
        for s in [2.0, 3.0, 2.5] {
            for qq in ["3/10", "1/2", "4/5"] {
                match verify_mellin_definition(check, re(s), &q(qq), 1e-8) {
                    Ok(o) => {
                        worst = worst.max(o.abs_diff);
                        if !o.pass {
                            failed.push(format!("{} s={s} q={qq}", check.name()));
                        }
                    }
                    Err(e) => failed.push(format!("{} s={s} q={qq}: {e}", check.name())),
                }
                cases += 1;
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    line(
        failed.is_empty() && worst <= 1e-8 && secs < 10.0 && cases == 27,
        format!("Mellin transforms vs series: {cases} checks, max diff {worst:.2e}, {secs:.2} s, failed {failed:?}"),
    )
}

fn odd_characters() -> Vec<DirichletCharacter> {
    let mut v = characters_mod(3).unwrap();
    v.extend(characters_mod(5).unwrap());
    v
}

fn decomposition(two_variable: bool) -> Line {
    let (mut cases, mut worst, mut failed) = (0, 0f64, Vec::new());
    let xs: &[Option<f64>] = if two_variable { &[Some(0.25), Some(0.5)] } else { &[None] };
    for chi in odd_characters() {
        for s in [2.0, 3.0] {
            for qq in ["1/2", "1/3"] {
                for &x in xs {
                    let out = match x {
                        None => verify_l_decomposition(re(s), &chi, &q(qq), 1e-10),
                        Some(x) => verify_two_variable_decomposition(re(s), x, &chi, &q(qq), 1e-10),
                    };
                    let label = format!("chi={chi} s={s} q={qq} x={x:?}");
                    match out {
                        Ok(o) => {
                            worst = worst.max(o.abs_diff);
                            if !o.pass {
                                failed.push(label);
                            }
                        }
                        Err(e) => failed.push(format!("{label}: {e}")),
                    }
                    cases += 1;
                }
            }
        }
    }
    let what = if two_variable { "two-variable l_Gq" } else { "l_Gq" };
    line(
        failed.is_empty() && worst <= 1e-10,
        format!("{what} residue-class decomposition: {cases} cases, max diff {worst:.2e}, failed {failed:?}"),
    )
}

fn products() -> Line {
    let chi = characters_mod(4).unwrap().remove(1);
    let mut pass = true;
    let mut parts = Vec::new();
    for id in ProductIdentity::ALL {
        let c = id.needs_character().then_some(&chi);
        match verify_product_identity(id, re(2.0), &q("1/2"), c, 1e-4) {
            Ok(o) => {
                pass &= o.pass && o.abs_diff <= 1e-4;
                parts.push(format!("{} diff {:.2e}", id.label(), o.abs_diff));
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{}: {e}", id.label()));
            }
        }
    }
    line(pass, format!("product identities at s = 2, q = 1/2: {}", parts.join(", ")))
}

/// Coefficients of `1/a(t)` up to `t^n` for a power series with `a_0 != 0`.
fn invert(a: &[Rational], n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one() / &a[0]];
    for m in 1..=n {
        let s: Rational = (1..=m).map(|j| &a[j] * &b[m - j]).sum();
        b.push(-s / &a[0]);
    }
    b
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n).map(BigInt::from).product())
}

fn number_tables() -> Line {
    const N: usize = 30;
    // (e^t - 1)/t and (1 + e^t)/2 as power series
    let a_b: Vec<Rational> = (0..=N).map(|j| Rational::one() / factorial(j + 1)).collect();
    let a_e: Vec<Rational> =
        (0..=N).map(|j| if j == 0 { int(1) } else { Rational::one() / (int(2) * factorial(j)) }).collect();
    let b_oracle: Vec<Rational> = invert(&a_b, N).iter().enumerate().map(|(n, c)| c * factorial(n)).collect();
    let e_oracle: Vec<Rational> = invert(&a_e, N).iter().enumerate().map(|(n, c)| c * factorial(n)).collect();
    // 2t/(e^t+1) = t * 2/(e^t+1), so G_n = n E_{n-1}
    let g_oracle: Vec<Rational> =
        (0..=N).map(|n| if n == 0 { int(0) } else { int(n as i64) * &e_oracle[n - 1] }).collect();

    let b = number_table(NumberKind::Bernoulli, N).entries;
    let e = number_table(NumberKind::Euler, N).entries;
    let g = number_table(NumberKind::Genocchi, N).entries;
    let tables_ok = b == b_oracle && e == e_oracle && g == g_oracle;
    let relation_ok = (0..=N).all(|n| {
        let two_n = Rational::from_integer(num_traits::pow(BigInt::from(2), n));
        g[n] == int(2) * (Rational::one() - two_n) * &b[n]
    });

    let mut zeta_ok = true;
    let mut signs = Vec::new();
    let mut worst = 0f64;
    let mut em_worst = 0f64;
    for n in [2u64, 4, 6, 8] {
        let target = &g[n as usize] / int(n as i64);
        let s = re(1.0 - n as f64);
        let exact = genocchi_zeta_classical(s, 1e-14).unwrap().value.re;
        // Euler-Maclaurin continuation of zeta(1-n), independent of the Bernoulli route
        let two_n = 2f64.powi(n as i32);
        let hz = hurwitz_zeta(s, 1.0, 1e-15).unwrap();
        let em = -2.0 * (1.0 - two_n) * hz.value.re;
        let em_bound = 2.0 * (two_n - 1.0) * hz.tail_bound;
        let t = to_f64(&target);
        let err = (exact.abs() - t.abs()).abs();
        worst = worst.max(err);
        em_worst = em_worst.max((em - exact).abs());
        zeta_ok &= err <= 1e-12 && (em - exact).abs() <= em_bound;
        signs.push(if (exact - t).abs() <= 1e-12 { '+' } else { '-' });
    }
    let sign = if signs.iter().all(|&c| c == '+') {
        "zeta_G(1-n) = +G_n/n"
    } else if signs.iter().all(|&c| c == '-') {
        "zeta_G(1-n) = -G_n/n"
    } else {
        "mixed signs"
    };
    line(
        tables_ok && relation_ok && zeta_ok,
        format!(
            "number tables n <= 30: oracles {tables_ok}, G_n = 2(1-2^n)B_n {relation_ok}, \
             |zeta_G(1-n)| = |G_n/n| max err {worst:.2e}, \
             Euler-Maclaurin cross-check diff {em_worst:.2e}, observed {sign}"
        ),
    )
}

fn continuity() -> Line {
    let chi = characters_mod(4).unwrap().remove(1);
    let zg = genocchi_zeta_classical(re(2.0), 1e-13).unwrap().value;
    let lg = genocchi_l_classical(re(2.0), &chi, 1e-13).unwrap().value;
    let mut d_zeta = Vec::new();
    let mut d_l = Vec::new();
    for k in 2..=5u32 {
        let qq = QParam::real(Rational::one() - Rational::new(BigInt::one(), BigInt::from(10).pow(k))).unwrap();
        d_zeta.push(im_q(re(2.0), &qq, 1e-10, true).map(|v| (v.value - zg).norm()).unwrap_or(f64::NAN));
        d_l.push(l_q(re(2.0), &chi, &qq, 1e-10, true, None).map(|v| (v.value - lg).norm()).unwrap_or(f64::NAN));
    }
    let ok = |d: &[f64]| d.windows(2).all(|w| w[1] < w[0]) && d[d.len() - 1] <= 1e-3;
    let fmt = |d: &[f64]| d.iter().map(|x| format!("{x:.2e}")).collect::<Vec<_>>().join(" ");
    line(
        ok(&d_zeta) && ok(&d_l),
        format!(
            "q -> 1 continuity at s = 2, q = 1-10^-k, k = 2..5: Im_Gq [{}], l_Gq(chi mod 4) [{}]",
            fmt(&d_zeta),
            fmt(&d_l)
        ),
    )
}

/// Exact product of two character values.
fn mul(a: CharValue, b: CharValue) -> CharValue {
    match (a, b) {
        (CharValue::Root { num: n1, den: d1 }, CharValue::Root { num: n2, den: d2 }) => {
            let den = d1.lcm(&d2);
            let num = (n1 * (den / d1) + n2 * (den / d2)) % den;
            let g = num.gcd(&den);
            if num == 0 {
                CharValue::Root { num: 0, den: 1 }
            } else {
                CharValue::Root { num: num / g, den: den / g }
            }
        }
        _ => CharValue::Zero,
    }
}

fn characters() -> Line {
    let (mut chars, mut worst) = (0, 0f64);
    let mut bad = Vec::new();
    for f in 1..=24u64 {
        let all = characters_mod(f).unwrap();
        let phi = (1..=f).filter(|a| a.gcd(&f) == 1).count();
        if all.len() != phi {
            bad.push(format!("mod {f}: {} characters", all.len()));
        }
        for chi in &all {
            chars += 1;
            for m in 1..=200i64 {
                for n in 1..=200i64 {
                    let exact = chi.value(m * n) == mul(chi.value(m), chi.value(n));
                    let err = (chi.eval(m * n) - chi.eval(m) * chi.eval(n)).norm();
                    worst = worst.max(err);
                    let real_exact = !chi.is_real() || err == 0.0;
                    if !exact || err > 1e-12 || !real_exact {
                        bad.push(format!("chi={chi} m={m} n={n}"));
                    }
                }
            }
            let sum: Complex64 = (1..=f as i64).map(|a| chi.eval(a)).sum();
            let expect = if chi.is_principal() { phi as f64 } else { 0.0 };
            let err = (sum - expect).norm();
            worst = worst.max(err);
            if err > 1e-12 {
                bad.push(format!("chi={chi} sum {sum}"));
            }
        }
    }
    bad.truncate(5);
    line(
        bad.is_empty(),
        format!("characters mod f <= 24: {chars} characters, max float err {worst:.2e}, failures {bad:?}"),
    )
}

fn halving_stability() -> Line {
    let base = YSumOptions::default();
    let halved = YSumOptions { schedule: base.schedule.halved(), ..base.clone() };
    let (mut cases, mut worst_ratio, mut failed) = (0, 0f64, Vec::new());
    for (h, k) in QSUM_PAIRS {
        for v in admissible(h, k) {
            let a = q_hardy_berndt(v, h, k, &QParam::Limit1, None, &base, ParityMode::Strict);
            let b = q_hardy_berndt(v, h, k, &QParam::Limit1, None, &halved, ParityMode::Strict);
            match (a, b) {
                (Ok(a), Ok(b)) => {
                    let change = (a.value - b.value).norm();
                    let residual = a.y.residual * a.constant.norm();
                    if residual > 0.0 {
                        worst_ratio = worst_ratio.max(change / residual);
                    }
                    // an exactly vanishing sum has zero change and zero residual
                    if !(change < residual || change == 0.0) {
                        failed.push(format!("{v}({h},{k}) change {change:.2e} residual {residual:.2e}"));
                    }
                }
                _ => failed.push(format!("{v}({h},{k}) errored")),
            }
            cases += 1;
        }
    }
    line(
        failed.is_empty(),
        format!("halving the last offset moves q-sums by less than the residual: {cases} cases, max change/residual {worst_ratio:.2e}, failed {failed:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [fn() -> Line; 10] = [
        trig_sweep,
        qsum_recovery,
        mellin_round_trips,
        || decomposition(false),
        || decomposition(true),
        products,
        number_tables,
        continuity,
        characters,
        halving_stability,
    ];
    let mut failures = 0;
    for (i, run) in criteria.iter().enumerate() {
        let l = run();
        if !l.pass {
            failures += 1;
        }
        println!("acceptance {:>2}: {} {}", i + 1, if l.pass { "PASS" } else { "FAIL" }, l.detail);
    }
    println!("acceptance: {} of 10 passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
