//! End-to-end tests of the `hbq` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn hbq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbq")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = hbq(&a);
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn finite_sum_is_exact() {
    let r = json(&["finite", "--variant", "S", "--h", "1", "--k", "2"]);
    assert_eq!(r["pass"], true);
    assert_eq!(r["values"][0]["exact"], "1");
    let r = json(&["finite", "--variant", "dedekind", "--h", "1", "--k", "3"]);
    assert_eq!(r["values"][0]["exact"], "1/18");
}

#[test]
fn grid_report_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut runs = Vec::new();
    for _ in 0..2 {
        let out = hbq(&["verify", "trig-series", "--format", "json", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        runs.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(runs[0], runs[1]);
    let r: Value = serde_json::from_slice(&runs[0]).unwrap();
    let checks = r["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn floats_carry_seventeen_digits() {
    let out = hbq(&["zeta", "--func", "riemann", "--s", "2", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let re = text.lines().find(|l| l.trim_start().starts_with("\"re\"")).unwrap();
    let num = re.trim().trim_start_matches("\"re\": ").trim_end_matches(',');
    let (mantissa, _) = num.split_once('e').unwrap();
    assert_eq!(mantissa.replace(['.', '-'], "").len(), 17, "{num}");
    assert!((num.parse::<f64>().unwrap() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
}

#[test]
fn exit_codes() {
    assert_eq!(hbq(&["finite", "--variant", "S", "--h", "2", "--k", "4"]).status.code(), Some(2));
    assert_eq!(hbq(&["finite", "--bogus"]).status.code(), Some(2));
    assert_eq!(hbq(&["verify", "l-decomposition", "--s", "2", "--q", "1/2", "--chi", "4:1"]).status.code(), Some(2));
    // at odd s the two sides of a product identity differ by a constant ratio
    assert_eq!(hbq(&["verify", "product-y0", "--s", "3", "--q", "1/2"]).status.code(), Some(1));
    assert_eq!(
        hbq(&["verify", "l-decomposition", "--s", "2", "--q", "1/2", "--chi", "3:1", "--tol", "1e-10"]).status.code(),
        Some(0)
    );
}

#[test]
fn q_sum_at_one_recovers_finite_sum() {
    let r = json(&["qsum", "--variant", "s4", "--h", "1", "--k", "3", "--q", "1"]);
    let v = r["values"][0]["value"]["re"].as_f64().unwrap();
    assert!((v - 2.0).abs() < 1e-6, "{v}");
    assert_eq!(r["values"][0]["route"], "trig-series");
}

#[test]
fn csv_has_header_and_rows() {
    let out = hbq(&["verify", "mellin-defs", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("kind,name,params"));
    assert_eq!(lines.count(), 27);
}
