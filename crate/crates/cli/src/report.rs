//! Report model and its JSON, CSV and text renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hbq::outcome::VerificationOutcome;
use num_complex::Complex64;
use serde::de::{self, Deserializer};
use serde::ser::{Error as _, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

/// A float written with 17 significant digits; non-finite values as strings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Float(pub f64);

impl Serialize for Float {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let x = self.0;
        if x.is_nan() {
            s.serialize_str("NaN")
        } else if x.is_infinite() {
            s.serialize_str(if x > 0.0 { "inf" } else { "-inf" })
        } else {
            RawValue::from_string(format!("{x:.16e}")).map_err(S::Error::custom)?.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for Float {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(f64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(x) => Ok(Float(x)),
            Repr::Str(s) => match s.as_str() {
                "NaN" => Ok(Float(f64::NAN)),
                "inf" => Ok(Float(f64::INFINITY)),
                "-inf" => Ok(Float(f64::NEG_INFINITY)),
                _ => Err(de::Error::custom(format!("not a float: {s:?}"))),
            },
        }
    }
}

/// Complex number as `{re, im}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx {
    pub re: Float,
    pub im: Float,
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx { re: Float(z.re), im: Float(z.im) }
    }
}

/// One identity check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub lhs: Cx,
    pub rhs: Cx,
    pub lhs_bound: Float,
    pub rhs_bound: Float,
    pub abs_diff: Float,
    pub tolerance: Float,
    pub pass: bool,
    pub route: String,
    pub notes: Vec<String>,
}

impl From<VerificationOutcome> for CheckRecord {
    fn from(o: VerificationOutcome) -> Self {
        CheckRecord {
            check: o.check,
            params: o.params.into_iter().collect(),
            lhs: o.lhs.into(),
            rhs: o.rhs.into(),
            lhs_bound: Float(o.lhs_bound),
            rhs_bound: Float(o.rhs_bound),
            abs_diff: Float(o.abs_diff),
            tolerance: Float(o.tolerance),
            pass: o.pass,
            route: o.route,
            notes: o.notes,
        }
    }
}

impl CheckRecord {
    /// A case whose computation failed; recorded as a failing check.
    pub fn failed(check: &str, params: Vec<(String, String)>, tolerance: f64, err: &hbq::Error) -> Self {
        let nan = Cx::from(Complex64::new(f64::NAN, f64::NAN));
        CheckRecord {
            check: check.to_string(),
            params: params.into_iter().collect(),
            lhs: nan,
            rhs: nan,
            lhs_bound: Float(f64::NAN),
            rhs_bound: Float(f64::NAN),
            abs_diff: Float(f64::NAN),
            tolerance: Float(tolerance),
            pass: false,
            route: "error".into(),
            notes: vec![err.to_string()],
        }
    }

    fn key(&self) -> (&str, &BTreeMap<String, String>) {
        (&self.check, &self.params)
    }
}

/// A computed value with its route and error certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValueRecord {
    pub name: String,
    pub params: BTreeMap<String, String>,
    /// Exact rendering when the value is exact.
    pub exact: Option<String>,
    pub value: Option<Cx>,
    pub route: String,
    /// Certified truncation bound, when the route has one.
    pub tail_bound: Option<Float>,
    /// Extrapolation residual estimate, for regularized values.
    pub residual: Option<Float>,
    pub terms_used: Option<usize>,
    pub notes: Vec<String>,
}

impl ValueRecord {
    pub fn new(name: impl Into<String>, params: Vec<(String, String)>, route: impl Into<String>) -> Self {
        ValueRecord {
            name: name.into(),
            params: params.into_iter().collect(),
            exact: None,
            value: None,
            route: route.into(),
            tail_bound: None,
            residual: None,
            terms_used: None,
            notes: Vec::new(),
        }
    }

    pub fn exact(mut self, text: impl Into<String>, approx: f64) -> Self {
        self.exact = Some(text.into());
        self.value = Some(Complex64::new(approx, 0.0).into());
        self.tail_bound = Some(Float(0.0));
        self
    }

    pub fn series(mut self, v: &hbq::SeriesValue) -> Self {
        self.value = Some(v.value.into());
        self.tail_bound = Some(Float(v.tail_bound));
        self.terms_used = Some(v.terms_used);
        self
    }

    pub fn value(mut self, z: Complex64, tail_bound: f64) -> Self {
        self.value = Some(z.into());
        self.tail_bound = Some(Float(tail_bound));
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

/// Everything one invocation produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub command: Vec<String>,
    /// All checks passed (vacuously true without checks).
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    pub values: Vec<ValueRecord>,
}

impl Report {
    pub fn new(command: Vec<String>, mut checks: Vec<CheckRecord>, values: Vec<ValueRecord>) -> Self {
        checks.sort_by(|a, b| a.key().cmp(&b.key()));
        let pass = checks.iter().all(|c| c.pass);
        Report { tool: "hbq".into(), version: env!("CARGO_PKG_VERSION").into(), command, pass, checks, values }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "kind",
            "name",
            "params",
            "re",
            "im",
            "rhs_re",
            "rhs_im",
            "bound",
            "abs_diff",
            "tolerance",
            "pass",
            "route",
            "exact",
            "notes",
        ])
        .expect("in-memory write");
        let f = |x: f64| format!("{x:.16e}");
        let of = |x: Option<Float>| x.map(|v| f(v.0)).unwrap_or_default();
        for c in &self.checks {
            w.write_record([
                "check".to_string(),
                c.check.clone(),
                params_text(&c.params),
                f(c.lhs.re.0),
                f(c.lhs.im.0),
                f(c.rhs.re.0),
                f(c.rhs.im.0),
                f(c.lhs_bound.0.max(c.rhs_bound.0)),
                f(c.abs_diff.0),
                f(c.tolerance.0),
                c.pass.to_string(),
                c.route.clone(),
                String::new(),
                c.notes.join("; "),
            ])
            .expect("in-memory write");
        }
        for v in &self.values {
            w.write_record([
                "value".to_string(),
                v.name.clone(),
                params_text(&v.params),
                v.value.map(|z| f(z.re.0)).unwrap_or_default(),
                v.value.map(|z| f(z.im.0)).unwrap_or_default(),
                String::new(),
                String::new(),
                of(v.tail_bound.or(v.residual)),
                String::new(),
                String::new(),
                String::new(),
                v.route.clone(),
                v.exact.clone().unwrap_or_default(),
                v.notes.join("; "),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.values {
            let _ = write!(out, "{}", v.name);
            if !v.params.is_empty() {
                let _ = write!(out, " [{}]", params_text(&v.params));
            }
            match (&v.exact, v.value) {
                (Some(e), _) => {
                    let _ = write!(out, " = {e}");
                }
                (None, Some(z)) => {
                    let _ = write!(out, " = {}", fmt_cx(z));
                }
                (None, None) => {}
            }
            if let Some(b) = v.tail_bound {
                let _ = write!(out, "  (bound {:.3e})", b.0);
            }
            if let Some(r) = v.residual {
                let _ = write!(out, "  (residual {:.3e})", r.0);
            }
            let _ = writeln!(out, "  [{}]", v.route);
            for n in &v.notes {
                let _ = writeln!(out, "    {n}");
            }
        }
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{}  {} [{}]  |diff| = {:.3e}  tol = {:.1e}",
                if c.pass { "PASS" } else { "FAIL" },
                c.check,
                params_text(&c.params),
                c.abs_diff.0,
                c.tolerance.0
            );
            for n in &c.notes {
                let _ = writeln!(out, "    {n}");
            }
        }
        if !self.checks.is_empty() {
            let passed = self.checks.iter().filter(|c| c.pass).count();
            let _ = writeln!(out, "{passed}/{} checks passed", self.checks.len());
        }
        out
    }
}

fn params_text(p: &BTreeMap<String, String>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn fmt_cx(z: Cx) -> String {
    if z.im.0 == 0.0 {
        format!("{:.17}", z.re.0)
    } else {
        format!("{:.17} {} {:.17}i", z.re.0, if z.im.0 < 0.0 { '-' } else { '+' }, z.im.0.abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let v = ValueRecord::new("x", vec![("a".into(), "1".into())], "series")
            .value(Complex64::new(0.1 + 0.2, -1e-300), 3e-17)
            .note("n");
        let c = CheckRecord::failed("c", vec![], 1e-9, &hbq::Error::Domain("bad".into()));
        let r = Report::new(vec!["hbq".into()], vec![c], vec![v]);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back.values, r.values);
        assert!(back.checks[0].lhs.re.0.is_nan());
        assert_eq!(back.to_json(), r.to_json());
    }

    #[test]
    fn seventeen_digits() {
        let s = serde_json::to_string(&Float(0.1)).unwrap();
        assert_eq!(s, "1.0000000000000001e-1");
    }
}
