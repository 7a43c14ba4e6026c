use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Cyclotomic, Phase8};

pub const REPORT_FORMAT_VERSION: u32 = 1;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Stated by the reference derivation.
    Reference,
    /// Computed by an independent oracle and frozen.
    Derived,
    /// Follows from definitions.
    Trivial,
}

/// A computed or expected quantity. Phases and amplitudes are exact; floats
/// only appear as oracle readings compared under a tolerance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Value {
    Bool { value: bool },
    Int { value: i64 },
    /// `pi_numerator / pi_denominator · π`.
    Phase { pi_numerator: i64, pi_denominator: i64 },
    /// `(a0 + a1 ω + a2 ω² + a3 ω³) · 2^{-t/2}`.
    Ring { a: [i64; 4], t: u32 },
    Float { value: f64 },
    Text { value: String },
    List { items: Vec<Value> },
}

impl Value {
    pub fn bool(b: bool) -> Self {
        Value::Bool { value: b }
    }

    pub fn int(v: impl TryInto<i64>) -> Self {
        Value::Int {
            value: v.try_into().ok().expect("fits in i64"),
        }
    }

    pub fn phase(p: Phase8) -> Self {
        let (pi_numerator, pi_denominator) = p.as_pi_fraction();
        Value::Phase {
            pi_numerator,
            pi_denominator,
        }
    }

    pub fn sign(s: i8) -> Self {
        Value::phase(if s < 0 { Phase8::MINUS_ONE } else { Phase8::ONE })
    }

    pub fn ring(c: Cyclotomic) -> Self {
        Value::Ring { a: c.a.0, t: c.t }
    }

    pub fn text(s: impl Into<String>) -> Self {
        Value::Text { value: s.into() }
    }

    pub fn float(v: f64) -> Self {
        Value::Float { value: v }
    }

    fn render(&self) -> String {
        match self {
            Value::Bool { value } => value.to_string(),
            Value::Int { value } => value.to_string(),
            Value::Phase {
                pi_numerator: 0, ..
            } => "0".into(),
            Value::Phase {
                pi_numerator,
                pi_denominator: 1,
            } => format!("{pi_numerator}π"),
            Value::Phase {
                pi_numerator,
                pi_denominator,
            } => format!("{pi_numerator}π/{pi_denominator}"),
            Value::Ring { a, t } => format!("({}+{}ω+{}ω²+{}ω³)/√2^{}", a[0], a[1], a[2], a[3], t),
            Value::Float { value } => format!("{value:.3e}"),
            Value::Text { value } => value.clone(),
            Value::List { items } => {
                let parts: Vec<String> = items.iter().map(Value::render).collect();
                format!("[{}]", parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    pub name: String,
    pub basis: Basis,
    pub expected: Value,
    pub computed: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    pub passed: bool,
    /// The object responsible for a failure.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offending: Option<String>,
}

impl Expectation {
    pub fn equal(name: impl Into<String>, basis: Basis, expected: Value, computed: Value) -> Self {
        Self {
            name: name.into(),
            basis,
            passed: expected == computed,
            expected,
            computed,
            tolerance: None,
            offending: None,
        }
    }

    pub fn holds(name: impl Into<String>, basis: Basis, ok: bool) -> Self {
        Self::equal(name, basis, Value::bool(true), Value::bool(ok))
    }

    /// `|computed − expected| ≤ tol`.
    pub fn within(name: impl Into<String>, basis: Basis, expected: f64, computed: f64, tol: f64) -> Self {
        Self {
            name: name.into(),
            basis,
            expected: Value::float(expected),
            computed: Value::float(computed),
            tolerance: Some(tol),
            passed: (computed - expected).abs() <= tol,
            offending: None,
        }
    }

    /// A reading with no reference value; informational and always passing.
    pub fn observed(name: impl Into<String>, computed: Value) -> Self {
        Self {
            name: name.into(),
            basis: Basis::Derived,
            expected: Value::text("unconstrained"),
            computed,
            tolerance: None,
            passed: true,
            offending: None,
        }
    }

    /// Attaches the offending object, kept only when the check failed.
    pub fn blame(mut self, what: impl Into<String>) -> Self {
        if !self.passed {
            self.offending = Some(what.into());
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub format_version: u32,
    pub scenario: String,
    pub lattices: Vec<String>,
    pub seed: u64,
    pub passed: bool,
    pub expectations: Vec<Expectation>,
    /// Wall-clock time; the only field that may differ between runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Report {
    pub fn new(scenario: &str, lattices: &[&str], seed: u64, expectations: Vec<Expectation>) -> Self {
        Self {
            format_version: REPORT_FORMAT_VERSION,
            scenario: scenario.into(),
            lattices: lattices.iter().map(|s| s.to_string()).collect(),
            seed,
            passed: expectations.iter().all(|e| e.passed),
            expectations,
            elapsed_ms: None,
        }
    }

    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: None,
            ..self.clone()
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Expectation> {
        self.expectations.iter().filter(|e| !e.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: Report = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if r.format_version != REPORT_FORMAT_VERSION {
            return Err(Error::Parse(format!("report format version {}", r.format_version)));
        }
        Ok(r)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = if self.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "{} [{}] {}", self.scenario, self.lattices.join(" "), status);
        for e in &self.expectations {
            let mark = if e.passed { "ok  " } else { "FAIL" };
            let _ = write!(s, "  {mark} {}: {}", e.name, e.computed.render());
            if !e.passed {
                let _ = write!(s, " (expected {})", e.expected.render());
            }
            if let Some(o) = &e.offending {
                let _ = write!(s, " at {o}");
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Report::new(
            "x",
            &["16-cell"],
            7,
            vec![
                Expectation::equal("phase", Basis::Reference, Value::sign(-1), Value::phase(Phase8::new(4))),
                Expectation::within("fid", Basis::Derived, 1.0, 1.0 - 1e-14, 1e-10),
                Expectation::holds("ok", Basis::Trivial, false).blame("cell 3"),
                Expectation::equal("amp", Basis::Derived, Value::ring(Cyclotomic::one()), Value::ring(Cyclotomic::one())),
            ],
        );
        assert!(!r.passed);
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert!(r.to_text().contains("FAIL ok"));
    }

    #[test]
    fn phases_are_pi_fractions() {
        assert_eq!(
            Value::phase(Phase8::new(2)),
            Value::Phase {
                pi_numerator: 1,
                pi_denominator: 2
            }
        );
        assert_eq!(Value::sign(1), Value::Phase { pi_numerator: 0, pi_denominator: 1 });
    }
}
