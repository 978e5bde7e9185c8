//! The common JSON shape shared by every check.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Bumped whenever a field changes meaning.
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<Cx> for Complex64 {
    fn from(z: Cx) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Deviation {
    pub absolute: f64,
    pub relative: f64,
}

impl Deviation {
    pub fn between(numeric: Complex64, target: Complex64) -> Self {
        let absolute = (numeric - target).norm();
        let relative = if target.norm() > 0.0 { absolute / target.norm() } else { absolute };
        Self { absolute, relative }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Confirmed,
    NotConfirmed,
}

impl Verdict {
    pub fn ok(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::Confirmed)
    }

    pub fn check(pass: bool) -> Self {
        if pass {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub lemma: String,
    pub params: serde_json::Value,
    pub numeric: Cx,
    pub target: Cx,
    pub deviation: Deviation,
    pub verdict: Verdict,
    pub diagnostics: serde_json::Value,
}

impl Report {
    pub fn new(lemma: &str, params: serde_json::Value, numeric: Complex64, target: Complex64, verdict: Verdict, diagnostics: serde_json::Value) -> Self {
        Self {
            version: REPORT_VERSION,
            lemma: lemma.to_string(),
            params,
            numeric: numeric.into(),
            target: target.into(),
            deviation: Deviation::between(numeric, target),
            verdict,
            diagnostics,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only finite-keyed data")
    }
}
