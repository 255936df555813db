//! Structured pass/fail records shared by all checks.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub system: Option<u32>,
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub n_points: usize,
    pub seed: Option<u64>,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(check: &str, system: Option<u32>) -> Self {
        VerificationReport {
            tool_version: TOOL_VERSION.to_string(),
            system,
            check: check.to_string(),
            params: BTreeMap::new(),
            n_points: 0,
            seed: None,
            max_abs_err: 0.0,
            max_rel_err: 0.0,
            tol: 0.0,
            pass: false,
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), v.into());
        self
    }

    /// Sets `pass` from the error selected by `params["mode"]` ("abs" or "rel").
    pub fn decide(mut self) -> Self {
        let rel = self.params.get("mode").and_then(Value::as_str) == Some("rel");
        let err = if rel { self.max_rel_err } else { self.max_abs_err };
        self.pass = err.is_finite() && err <= self.tol;
        self
    }
}

/// Maximum that propagates NaN (a NaN error must fail the check).
pub fn nan_max(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::NAN
    } else {
        a.max(b)
    }
}
