//! Check results and the JSON report format.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok { Status::Pass } else { Status::Fail }
    }

    pub fn is_pass(self) -> bool {
        self == Status::Pass
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One named check with the evidence behind its verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub witness: Value,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, ok: bool, witness: impl Serialize) -> CheckResult {
        let witness = serde_json::to_value(witness).unwrap_or_else(|e| Value::String(e.to_string()));
        CheckResult { name: name.into(), status: Status::from_bool(ok), witness }
    }

    /// A check that could not run; the witness holds the error.
    pub fn error(name: impl Into<String>, err: impl fmt::Display) -> CheckResult {
        CheckResult { name: name.into(), status: Status::Fail, witness: serde_json::json!({ "error": err.to_string() }) }
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub status: Status,
    pub checks: Vec<CheckResult>,
    #[serde(rename = "elapsed-ms")]
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckResult>, elapsed_ms: u64) -> VerificationReport {
        let status = Status::from_bool(checks.iter().all(CheckResult::passed));
        VerificationReport { suite: suite.into(), status, checks, elapsed_ms }
    }

    pub fn passed(&self) -> bool {
        self.status.is_pass()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
