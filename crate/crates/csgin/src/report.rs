//! Machine-readable run reports.
//!
//! A report captures the command, a digest of the inputs, the seeds, the
//! computed results, and the verdicts of any requested checks.  Maps are
//! ordered and timing is opt-in, so a report is byte-identical across runs
//! with the same inputs and seed list.

use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn pass(check: impl Into<String>) -> Verdict {
        Verdict { check: check.into(), pass: true, detail: None }
    }

    pub fn fail(check: impl Into<String>, detail: impl Into<String>) -> Verdict {
        Verdict {
            check: check.into(),
            pass: false,
            detail: Some(detail.into()),
        }
    }

    pub fn from_bool(check: impl Into<String>, pass: bool, detail: impl FnOnce() -> String) -> Verdict {
        if pass {
            Verdict::pass(check)
        } else {
            Verdict::fail(check, detail())
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub field: String,
    pub order: String,
    pub seeds: Vec<u64>,
    pub results: BTreeMap<String, Value>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<String, u64>>,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            input_digest: input_digest.into(),
            field: String::new(),
            order: String::new(),
            seeds: Vec::new(),
            results: BTreeMap::new(),
            verdicts: Vec::new(),
            counterexample: None,
            timing_ms: None,
        }
    }

    pub fn insert(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values are plain data");
        self.results.insert(key.to_string(), v);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// 0 when every verdict passed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }

    pub fn render(&self, compact: bool) -> String {
        if compact {
            serde_json::to_string(self).expect("report serializes")
        } else {
            serde_json::to_string_pretty(self).expect("report serializes")
        }
    }
}
