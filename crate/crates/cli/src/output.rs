//! The JSON report envelope. Identical invocations must produce identical
//! bytes, so timings stay null unless explicitly requested and inputs are
//! carried in a sorted map.

use qtilt_core::report::{CheckReport, Condition};
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

#[derive(Serialize)]
pub struct Envelope {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub verdict: String,
    pub conditions: Vec<Condition>,
    pub output: Value,
    pub timings: Option<BTreeMap<String, u64>>,
}

/// What a verb produced: a human rendering, a JSON payload, and for
/// checks the underlying report.
pub struct Outcome {
    pub text: String,
    pub output: Value,
    pub report: Option<CheckReport>,
}

impl Outcome {
    pub fn plain(text: impl Into<String>, output: Value) -> Outcome {
        Outcome { text: text.into(), output, report: None }
    }

    pub fn check(report: CheckReport) -> Outcome {
        Outcome { text: report.to_string(), output: Value::Null, report: Some(report) }
    }

    pub fn exit_code(&self) -> i32 {
        match &self.report {
            Some(r) if !r.passed() => 1,
            _ => 0,
        }
    }

    pub fn envelope(
        &self,
        command: String,
        inputs: BTreeMap<String, Value>,
        timings: Option<BTreeMap<String, u64>>,
    ) -> Envelope {
        let verdict = match &self.report {
            Some(r) if !r.passed() => "fail",
            _ => "pass",
        };
        Envelope {
            command,
            inputs,
            verdict: verdict.into(),
            conditions: self
                .report
                .as_ref()
                .map(|r| r.conditions.clone())
                .unwrap_or_default(),
            output: self.output.clone(),
            timings,
        }
    }
}
