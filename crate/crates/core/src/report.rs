//! Structured verdicts for the decision procedures. A report is a named
//! list of conditions, each pass/fail/skipped with a human-readable detail
//! line; failing conditions always carry at least one concrete witness.

use serde::ser::SerializeStruct;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "FAIL"),
            Status::Skipped => write!(f, "skip"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub witnesses: Vec<String>,
}

impl Condition {
    pub fn pass(id: &str, detail: impl Into<String>) -> Condition {
        Condition {
            id: id.into(),
            status: Status::Pass,
            detail: detail.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn fail(
        id: &str,
        detail: impl Into<String>,
        witnesses: Vec<String>,
    ) -> Condition {
        let detail = detail.into();
        // A failure must point at something concrete.
        let witnesses = if witnesses.is_empty() {
            vec![detail.clone()]
        } else {
            witnesses
        };
        Condition { id: id.into(), status: Status::Fail, detail, witnesses }
    }

    pub fn skipped(id: &str, detail: impl Into<String>) -> Condition {
        Condition {
            id: id.into(),
            status: Status::Skipped,
            detail: detail.into(),
            witnesses: Vec::new(),
        }
    }

    pub fn from_bool(
        id: &str,
        ok: bool,
        detail: impl Into<String>,
        witnesses: Vec<String>,
    ) -> Condition {
        if ok {
            Condition::pass(id, detail)
        } else {
            Condition::fail(id, detail, witnesses)
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub conditions: Vec<Condition>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> CheckReport {
        CheckReport { name: name.into(), conditions: Vec::new() }
    }

    pub fn push(&mut self, c: Condition) {
        self.conditions.push(c);
    }

    /// Overall verdict: pass when no condition failed (skips don't count
    /// against it).
    pub fn verdict(&self) -> Status {
        if self.conditions.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict() == Status::Pass
    }

    pub fn condition(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }

    /// All witnesses of failing conditions, in report order.
    pub fn failure_witnesses(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .filter(|c| c.status == Status::Fail)
            .flat_map(|c| c.witnesses.iter().map(|w| w.as_str()))
            .collect()
    }
}

impl Serialize for CheckReport {
    fn serialize<S: serde::Serializer>(
        &self,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckReport", 3)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("verdict", &self.verdict())?;
        st.serialize_field("conditions", &self.conditions)?;
        st.end()
    }
}

impl std::fmt::Display for CheckReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "check {}: {}",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.conditions {
            write!(f, "  [{}] {:<8} {}", c.status, c.id, c.detail)?;
            if c.status == Status::Fail {
                write!(f, "  (witness: {})", c.witnesses.join("; "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
