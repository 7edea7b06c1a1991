//! Structured verification results.
//!
//! Every checker returns a [`Report`] made of named [`CheckRecord`]s. A record
//! fails iff it carries at least one [`Failure`], and a report fails iff any
//! record fails.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub indices: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<Failure>,
    /// Informational text; never affects `passed`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(name: impl Into<String>, failures: Vec<Failure>) -> Self {
        CheckRecord {
            name: name.into(),
            passed: failures.is_empty(),
            failures,
            note: None,
        }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Self::new(name, Vec::new())
    }

    /// A failing record with a single message and no index tuple.
    pub fn fail(name: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Self::new(
            name,
            vec![Failure {
                indices: Vec::new(),
                lhs: lhs.into(),
                rhs: rhs.into(),
            }],
        )
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            for fl in &c.failures {
                writeln!(f, "  at {:?}: lhs = {}, rhs = {}", fl.indices, fl.lhs, fl.rhs)?;
            }
        }
        Ok(())
    }
}
