use std::fmt;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::complex::BettiTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    InvalidInstance,
}

impl Status {
    pub fn is_ok(self) -> bool {
        matches!(self, Status::Pass | Status::NotApplicable)
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "NOT-APPLICABLE",
            Status::InvalidInstance => "INVALID-INSTANCE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Outcome of one check on one instance. A `Fail` always records the degrees
/// where `left` and `right` disagree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub instance: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub left: Option<BettiTable>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub right: Option<BettiTable>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub mismatched_degrees: Vec<i64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub detail: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub trace: Option<String>,
    #[serde(skip)]
    pub elapsed: Option<Duration>,
}

impl Report {
    fn bare(instance: &str, check: &str, status: Status) -> Self {
        Self {
            instance: instance.to_string(),
            check: check.to_string(),
            status,
            left: None,
            right: None,
            mismatched_degrees: Vec::new(),
            detail: Vec::new(),
            trace: None,
            elapsed: None,
        }
    }

    /// PASS iff the tables agree in every degree.
    pub fn compare(instance: &str, check: &str, left: BettiTable, right: BettiTable) -> Self {
        let mismatched = left.mismatches(&right);
        let status = if mismatched.is_empty() { Status::Pass } else { Status::Fail };
        Self {
            left: Some(left),
            right: Some(right),
            mismatched_degrees: mismatched,
            ..Self::bare(instance, check, status)
        }
    }

    pub fn not_applicable(instance: &str, check: &str, reason: impl Into<String>) -> Self {
        Self::bare(instance, check, Status::NotApplicable).with_detail(reason)
    }

    pub fn invalid(instance: &str, check: &str, reason: impl Into<String>) -> Self {
        Self::bare(instance, check, Status::InvalidInstance).with_detail(reason)
    }

    /// A failure that is not a table mismatch, e.g. a broken step inside a trace.
    pub fn fail(mut self, reason: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.detail.push(reason.into());
        self
    }

    pub fn with_detail(mut self, line: impl Into<String>) -> Self {
        self.detail.push(line.into());
        self
    }

    pub fn with_trace(mut self, trace: String) -> Self {
        self.trace = Some(trace);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<16} {:<18} {}", self.status, self.check, self.instance)?;
        if let Some(t) = self.elapsed {
            write!(f, "  ({:.1} ms)", t.as_secs_f64() * 1e3)?;
        }
        if let (Some(l), Some(r)) = (&self.left, &self.right) {
            write!(f, "\n    left  {l}\n    right {r}")?;
        }
        if !self.mismatched_degrees.is_empty() {
            write!(f, "\n    differs in degrees {:?}", self.mismatched_degrees)?;
        }
        for line in &self.detail {
            write!(f, "\n    {line}")?;
        }
        Ok(())
    }
}
