//! Check outcomes shared by the root checks and the verification harness.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The check's hypothesis does not hold for this input; not a failure.
    NotApplicable,
}

impl CheckStatus {
    pub fn is_fail(self) -> bool {
        self == CheckStatus::Fail
    }
}

/// One named check outcome. A failing record always carries the offending
/// values in `details`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: CheckStatus,
    pub details: String,
}

impl CheckRecord {
    pub fn pass(name: &str, details: impl Into<String>) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: CheckStatus::Pass,
            details: details.into(),
        }
    }

    pub fn fail(name: &str, details: impl Into<String>) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: CheckStatus::Fail,
            details: details.into(),
        }
    }

    pub fn not_applicable(name: &str, details: impl Into<String>) -> Self {
        CheckRecord {
            name: name.to_string(),
            status: CheckStatus::NotApplicable,
            details: details.into(),
        }
    }

    /// Pass/fail by predicate, with the same details either way.
    pub fn verdict(name: &str, ok: bool, details: impl Into<String>) -> Self {
        if ok {
            CheckRecord::pass(name, details)
        } else {
            CheckRecord::fail(name, details)
        }
    }
}
