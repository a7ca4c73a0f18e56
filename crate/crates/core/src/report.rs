//! Verification reports shared by the checks in this crate.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::scalar::Scalar;

/// A witness for a failed check. Only the fields that make sense for the
/// check are filled in.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Counterexample {
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub r: Option<Vec<i64>>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub s: Option<Vec<i64>>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub grade: Option<Vec<i64>>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub payload: Option<Vec<Scalar>>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub alpha: Option<Vec<Scalar>>,
    pub detail: String,
}

/// One named sub-check, used where the check is a fixed table of items.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ReportEntry {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub samples: usize,
    pub passes: usize,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Vec::is_empty"))]
    pub entries: Vec<ReportEntry>,
    pub failures: Vec<Counterexample>,
}

impl CheckReport {
    pub fn new(check: &str) -> Self {
        Self {
            check: String::from(check),
            ..Self::default()
        }
    }

    pub fn param(mut self, key: &str, value: impl core::fmt::Display) -> Self {
        self.params
            .insert(String::from(key), alloc::format!("{value}"));
        self
    }

    pub fn record_pass(&mut self) {
        self.samples += 1;
        self.passes += 1;
    }

    pub fn record_failure(&mut self, c: Counterexample) {
        self.samples += 1;
        self.failures.push(c);
    }

    /// Records a pass or failure for a named table entry.
    pub fn record_entry(&mut self, label: String, passed: bool) {
        if passed {
            self.record_pass();
        } else {
            self.record_failure(Counterexample {
                detail: label.clone(),
                ..Counterexample::default()
            });
        }
        self.entries.push(ReportEntry { label, passed });
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.passes == self.samples
    }

    /// Absorbs another report's counts and failures.
    pub fn merge(&mut self, other: CheckReport) {
        self.samples += other.samples;
        self.passes += other.passes;
        self.entries.extend(other.entries);
        self.failures.extend(other.failures);
    }
}

/// Comma-separated rendering used for vector-valued report parameters.
pub fn join<T: core::fmt::Display>(v: &[T]) -> String {
    let mut s = String::new();
    for (i, x) in v.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{x}"));
    }
    s
}
