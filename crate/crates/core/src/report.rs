//! Check reports shared by the validators and the curvature conditions.
//!
//! Indices stored in reports are frame labels (1-based), ready for display.

use std::fmt;

use serde::Serialize;

use crate::scalar::Rational;

/// One failing component of a structural check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub indices: Vec<usize>,
    pub value: Rational,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(usize::to_string).collect();
        write!(f, "{} at ({}) = {}", self.check, idx.join(","), self.value)
    }
}

/// Every violated component of a validation pass. Empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, check: &'static str, indices: &[usize], value: Rational) {
        self.violations.push(Violation {
            check,
            indices: indices.iter().map(|i| i + 1).collect(),
            value,
        });
    }

    /// Record `value` as a violation unless it is zero.
    pub fn require_zero(&mut self, check: &'static str, indices: &[usize], value: Rational) {
        if !value.is_zero() {
            self.push(check, indices, value);
        }
    }

    pub fn has_check(&self, check: &str) -> bool {
        self.violations.iter().any(|v| v.check == check)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// Outcome of a componentwise tensor identity: holds iff every component is
/// exactly zero; otherwise carries the largest-magnitude component (first in
/// index order on ties).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub id: String,
    pub holds: bool,
    pub worst: Option<Component>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub indices: Vec<usize>,
    pub value: Rational,
}

impl ConditionReport {
    pub fn evaluate(id: impl Into<String>) -> ConditionBuilder {
        ConditionBuilder { id: id.into(), worst: None }
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.worst {
            None => write!(f, "{}: holds", self.id),
            Some(c) => {
                let idx: Vec<String> = c.indices.iter().map(usize::to_string).collect();
                write!(f, "{}: fails, worst component ({}) = {}", self.id, idx.join(","), c.value)
            }
        }
    }
}

pub struct ConditionBuilder {
    id: String,
    worst: Option<Component>,
}

impl ConditionBuilder {
    /// Feed one component; `indices` are 0-based and stored 1-based.
    pub fn component(&mut self, indices: &[usize], value: Rational) {
        if value.is_zero() {
            return;
        }
        let replace = match &self.worst {
            None => true,
            Some(w) => value.abs() > w.value.abs(),
        };
        if replace {
            self.worst = Some(Component {
                indices: indices.iter().map(|i| i + 1).collect(),
                value,
            });
        }
    }

    pub fn finish(self) -> ConditionReport {
        ConditionReport { id: self.id, holds: self.worst.is_none(), worst: self.worst }
    }
}
