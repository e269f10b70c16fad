//! Machine-readable verification reports.
//!
//! Every verification suite produces a [`VerificationReport`]: a list of
//! named checks, each carrying both sides of the identity it asserts and
//! their residual. A `Documented` status records a computed discrepancy
//! between a printed formula variant and the adopted reading; it does
//! not fail the report.

use std::fmt;

use serde_json::{json, Value};

pub const REPORT_SCHEMA: &str = "chowgamma-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// A recorded discrepancy of a printed formula variant; informative.
    Documented,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Documented => write!(f, "documented"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub id: String,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Record an equality check of two displayable values.
    pub fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        id: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) {
        let status = if lhs == rhs {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        self.checks.push(Check {
            id: id.into(),
            status,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            residual: if status == CheckStatus::Pass {
                "0".into()
            } else {
                format!("{lhs} != {rhs}")
            },
            note: String::new(),
        });
    }

    /// Record a boolean condition.
    pub fn check_that(&mut self, id: impl Into<String>, holds: bool, note: impl Into<String>) {
        self.checks.push(Check {
            id: id.into(),
            status: if holds { CheckStatus::Pass } else { CheckStatus::Fail },
            lhs: holds.to_string(),
            rhs: "true".into(),
            residual: String::new(),
            note: note.into(),
        });
    }

    /// Record a computed printed-variant discrepancy without failing.
    pub fn document<T: PartialEq + fmt::Display>(
        &mut self,
        id: impl Into<String>,
        printed: &T,
        adopted: &T,
        note: impl Into<String>,
    ) {
        let agrees = printed == adopted;
        self.checks.push(Check {
            id: id.into(),
            status: CheckStatus::Documented,
            lhs: printed.to_string(),
            rhs: adopted.to_string(),
            residual: if agrees { "0".into() } else { "printed variant differs".into() },
            note: note.into(),
        });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// Checks sorted by identifier, making emission order-independent.
    fn sorted_checks(&self) -> Vec<&Check> {
        let mut refs: Vec<&Check> = self.checks.iter().collect();
        refs.sort_by(|a, b| a.id.cmp(&b.id));
        refs
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": REPORT_SCHEMA,
            "suite": self.suite,
            "status": if self.passed() { "pass" } else { "fail" },
            "checks": self.sorted_checks().iter().map(|c| json!({
                "id": c.id,
                "status": c.status.to_string(),
                "lhs": c.lhs,
                "rhs": c.rhs,
                "residual": c.residual,
                "note": c.note,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,check,status,lhs,rhs,residual,note\n");
        for c in self.sorted_checks() {
            let esc = |s: &str| {
                let mut t = s.replace('"', "\"\"");
                if t.contains(',') || t.contains('"') || t.contains('\n') {
                    t = format!("\"{t}\"");
                }
                t
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                esc(&self.suite),
                esc(&c.id),
                c.status,
                esc(&c.lhs),
                esc(&c.rhs),
                esc(&c.residual),
                esc(&c.note),
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in self.sorted_checks() {
            out.push_str(&format!("[{}] {}", c.status.to_string().to_uppercase(), c.id));
            if c.status == CheckStatus::Fail {
                out.push_str(&format!("\n    lhs = {}\n    rhs = {}", c.lhs, c.rhs));
            }
            if !c.note.is_empty() {
                out.push_str(&format!("\n    note: {}", c.note));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "suite {}: {}\n",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let r = VerificationReport::new("demo");
        assert!(r.passed());
        let j = r.to_json();
        assert_eq!(j["status"], "pass");
        assert_eq!(j["checks"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn failing_check_fails_report() {
        let mut r = VerificationReport::new("demo");
        r.check_eq("one-is-two", &1, &2);
        assert!(!r.passed());
        assert_eq!(r.to_json()["status"], "fail");
    }

    #[test]
    fn documented_discrepancy_does_not_fail() {
        let mut r = VerificationReport::new("demo");
        r.document("printed-variant", &1, &2, "printed formula differs from adopted reading");
        assert!(r.passed());
    }

    #[test]
    fn csv_escapes_commas() {
        let mut r = VerificationReport::new("demo");
        r.check_eq("poly", &"1, 2".to_string(), &"1, 2".to_string());
        assert!(r.to_csv().contains("\"1, 2\""));
    }
}
