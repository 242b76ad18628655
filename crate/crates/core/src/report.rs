//! Verdicts, check records and machine-readable reports.
//!
//! A [`Verdict`] is the result of a decision procedure that may be bounded:
//! `Verified` means proved, `Falsified` always carries a re-checkable
//! witness, `Unknown` records the search bound that was exhausted. Reports
//! aggregate named checks; their JSON serialization has stable field names
//! (`command`, `checks`, `status`, `witnesses`, `elapsed_ms`) and is
//! deterministic for a fixed command and build.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Outcome of a single check or of a whole report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Verified,
    Falsified,
    Unknown,
}

impl Status {
    /// Process exit code: 0 verified, 1 falsified, 2 unknown. (Exit code 3
    /// is reserved for internal equivalence violations, which surface as
    /// errors rather than statuses.)
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Falsified => 1,
            Status::Unknown => 2,
        }
    }

    /// Combines statuses: any Falsified dominates, then any Unknown.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Falsified, _) | (_, Falsified) => Falsified,
            (Unknown, _) | (_, Unknown) => Unknown,
            _ => Verified,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Verified => write!(f, "VERIFIED"),
            Status::Falsified => write!(f, "FALSIFIED"),
            Status::Unknown => write!(f, "UNKNOWN"),
        }
    }
}

/// Result of a bounded decision procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Verified,
    /// Falsified with a re-checkable witness (rendered deterministically).
    Falsified { witness: String },
    /// Search exhausted the stated bound without deciding.
    Unknown { bound: u64 },
}

impl Verdict {
    pub fn status(&self) -> Status {
        match self {
            Verdict::Verified => Status::Verified,
            Verdict::Falsified { .. } => Status::Falsified,
            Verdict::Unknown { .. } => Status::Unknown,
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            Verdict::Falsified { witness } => Some(witness),
            _ => None,
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }

    pub fn is_falsified(&self) -> bool {
        matches!(self, Verdict::Falsified { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Verified => write!(f, "VERIFIED"),
            Verdict::Falsified { witness } => write!(f, "FALSIFIED witness={witness}"),
            Verdict::Unknown { bound } => write!(f, "UNKNOWN bound={bound}"),
        }
    }
}

/// One named check inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witnesses: Vec<String>,
    /// Free-form detail lines (counts, element displays); deterministic.
    pub detail: Vec<String>,
}

impl Check {
    pub fn verified(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Verified,
            witnesses: Vec::new(),
            detail: Vec::new(),
        }
    }

    pub fn from_verdict(name: impl Into<String>, v: &Verdict) -> Self {
        Check {
            name: name.into(),
            status: v.status(),
            witnesses: v.witness().map(|w| w.to_string()).into_iter().collect(),
            detail: match v {
                Verdict::Unknown { bound } => vec![format!("bound={bound}")],
                _ => Vec::new(),
            },
        }
    }

    pub fn with_detail(mut self, line: impl Into<String>) -> Self {
        self.detail.push(line.into());
        self
    }

    pub fn with_witness(mut self, w: impl Into<String>) -> Self {
        self.witnesses.push(w.into());
        self
    }
}

/// Aggregated result of a command or suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
            status: Status::Verified,
            witnesses: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.status = self.status.combine(check.status);
        self.witnesses.extend(check.witnesses.iter().cloned());
        self.checks.push(check);
    }

    /// Stable, deterministic JSON rendering (two-space indent, field order
    /// fixed by struct declaration).
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering: one line per check, then an overall line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.command));
        for c in &self.checks {
            out.push_str(&format!("CHECK {}: {}", c.name, c.status));
            for w in &c.witnesses {
                out.push_str(&format!(" witness={w}"));
            }
            out.push('\n');
            for d in &c.detail {
                out.push_str(&format!("  {d}\n"));
            }
        }
        out.push_str(&format!("OVERALL: {}\n", self.status));
        out
    }
}
