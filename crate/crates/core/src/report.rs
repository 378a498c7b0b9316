//! Verification reports: one row per identity and size.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// Outcome of comparing two computed sides of an identity at size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub n: usize,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl CheckRow {
    /// Passes iff `lhs == rhs`; both sides are rendered either way.
    pub fn compare<T: PartialEq + fmt::Display>(check: &str, n: usize, lhs: &T, rhs: &T) -> Self {
        CheckRow {
            check: check.to_string(),
            n,
            status: if lhs == rhs {
                Status::Pass
            } else {
                Status::Fail
            },
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    /// A row whose status was decided by the caller.
    pub fn new(check: &str, n: usize, ok: bool, lhs: String, rhs: String) -> Self {
        CheckRow {
            check: check.to_string(),
            n,
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} n={}", self.status, self.check, self.n)?;
        if self.status == Status::Fail {
            write!(f, ": {} != {}", self.lhs, self.rhs)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub passed: bool,
    pub rows: Vec<CheckRow>,
}

impl Report {
    pub fn new(rows: Vec<CheckRow>) -> Self {
        Report {
            passed: rows.iter().all(CheckRow::passed),
            rows,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.passed())
    }
}
