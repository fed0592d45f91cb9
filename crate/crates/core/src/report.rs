//! Structured pass/fail reports with a fixed JSON schema.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisNotMet => "hypothesis-not-met",
        }
    }

    /// `Fail` dominates, then `Pass`; all-unmet stays unmet.
    pub fn merge(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Pass, _) | (_, Pass) => Pass,
            _ => HypothesisNotMet,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub check: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub witness: Option<String>,
}

impl Detail {
    pub fn new(check: impl Into<String>, status: Status, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Detail {
            check: check.into(),
            status,
            expected: expected.into(),
            actual: actual.into(),
            witness: None,
        }
    }

    /// Pass when `ok`, fail otherwise.
    pub fn expect(check: impl Into<String>, ok: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Detail::new(check, status, expected, actual)
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub case: String,
    pub status: Status,
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub details: Vec<Detail>,
}

impl Report {
    pub fn new(case: impl Into<String>) -> Self {
        Report {
            case: case.into(),
            status: Status::HypothesisNotMet,
            seed: None,
            trials: None,
            details: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64, trials: u64) -> Self {
        self.seed = Some(seed);
        self.trials = Some(trials);
        self
    }

    /// Appends a detail and folds its status into the report status.
    pub fn push(&mut self, detail: Detail) {
        self.status = if self.details.is_empty() {
            detail.status
        } else {
            self.status.merge(detail.status)
        };
        self.details.push(detail);
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn count(&self, status: Status) -> usize {
        self.details.iter().filter(|d| d.status == status).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "case {}: {}", self.case, self.status.as_str());
        if let (Some(seed), Some(trials)) = (self.seed, self.trials) {
            let _ = write!(s, " (seed {seed}, trials {trials})");
        }
        s.push('\n');
        for d in &self.details {
            let _ = write!(s, "  [{}] {}: expected {}, got {}", d.status.as_str(), d.check, d.expected, d.actual);
            if let Some(w) = &d.witness {
                let _ = write!(s, "; witness {w}");
            }
            s.push('\n');
        }
        s
    }
}
