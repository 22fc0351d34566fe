//! Machine-readable check reports with a canonical byte form for
//! determinism comparisons (timing stays outside the canonical payload).

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportParams {
    pub p: u16,
    pub r: usize,
    pub e_max: u8,
    pub n_max: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub bundle: String,
    pub params: ReportParams,
    pub verdict: Verdict,
    /// Counterexample data on failure; replayable with the recorded seed.
    pub witnesses: Vec<String>,
    /// One line per verified sub-criterion.
    pub details: Vec<String>,
    /// Wall-clock milliseconds; excluded from the canonical bytes.
    pub timing_ms: u128,
}

impl CheckReport {
    /// Canonical serialization: everything except timing, byte-exact for a
    /// fixed seed and inputs.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut clone = self.clone();
        clone.timing_ms = 0;
        serde_json::to_vec(&clone).expect("report serialization cannot fail")
    }

    pub fn table_row(&self) -> String {
        format!(
            "{:<18} {:<16} {:<13} {:>8} ms  {}",
            self.check,
            self.bundle,
            self.verdict.as_str(),
            self.timing_ms,
            if self.witnesses.is_empty() {
                String::new()
            } else {
                format!("witness: {}", self.witnesses[0])
            }
        )
    }
}

/// Aggregate exit code: fail dominates inconclusive dominates pass.
pub fn aggregate_exit(reports: &[CheckReport]) -> i32 {
    let mut code = 0;
    for r in reports {
        code = code.max(r.verdict.exit_code());
    }
    code
}
