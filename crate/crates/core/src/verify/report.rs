use serde::{Deserialize, Serialize};

/// Context of one check: the spins it ran on, the mode, and in eval mode how
/// many sample points were used and how many of them failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckParams {
    pub spins: Vec<u32>,
    pub mode: String,
    pub sample_points: usize,
    pub failing_points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub params: CheckParams,
    /// True iff `residual_terms == 0`.
    pub passed: bool,
    /// Nonzero entries or terms in the difference of the two sides (in eval
    /// mode, the maximum over sample points).
    pub residual_terms: usize,
    /// The largest offending entry in canonical text, when there is one.
    pub witness: Option<String>,
    pub runtime_ms: u64,
}

/// Configuration echoed into the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub suite: String,
    pub spins: Vec<u32>,
    pub mode: String,
    pub points: usize,
    pub seed: u64,
    pub negative_control: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub version: String,
    pub config: ConfigEcho,
    /// Sorted by name.
    pub checks: Vec<CheckResult>,
    /// Conjunction of the member results.
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, config: ConfigEcho, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().all(|c| c.passed);
        Self { suite: suite.to_string(), version: env!("CARGO_PKG_VERSION").to_string(), config, checks, passed }
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
