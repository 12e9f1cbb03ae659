use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

/// Outcome of one `verify` run. Checks are sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    #[serde(rename = "N")]
    pub n: u32,
    pub params: BTreeMap<String, u64>,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: &str, seed: u64, n: u32, params: BTreeMap<String, u64>, mut checks: Vec<CheckResult>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        let summary = Summary {
            total: checks.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            errors: count(Status::Error),
        };
        Report {
            suite: suite.to_string(),
            seed,
            n,
            params,
            checks,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(id: &str, status: Status) -> CheckResult {
        CheckResult {
            id: id.into(),
            status,
            detail: String::new(),
            elapsed_ms: 0,
        }
    }

    #[test]
    fn summary_and_order() {
        let r = Report::new(
            "s",
            1,
            3,
            BTreeMap::new(),
            vec![result("b", Status::Pass), result("a", Status::Fail), result("c", Status::Error)],
        );
        assert_eq!(r.checks.iter().map(|c| c.id.as_str()).collect::<Vec<_>>(), ["a", "b", "c"]);
        assert_eq!(r.summary, Summary { total: 3, passed: 1, failed: 1, errors: 1 });
        assert!(!r.all_passed());
    }

    #[test]
    fn status_serializes_lowercase() {
        assert_eq!(serde_json::to_string(&Status::Pass).unwrap(), "\"pass\"");
        let r = Report::new("s", 0, 3, BTreeMap::new(), vec![result("a", Status::Pass)]);
        assert!(r.all_passed());
        assert!(serde_json::to_string(&r).unwrap().contains("\"N\":3"));
    }
}
