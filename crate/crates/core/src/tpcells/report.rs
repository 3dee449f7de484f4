//! Suite reports: per-check counters with a few recorded witnesses.

use serde::{Deserialize, Serialize};

use crate::rational::RationalMatrix;

/// JSON report schema version.
pub const SCHEMA: u32 = 1;

/// Witnesses kept per check.
pub const MAX_WITNESSES: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub sample: usize,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<RationalMatrix>,
}

impl Witness {
    pub fn new(sample: usize, detail: impl Into<String>) -> Self {
        Witness { sample, detail: detail.into(), matrix: None }
    }

    pub fn with_matrix(mut self, m: &RationalMatrix) -> Self {
        self.matrix = Some(m.clone());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub witnesses: Vec<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check { name: name.into(), checked: 0, failed: 0, witnesses: Vec::new() }
    }

    pub fn pass(&self) -> bool {
        self.failed == 0
    }

    /// Counts one instance; `witness` is only built on failure.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn merge(&mut self, other: Check) {
        self.checked += other.checked;
        self.failed += other.failed;
        for w in other.witnesses {
            if self.witnesses.len() < MAX_WITNESSES {
                self.witnesses.push(w);
            }
        }
    }
}

/// A named group of checks. Check order is fixed by the suite, so equal
/// inputs give byte-identical JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub subject: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, subject: impl Into<String>, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(Check::pass);
        SuiteReport { suite: suite.into(), subject: subject.into(), pass, checks }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_witness(&self) -> Option<(&str, &Witness)> {
        self.checks
            .iter()
            .find_map(|c| c.witnesses.first().map(|w| (c.name.as_str(), w)))
    }

    /// One line: `PASS suite subject (n checks)` or the first failure.
    pub fn summary(&self) -> String {
        let total: usize = self.checks.iter().map(|c| c.checked).sum();
        if self.pass {
            format!("PASS {} {} ({total} checks)", self.suite, self.subject)
        } else {
            let failed: usize = self.checks.iter().map(|c| c.failed).sum();
            let first = self
                .first_witness()
                .map(|(c, w)| format!("; {c}: {}", w.detail))
                .unwrap_or_default();
            format!("FAIL {} {} ({failed}/{total} failed{first})", self.suite, self.subject)
        }
    }
}

/// Merges checks of the same name, keeping first-seen order.
pub fn merge_checks(parts: impl IntoIterator<Item = Vec<Check>>) -> Vec<Check> {
    let mut out: Vec<Check> = Vec::new();
    for part in parts {
        for c in part {
            match out.iter_mut().find(|o| o.name == c.name) {
                Some(o) => o.merge(c),
                None => out.push(c),
            }
        }
    }
    out
}
