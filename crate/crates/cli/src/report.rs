//! The JSON run report written by every checking command.

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use tnnflag_core::tpcells::report::{SuiteReport, SCHEMA};

#[derive(Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// `sha256:` of the canonical input JSON, hashed git-blob style.
    pub input_hash: String,
    pub inputs: Value,
    pub pass: bool,
    pub suites: Vec<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<Vec<SuiteTiming>>,
}

#[derive(Serialize)]
pub struct SuiteTiming {
    pub suite: String,
    pub subject: String,
    pub ms: u128,
}

/// `sha256("blob <len>\0<bytes>")` of the compact JSON (keys sorted).
pub fn input_hash(inputs: &Value) -> String {
    let body = serde_json::to_string(inputs).expect("inputs serialize");
    let mut h = Sha256::new();
    h.update(format!("blob {}\0", body.len()).as_bytes());
    h.update(body.as_bytes());
    format!("sha256:{:x}", h.finalize())
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, suites: Vec<SuiteReport>) -> Self {
        RunReport {
            schema: SCHEMA,
            tool: "tnnflag",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input_hash: input_hash(&inputs),
            pass: suites.iter().all(|s| s.pass),
            inputs,
            suites,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Writes the report (`-` is stdout) when a path is given.
    pub fn write(&self, out: Option<&Path>) -> Result<()> {
        let Some(path) = out else { return Ok(()) };
        if path == Path::new("-") {
            std::io::stdout().write_all(self.to_json().as_bytes())?;
        } else {
            std::fs::write(path, self.to_json()).with_context(|| format!("writing {}", path.display()))?;
        }
        Ok(())
    }

    /// One summary line per suite (with its time, when known), then an
    /// overall line.
    pub fn print_summary(&self, times: Option<&[SuiteTiming]>) {
        for (k, s) in self.suites.iter().enumerate() {
            match times.and_then(|t| t.get(k)) {
                Some(t) => println!("{} [{:.2}s]", s.summary(), t.ms as f64 / 1000.0),
                None => println!("{}", s.summary()),
            }
        }
        let failed = self.suites.iter().filter(|s| !s.pass).count();
        if failed == 0 {
            println!("PASS {} ({} suites)", self.command, self.suites.len());
        } else {
            println!("FAIL {} ({failed}/{} suites failed)", self.command, self.suites.len());
        }
    }
}
