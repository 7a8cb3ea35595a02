use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;
use sha2::{Digest, Sha256};
use tubealg::{Check, Error};

#[derive(Debug, Serialize)]
pub struct Input {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Everything printed on stdout for one invocation.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: BTreeMap<String, Input>,
    pub seed: u64,
    pub max_exhaustive: usize,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: u128,
}

impl RunReport {
    pub fn new(command: Vec<String>, seed: u64, max_exhaustive: usize) -> RunReport {
        RunReport {
            command,
            inputs: BTreeMap::new(),
            seed,
            max_exhaustive,
            checks: vec![],
            result: None,
            error: None,
            elapsed_ms: 0,
        }
    }

    /// Reads a file, recording its digest under `flag`.
    pub fn read(&mut self, flag: &str, path: &Path) -> Result<Vec<u8>, Error> {
        let bytes = std::fs::read(path).map_err(|e| Error::format(format!("{}: {e}", path.display())))?;
        let digest = hex::encode(Sha256::digest(&bytes));
        self.inputs.insert(flag.to_string(), Input { path: path.display().to_string(), sha256: digest });
        Ok(bytes)
    }

    pub fn check(&mut self, name: &str, outcome: Check) -> bool {
        let passed = outcome.is_ok();
        let record = match outcome {
            Ok(()) => CheckRecord { name: name.into(), passed, witness: None, detail: String::new() },
            Err(f) => {
                log::warn!("{name}: {f}");
                CheckRecord { name: name.into(), passed, witness: Some(f.witness), detail: format!("{}: {}", f.check, f.detail) }
            }
        };
        self.checks.push(record);
        passed
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.passed)
    }
}
