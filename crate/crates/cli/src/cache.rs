//! Append-only JSON-lines store of computed results.
//!
//! Every record is keyed by the SHA-256 of the canonical query and the engine
//! version, so a version bump silently invalidates old records. The cache is
//! best effort: unreadable lines and I/O failures produce warnings only.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QueryRecord {
    pub key: String,
    pub query: String,
    pub result: serde_json::Value,
    pub engine_version: String,
}

pub fn cache_key(query: &str, engine_version: &str) -> String {
    let mut h = Sha256::new();
    h.update(query.as_bytes());
    h.update([0u8]);
    h.update(engine_version.as_bytes());
    hex::encode(h.finalize())
}

pub struct Cache {
    path: PathBuf,
    engine_version: String,
    warnings: Vec<String>,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>, engine_version: impl Into<String>) -> Self {
        Cache { path: path.into(), engine_version: engine_version.into(), warnings: Vec::new() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Warnings collected since the last call.
    pub fn take_warnings(&mut self) -> Vec<String> {
        std::mem::take(&mut self.warnings)
    }

    pub fn get(&mut self, query: &str) -> Option<QueryRecord> {
        let key = cache_key(query, &self.engine_version);
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                self.warnings.push(format!("cannot read cache {}: {e}", self.path.display()));
                return None;
            }
        };
        let mut found = None;
        for (lineno, line) in BufReader::new(file).lines().enumerate() {
            let line = match line {
                Ok(l) => l,
                Err(e) => {
                    self.warnings.push(format!("cache {} line {}: {e}", self.path.display(), lineno + 1));
                    break;
                }
            };
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<QueryRecord>(&line) {
                Ok(r) if r.key == key && r.engine_version == self.engine_version && r.query == query => {
                    found = Some(r);
                }
                Ok(_) => {}
                Err(_) => {
                    self.warnings.push(format!("skipping corrupt cache line {} in {}", lineno + 1, self.path.display()))
                }
            }
        }
        found
    }

    pub fn put(&mut self, query: &str, result: serde_json::Value) {
        let record = QueryRecord {
            key: cache_key(query, &self.engine_version),
            query: query.to_string(),
            result,
            engine_version: self.engine_version.clone(),
        };
        if let Err(e) = self.append(&record) {
            self.warnings.push(format!("cannot write cache {}: {e}", self.path.display()));
        }
    }

    fn append(&self, record: &QueryRecord) -> std::io::Result<()> {
        let mut line = serde_json::to_string(record).map_err(std::io::Error::other)?;
        line.push('\n');
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        file.lock()?;
        let res = file.write_all(line.as_bytes()).and_then(|_| file.flush());
        file.unlock()?;
        res
    }
}
