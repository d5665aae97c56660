//! Append-only JSONL store of claim records.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use scatterlab::verify::ClaimRecord;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LedgerError {
    #[error("ledger i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("ledger line {line}: {msg}")]
    Corrupt { line: usize, msg: String },
    #[error("discrepancy for key {key}: stored {stored}, new {new}")]
    Discrepancy { key: String, stored: String, new: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ack {
    Appended,
    Duplicate,
}

pub struct VerifyLedger {
    path: PathBuf,
}

impl VerifyLedger {
    pub fn new(path: impl Into<PathBuf>) -> VerifyLedger {
        VerifyLedger { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All records in file order; a missing file is an empty ledger.
    pub fn entries(&self) -> Result<Vec<ClaimRecord>, LedgerError> {
        let f = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(f).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec = serde_json::from_str(&line).map_err(|e| LedgerError::Corrupt { line: i + 1, msg: e.to_string() })?;
            out.push(rec);
        }
        Ok(out)
    }

    /// Appends unless a record with the same key exists; an existing record
    /// with a different outcome or evidence is a discrepancy.
    pub fn append(&self, rec: &ClaimRecord) -> Result<Ack, LedgerError> {
        for old in self.entries()? {
            if old.key != rec.key {
                continue;
            }
            if old.outcome == rec.outcome && old.evidence == rec.evidence {
                return Ok(Ack::Duplicate);
            }
            return Err(LedgerError::Discrepancy {
                key: rec.key.clone(),
                stored: format!("{:?}", old.outcome),
                new: format!("{:?}", rec.outcome),
            });
        }
        let mut f = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let mut line = serde_json::to_string(rec).expect("serializable");
        line.push('\n');
        f.write_all(line.as_bytes())?;
        f.sync_data()?;
        Ok(Ack::Appended)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn missing_file_is_empty() {
        let dir = tempfile::tempdir().unwrap();
        let l = VerifyLedger::new(dir.path().join("none.jsonl"));
        assert!(l.entries().unwrap().is_empty());
    }

    #[test]
    fn corrupt_line_reported() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("l.jsonl");
        std::fs::write(&p, "{not json}\n").unwrap();
        let l = VerifyLedger::new(&p);
        assert!(matches!(l.entries(), Err(LedgerError::Corrupt { line: 1, .. })));
    }
}
