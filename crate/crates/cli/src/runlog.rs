//! Append-only JSON-lines experiment log.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use erq_core::harness::ExperimentRecord;
use erq_core::probe::ProbeReport;
use serde::{Deserialize, Serialize};

/// One log line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LogEntry {
    Experiment(ExperimentRecord),
    Probe(ProbeReport),
}

#[derive(Debug)]
pub struct RunLog {
    path: PathBuf,
    lock: Mutex<()>,
}

impl RunLog {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        RunLog {
            path: path.into(),
            lock: Mutex::new(()),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Appends `entry` as a single line and returns the byte offset where it
    /// starts. The line goes out in one `O_APPEND` write, so concurrent
    /// writers never interleave within a line.
    pub fn append(&self, entry: &LogEntry) -> io::Result<u64> {
        let mut line = serde_json::to_vec(entry).map_err(io::Error::other)?;
        line.push(b'\n');
        let _guard = self.lock.lock().unwrap_or_else(|e| e.into_inner());
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        let offset = file.metadata()?.len();
        file.write_all(&line)?;
        Ok(offset)
    }

    /// Every entry in file order.
    pub fn read_all(&self) -> io::Result<Vec<LogEntry>> {
        let reader = BufReader::new(File::open(&self.path)?);
        let mut out = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            let entry = decode_line(&line)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, format!("line {}: {e}", i + 1)))?;
            out.push(entry);
        }
        Ok(out)
    }
}

pub fn decode_line(line: &str) -> Result<LogEntry, serde_json::Error> {
    serde_json::from_str(line)
}
