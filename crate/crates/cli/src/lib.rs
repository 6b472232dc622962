//! Command-line front end for `erq-core`.

pub mod args;
pub mod commands;
pub mod error;
pub mod runlog;

use std::time::{SystemTime, UNIX_EPOCH};

pub use args::Cli;
pub use commands::{dispatch, Output};
pub use error::CliError;
pub use runlog::{decode_line, LogEntry, RunLog};

use args::Format;

/// Runs a parsed command line and returns what goes to standard output.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let out = dispatch(&cli.command, cli.common.seed)?;
    if let (Some(path), Some(mut entry)) = (&cli.common.log, out.log.clone()) {
        if let LogEntry::Experiment(r) = &mut entry {
            r.timestamp = Some(unix_millis());
        }
        RunLog::new(path).append(&entry).map_err(|e| CliError::Log {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
    }
    Ok(match cli.common.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.json).expect("documents serialize");
            s.push('\n');
            s
        }
        Format::Text => out.text,
    })
}

fn unix_millis() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_millis() as u64)
}
