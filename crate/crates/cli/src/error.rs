use erq_core::ParseError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("syntax error at column {}: {}", .error.column, .error.kind)]
    Parse { input: String, error: ParseError },
    #[error("cannot write log {path}: {message}")]
    Log { path: String, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Internal(_) => 3,
            _ => 2,
        }
    }

    /// Message for standard error; parse errors point at the column.
    pub fn render(&self) -> String {
        match self {
            CliError::Parse { input, error } => {
                let pad = " ".repeat(error.column.saturating_sub(1));
                format!("error: {self}\n  {input}\n  {pad}^\n")
            }
            other => format!("error: {other}\n"),
        }
    }
}
