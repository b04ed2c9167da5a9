//! File formats, checkpointing, worker orchestration and the command
//! implementations behind the `twodist` binary.

pub mod checkpoint;
pub mod cli;
pub mod commands;
pub mod formats;
pub mod manifest;
pub mod runner;

use std::fmt;

/// Process-level outcome. Exit codes are a stable contract:
/// 0 success/PASS, 1 verification failure, 2 usage error, 3 I/O error.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    pub fn io_ctx(path: &std::path::Path, e: std::io::Error) -> CliError {
        CliError::Io(format!("{}: {e}", path.display()))
    }
}
