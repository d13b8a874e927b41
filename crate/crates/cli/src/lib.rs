//! Command implementations behind the `bitrans` binary.
//!
//! Every command takes file contents and returns the text to print, so the
//! binary only deals with I/O and exit codes.

pub mod commands;
pub mod format;

use bitrans_core::Error;
use thiserror::Error as ThisError;

pub use commands::{GenOutput, Options};
pub use format::{FormatError, OutputFormat};

/// A failed command, carrying its process exit code.
#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Unsatisfiable(String),
    #[error("{0}")]
    ResourceCap(String),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Unsatisfiable(_) => 2,
            CliError::ResourceCap(_) => 3,
            CliError::Mismatch(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::EmptyRedEdge(_) | Error::EmptyEdge(_) => CliError::Unsatisfiable(msg),
            Error::PartialsCapExceeded { .. } | Error::TooLarge { .. } => CliError::ResourceCap(msg),
            _ => CliError::Usage(msg),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        let msg = e.to_string();
        match e {
            FormatError::EmptyEdge { .. } => CliError::Unsatisfiable(msg),
            FormatError::Syntax { .. } => CliError::Usage(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
