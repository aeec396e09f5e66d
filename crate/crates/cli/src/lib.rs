//! Library half of the `metridim` binary: argument grammar, subcommand
//! implementations, and the sweep/expansion orchestration. Kept as a lib so
//! integration tests can drive sweeps in-process.

pub mod cli;
pub mod commands;
pub mod sweep;

use metridim_core::Error as CoreError;

/// Process-level error classes and their exit codes:
/// 0 success, 1 I/O failure, 2 usage error, 3 data error (input graph
/// unusable, e.g. disconnected where connectivity is required).
#[derive(Debug)]
pub enum CliError {
    Io(String),
    Usage(String),
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Data(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Usage(m) | CliError::Data(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::Disconnected
            | CoreError::SelfLoop(_)
            | CoreError::VertexOutOfRange { .. }
            | CoreError::EdgeListParse { .. } => CliError::Data(msg),
            CoreError::Io(_) => CliError::Io(msg),
            _ => CliError::Usage(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
