use std::path::PathBuf;

use thiserror::Error;

/// Errors of the command-line layer, split by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// A value outside its mathematical domain, an unknown name or an
    /// invalid combination of flags. Exit code 1.
    #[error("{0}")]
    Domain(String),
    /// An input file that could not be parsed. Exit code 2.
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
    /// Reading or writing a file failed. Exit code 2.
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Parse { .. } | CliError::Io { .. } => 2,
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError::Domain(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<triprofile_core::Error> for CliError {
    fn from(e: triprofile_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
