use std::path::PathBuf;

/// Everything that makes the tool exit non-zero.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    InvalidDatum(String),
    #[error("expectation violated: {0}")]
    Expectation(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Parse { .. } | CliError::Input(_) => 2,
            CliError::Expectation(_) => 3,
            CliError::InvalidDatum(_) => 4,
        }
    }

    pub fn invalid(e: impl std::fmt::Display) -> Self {
        CliError::InvalidDatum(e.to_string())
    }
}
