use thiserror::Error;

/// Failures surfaced by the command layer. Each maps to one exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

impl From<abt_core::Error> for CliError {
    fn from(e: abt_core::Error) -> Self {
        use abt_core::Error as E;
        match e {
            E::CapExceeded { .. } => CliError::Cap(e.to_string()),
            E::Shape(_) | E::Index(_) => CliError::Parse(e.to_string()),
            E::Invalid { .. } | E::Contradiction(_) => CliError::Invalid(e.to_string()),
            E::Domain(_) => CliError::Usage(e.to_string()),
        }
    }
}
