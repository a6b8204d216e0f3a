use biliaison_core::Error as CoreError;
use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const ASSERTION: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const INVALID: i32 = 3;
    pub const GENERICITY: i32 = 4;
    pub const INCONCLUSIVE: i32 = 5;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("{0}")]
    Genericity(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => exit::PARSE,
            CliError::Invalid(_) => exit::INVALID,
            CliError::Genericity(_) => exit::GENERICITY,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Syntax { .. }
            | CoreError::UnknownVariable { .. }
            | CoreError::NonHomogeneous(_)
            | CoreError::InvalidPrime(_) => CliError::Parse(e.to_string()),
            CoreError::GenericityFailure { .. } => CliError::Genericity(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
