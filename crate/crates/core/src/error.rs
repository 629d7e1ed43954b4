use thiserror::Error;

/// Errors raised across the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("line {line}: {message}")]
    ParseLine { line: usize, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("search budget exhausted after {nodes} nodes")]
    Undecided { nodes: u64 },

    #[error("generator invariant failed: {0}")]
    Generator(String),

    #[error("reproduction mismatch: {0}")]
    Mismatch(String),

    /// A step the underlying proof guarantees cannot fail did fail.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::ParseLine { .. } => 2,
            Error::Input(_) | Error::Contract(_) | Error::Undecided { .. } => 3,
            Error::Generator(_) => 4,
            Error::Mismatch(_) => 5,
            Error::Internal(_) => 70,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
