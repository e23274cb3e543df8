use thiserror::Error;

/// Errors produced anywhere in the workbench.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{name}` at line {line}, column {column}")]
    UnknownGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("zero exponent at line {line}, column {column}")]
    ZeroExponent { line: usize, column: usize },
    #[error("invalid group spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },
    /// A computation would exceed a configured bound. The answer is never
    /// approximated; raise the bound or shrink the group.
    #[error("resource exceeded: {what} (limit {limit})")]
    ResourceExceeded { what: String, limit: u64 },
    #[error("subgroup is not normal: conjugate of generator {generator} by generator {conjugator} escapes")]
    NotNormal { generator: usize, conjugator: usize },
    #[error("group of order {order} is not a {p}-group")]
    NotPGroup { order: u64, p: u64 },
    #[error("hypothesis not met: {0}")]
    HypothesisUnmet(String),
    /// An internal consistency check failed. Always a bug.
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("malformed corpus: {0}")]
    Corpus(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub fn exceeded(what: impl Into<String>, limit: u64) -> Self {
        Error::ResourceExceeded {
            what: what.into(),
            limit,
        }
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }
}
