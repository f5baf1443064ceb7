use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count {0} is not a positive even number")]
    OddStrandCount(usize),

    #[error("token {position} is zero; generators are nonzero integers")]
    ZeroToken { position: usize },

    #[error("token {position} ({token:?}) is not an integer")]
    NotAnInteger { position: usize, token: String },

    #[error("token {position}: generator index {index} out of range for {strands} strands")]
    IndexOutOfRange {
        position: usize,
        index: usize,
        strands: usize,
    },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("move {kind} index {index} out of range for a plat with {arcs} arcs per side")]
    MoveOutOfRange {
        kind: &'static str,
        index: usize,
        arcs: usize,
    },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid covering data: {0}")]
    InvalidCovering(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal verification failure: {0}")]
    Internal(String),
}

/// Coarse classification used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Precondition,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::OddStrandCount(_)
            | Error::ZeroToken { .. }
            | Error::NotAnInteger { .. }
            | Error::IndexOutOfRange { .. }
            | Error::InvalidPermutation(_) => ErrorKind::Parse,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Precondition,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
