use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An enumerative operation exceeded its candidate-count ceiling.
    #[error("search guard exceeded in {context}: more than {limit} candidates")]
    GuardExceeded { context: String, limit: u64 },

    #[error("index {index} out of range in {context} (limit {limit})")]
    IndexOutOfRange {
        context: String,
        index: usize,
        limit: usize,
    },

    #[error("malformed input: {0}")]
    Malformed(String),

    /// A simplicial map assignment failed the face-compatibility test.
    #[error("face compatibility violated at dim {dim}, simplex {simplex}, face {face}")]
    FaceIncompatible {
        dim: usize,
        simplex: usize,
        face: usize,
    },

    /// A stated hypothesis of an operation does not hold for the input.
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    /// Bounded small-object argument ran out of rounds before saturating.
    #[error("iteration ceiling reached after {rounds} rounds; {unfilled} instances unfilled")]
    IterationCeiling { rounds: usize, unfilled: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Other(String),
}

impl Error {
    pub fn other(msg: impl Into<String>) -> Self {
        Error::Other(msg.into())
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }
}
