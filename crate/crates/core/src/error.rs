use thiserror::Error;

/// Errors raised by the calculus engine and the cobweb toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence index {index} is beyond the {len} supplied terms")]
    OutOfRange { index: usize, len: usize },

    #[error("degenerate sequence: term {index} is zero")]
    DegenerateSequence { index: usize },

    #[error("falling factorial undefined for k = {k} > n = {n}")]
    FallingDomain { n: usize, k: usize },

    #[error("polynomial of degree {degree} exceeds operator order {order}")]
    Truncation { degree: usize, order: usize },

    #[error("operator orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("operators are built over different sequences")]
    SpecMismatch,

    #[error("operator is not invertible (zero constant term)")]
    NotInvertible,

    #[error("operator is not a delta operator (needs c_0 = 0 and c_1 != 0)")]
    NotDelta,

    #[error("series composition needs an inner series with zero constant term")]
    NonzeroInnerConstant,

    #[error("invalid polynomial sequence: {0}")]
    InvalidSequence(String),

    #[error("chain is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),

    #[error("invalid vertex {0}")]
    InvalidVertex(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
