use thiserror::Error;

/// Errors raised by constructors, decoders and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,

    #[error("not a permutation of [{n}]: {values:?}")]
    NotPermutation { n: usize, values: Vec<usize> },

    #[error("square ({row},{col}) outside triangular shape of order {order}")]
    OutsideShape { order: usize, row: usize, col: usize },

    #[error("duplicate square ({row},{col})")]
    DuplicateSquare { row: usize, col: usize },

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("invalid arc diagram: {0}")]
    InvalidArcs(String),

    #[error("insertion position {pos} outside 1..={max}")]
    PositionOutOfRange { pos: usize, max: usize },

    /// The input does not belong to the domain of the named map.
    #[error("{map}: precondition violated: {detail}")]
    Precondition { map: &'static str, detail: String },

    /// A transformation step reached a state its construction rules out.
    #[error("{map}: invariant violated: {detail}")]
    Invariant { map: &'static str, detail: String },
}

impl Error {
    pub(crate) fn pre(map: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            map,
            detail: detail.into(),
        }
    }

    pub(crate) fn invariant(map: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            map,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
