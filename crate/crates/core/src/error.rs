use std::io;

use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field modulus {0} is not prime")]
    NonPrimeModulus(u32),

    #[error("simplex has no vertices")]
    EmptySimplex,

    #[error("duplicate vertex {0} in simplex")]
    DuplicateVertex(u32),

    #[error("chain dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("simplex {simplex} has dimension {found}, expected {expected}")]
    WrongSimplexDimension {
        simplex: String,
        found: usize,
        expected: usize,
    },

    #[error("complex is not closed under faces: {0} violation(s), first: {1}")]
    NotClosed(usize, String),

    #[error("chain is not a cycle")]
    NotACycle,

    #[error("interval not found in barcode: {0}")]
    IntervalNotFound(String),

    #[error("representative cycles were not tracked during reduction")]
    CyclesNotTracked,

    #[error("modularity undefined: graph has zero total edge weight")]
    ZeroTotalWeight,

    #[error("clustering covers {found} vertices but graph has {expected}")]
    ClusteringSize { found: usize, expected: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("simplex budget exceeded: more than {budget} simplices at the requested scale")]
    SimplexBudget { budget: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
