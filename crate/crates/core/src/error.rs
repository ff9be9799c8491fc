use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("entry count {found} does not match a {rows}x{cols} matrix")]
    BadEntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("inadmissible root system label {0}")]
    InadmissibleLabel(String),
    #[error("cannot parse root system label {0:?}")]
    UnparsableLabel(String),
    #[error("rank {rank} exceeds the ceiling of {ceiling}")]
    RankCeiling { rank: usize, ceiling: usize },
    #[error("product of an empty list of root systems")]
    EmptyProduct,
    #[error("{0} is reducible; an irreducible root system is required")]
    Reducible(String),
    #[error("incompatible bases: cannot compose {left} after {right}")]
    BasisMismatch { left: String, right: String },
    #[error("map does not descend to the quotient: {0}")]
    NotWellDefined(String),
    #[error("correction coefficient <f{coweight}v, f{weight}> is not an integer")]
    NonIntegralCorrection { coweight: usize, weight: usize },
    #[error("component on nodes {0:?} of the complement is not of type A")]
    NotTypeA(Vec<usize>),
    #[error("chosen generators do not form a basis of the quotient: {0}")]
    BadGenerators(String),
}

pub type Result<T> = std::result::Result<T, Error>;
