//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by cone validation, ideal arithmetic and the membership oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("vectors of mixed length: expected {expected}, got {got}")]
    MixedArity { expected: usize, got: usize },

    #[error("zero vector is not a valid ray or normal")]
    ZeroVector,

    #[error("cone is not full-dimensional (rank {rank} in dimension {dim})")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("cone is not strongly convex (it contains a line)")]
    NotStronglyConvex,

    #[error("inconsistent H-representation: {0}")]
    InconsistentHRepresentation(String),

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },

    #[error("enumeration would exceed the point cap {cap}")]
    EnumerationCapExceeded { cap: usize },

    #[error("grading weight is not strictly positive on the cone")]
    BadWeight,

    #[error("Hilbert basis is incomplete: degree cap {cap} is below the certified bound {bound}")]
    IncompleteHilbertBasis { cap: i64, bound: i64 },

    #[error("negative exponent in a polynomial-ring monomial")]
    NegativeExponent,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("ideal must be nonzero and proper")]
    NotProper,

    #[error("too many variables for this operation: {0}")]
    TooManyVariables(usize),

    #[error("face is the whole cone, which gives the zero ideal")]
    WholeConeFace,

    #[error("prime is not of height one (height {0})")]
    NotHeightOne(usize),

    #[error("multiset enumeration would visit {needed} combinations, above the cap {cap}")]
    MultisetCapExceeded { needed: u128, cap: u64 },

    #[error("bad factor index {index} for a tensor of {factors} factors")]
    BadFactorIndex { index: usize, factors: usize },

    #[error("prime does not belong to the expected ring")]
    RingMismatch,

    #[error("tensor products need at least two factors, got {0}")]
    TooFewFactors(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown catalog cone `{0}`")]
    UnknownCatalog(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// True for the errors that mean "ran out of budget" rather than "bad input".
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::EnumerationCapExceeded { .. }
                | Error::MultisetCapExceeded { .. }
                | Error::DimensionCapExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
