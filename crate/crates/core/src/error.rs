use thiserror::Error;

use crate::subset::Subset;

#[derive(Debug, Error)]
pub enum Error {
    #[error("permutation sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index sets have different sizes: {left} vs {right}")]
    SubsetSizeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("{v} is not below {w} in Bruhat order")]
    NotBruhatLeq { v: String, w: String },

    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },

    #[error("weight a{0} is not strictly positive")]
    NonPositiveWeight(usize),

    #[error("weight a{0} is infinite")]
    InfiniteWeight(usize),

    #[error("variable {0} is unassigned")]
    Unassigned(usize),

    #[error("zero raised to a negative power (variable {0})")]
    ZeroToNegativePower(usize),

    #[error("infinity raised to a negative power (variable {0})")]
    InfinityToNegativePower(usize),

    #[error("index {0:?} is not in the support")]
    Unsupported(Subset),

    #[error("coordinate {0:?} must be strictly positive")]
    NonPositiveCoordinate(Subset),

    #[error("coordinate {0:?} must be finite")]
    InfiniteCoordinate(Subset),

    #[error("support is not a flag matroid")]
    NotFlagMatroid,

    #[error("path collection for sinks {sinks:?} is not unique ({count} found)")]
    NonUniqueCollection { sinks: Subset, count: usize },

    #[error("left greedy construction got stuck at source {0}")]
    GreedyStuck(usize),

    #[error("three-term propagation stuck at {0:?}")]
    PropagationStuck(Subset),

    #[error("no cell: {0}")]
    NoCell(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("n = {n} exceeds the limit {max}")]
    TooLarge { n: usize, max: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
