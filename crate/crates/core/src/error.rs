//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by root-system construction, classification, counting and the oracle.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("not a positive root: {0}")]
    NotAPositiveRoot(String),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("subset is not a C-pattern: {0}")]
    NotAPattern(String),
    #[error("ideal condition violated: {0}")]
    IdealConditionViolated(String),
    #[error("move not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid prior moves: {0}")]
    InvalidMoves(String),
    #[error("isomorphism check failed: {0}")]
    IsomorphismFailed(String),
    #[error("unresolved non-abelian case {mask} in {system}")]
    UnresolvedCase { system: String, mask: String },
    #[error("no classification data for {0}")]
    UnresolvedCoverage(String),
    #[error("decomposition does not cover the support")]
    DecompositionMismatch,
    #[error("characteristic {p} too small for {system} (need p > {bound})")]
    CharacteristicTooSmall { system: String, p: u64, bound: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("orbit of size {size} is not an even power of {p}")]
    IrregularOrbit { size: u64, p: u64 },
    #[error("state budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("bad classification string {0:?}")]
    BadString(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("checksum mismatch for {0}")]
    Checksum(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
