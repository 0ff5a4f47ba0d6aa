use thiserror::Error;

use crate::rootsystem::Family;

/// Errors raised by the engine. Every variant carries enough context to name
/// the offending input.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for type {family}: {bound}")]
    InvalidRank {
        family: Family,
        rank: usize,
        bound: &'static str,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },
    #[error("not a module character: {0}")]
    NotAModuleCharacter(String),
    #[error("{0} is not a root of the ambient system")]
    NotARoot(String),
    #[error("root subset is empty")]
    EmptyRootSubset,
    #[error("root subset is not symmetric: {0} is present but its negative is not")]
    NotSymmetric(String),
    #[error("root subset is not closed: {left} + {right} is a root missing from the subset")]
    NotClosed { left: String, right: String },
    #[error("non-classical component: {0}")]
    NonClassical(String),
    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("point {0:?} carries the zero weight")]
    ZeroWeightAtPoint(String),
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
