use thiserror::Error;

use crate::weight::Weight;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported algebra `{0}`")]
    UnsupportedAlgebra(String),

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Weyl group exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {weight} has length {got}, expected rank {expected}")]
    RankMismatch { weight: Weight, expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("no Weyl group element carries {source_weight} to {target}")]
    NoPath { source_weight: Weight, target: Weight },

    #[error("word {0:?} is not reduced")]
    NonReducedWord(Vec<usize>),

    #[error("bracket argument has a term of L-degree zero")]
    NonInvertibleBracket,

    #[error("formula not available for {algebra}: {reason}")]
    UnsupportedFormula { algebra: String, reason: String },

    #[error("polynomial is not Weyl-invariant: {0}")]
    NotWeylInvariant(String),

    #[error("witness assignment failed: {0}")]
    WitnessAssignment(String),

    #[error("edge intersection sign mismatch at {monomial}: {top} vs {bottom}")]
    SignMismatch { monomial: String, top: String, bottom: String },

    #[error("invalid linking: {0}")]
    InvalidLinking(String),

    #[error("no valid linking found: {0}")]
    LinkingFailure(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
