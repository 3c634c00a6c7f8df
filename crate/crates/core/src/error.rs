use thiserror::Error;

/// Errors surfaced by construction and verification routines.
///
/// Numerical routines refuse to guess: ambiguous ranks, missing data and
/// violated hypotheses are reported rather than silently patched over.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system: family {family} rank {rank}")]
    UnsupportedRootSystem { family: String, rank: usize },

    #[error("weight is not dominant integral: {detail}")]
    NotDominantIntegral { detail: String },

    #[error("isotropy prediction hypotheses failed: {detail}")]
    PredictionHypothesesFailed { detail: String },

    #[error("{what} is not constructible without data")]
    NotConstructibleWithoutData { what: String },

    #[error("invalid construction request: {0}")]
    InvalidConstruction(String),

    #[error("representation data failed validation: {0}")]
    InvalidRepresentation(String),

    #[error("data file error: {0}")]
    DataFile(String),

    #[error("ill-conditioned rank decision: {detail}; singular values {spectrum:?}")]
    IllConditionedRank { detail: String, spectrum: Vec<f64> },

    #[error("vector too small to normalize (norm {norm:.3e})")]
    DegenerateVector { norm: f64 },

    #[error("inputs are not horizontal at the base point (residual {residual:.3e})")]
    NotHorizontal { residual: f64 },

    #[error("representation is not irreducible enough for this operation: {0}")]
    NotIrreducible(String),

    #[error("no weight chart available for algebra {0}")]
    NoWeightChart(String),

    #[error("no real structure: {0}")]
    NoRealStructure(String),

    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),

    #[error("case table error: {0}")]
    Case(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
