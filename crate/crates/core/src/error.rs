use thiserror::Error;

/// Which structural requirement on a configuration failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    Shape,
    FirstRowOnes,
    Rank,
    Codim,
    LatticeSpan,
}

impl Invariant {
    pub fn name(self) -> &'static str {
        match self {
            Invariant::Shape => "shape",
            Invariant::FirstRowOnes => "first-row-ones",
            Invariant::Rank => "rank",
            Invariant::Codim => "codim",
            Invariant::LatticeSpan => "lattice-span",
        }
    }
}

impl std::fmt::Display for Invariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invariant violation ({which}): {detail}")]
    InvariantViolation { which: Invariant, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no Gale diagram of this configuration meets the four open quadrants")]
    NormalizationImpossible,

    #[error("linear system has no solution")]
    NoSolution,

    #[error("linear system has more than one solution")]
    NonUnique,

    #[error("Gröbner basis order does not refine the weight vector")]
    NotAGBForThisWeight,

    #[error("zero denominator in series coefficient at z = {0:?}")]
    ZeroDenominator([i64; 2]),

    #[error("toric operator {operator} does not cancel at output exponent {exponent}")]
    CancellationFailure { operator: String, exponent: String },

    #[error("volume methods disagree: standard pairs give {pairs}, triangulation gives {triangulation}")]
    MethodDisagreement { pairs: u64, triangulation: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("cache integrity: {0}")]
    CacheIntegrity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
