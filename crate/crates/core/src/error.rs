use thiserror::Error;

/// Errors reported by the algebra and geometry layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NocError {
    #[error("variable table mismatch: {0}")]
    TableMismatch(String),

    #[error("substitution has no image for variable `{0}`")]
    MissingImage(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("index {index} out of range 0..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("unknown orbit `{0}`")]
    UnknownOrbit(String),

    #[error("not in the span of the candidate basis")]
    NotInSpan,

    #[error("candidate basis is degenerate (rank {rank} < {size})")]
    DegenerateBasis { rank: usize, size: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("solution is not unique (solution space of dimension {0})")]
    NonUnique(usize),

    #[error("expected a polynomial, found a proper rational function")]
    NotPolynomial,

    #[error("polynomial is not symmetric in {0}")]
    NotSymmetric(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, NocError>;
