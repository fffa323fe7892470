use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("z-exponent {exponent} falls outside the window [{lo}, {hi}]")]
    WindowOverflow { exponent: i64, lo: i64, hi: i64 },

    #[error("summation did not terminate after {0} index tuples")]
    NoTermination(u64),

    #[error("declared valuation bound {bound} exceeds actual valuation {actual} at index {index:?}")]
    PruningUnsound {
        index: Vec<i64>,
        bound: i64,
        actual: i64,
    },

    #[error("term has negative q-valuation {0}")]
    NegativeValuation(i64),

    #[error("division by a vanishing factor: {0}")]
    Pole(String),

    #[error("numeric sum did not converge after {0} terms")]
    NoConvergence(u64),

    #[error("numeric overflow: magnitude exceeded 1e50")]
    Overflow,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),

    #[error("domain violation: {constraint}")]
    DomainViolation { constraint: String },

    #[error("identity '{id}' has no {backend} backend")]
    UnsupportedBackend { id: String, backend: String },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn violation(constraint: impl Into<String>) -> Self {
        Error::DomainViolation {
            constraint: constraint.into(),
        }
    }
}
