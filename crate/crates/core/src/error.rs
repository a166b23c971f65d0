use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("substitution for {letter} has the wrong grade (expected {expected})")]
    GradeMismatch { letter: String, expected: &'static str },

    #[error("invalid canonical monomial: {0}")]
    InvalidMonomial(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("{from} does not embed into {into}")]
    NotEmbeddable { from: String, into: String },

    #[error("invalid reduction trace: {0}")]
    InvalidTrace(String),

    #[error("{what} exceeds the configured cap of {cap}")]
    ResourceBound { what: String, cap: usize },

    #[error("unknown {kind} `{name}` (available: {available})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        available: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
