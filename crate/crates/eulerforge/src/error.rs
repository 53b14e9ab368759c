use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precision mismatch: operands carry {0} and {1} bits")]
    ContextMismatch(u32, u32),

    #[error("{what}: argument {arg} is within {radius} of the pole at {pole}")]
    NearPole {
        what: String,
        arg: String,
        pole: i64,
        radius: String,
    },

    #[error("series `{series}` did not reach its error budget within {terms} terms")]
    Truncation { series: String, terms: u64 },

    #[error("divergent: {0}")]
    Divergent(String),

    #[error("non-finite result in {0}")]
    NonFinite(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown constant `{0}`")]
    UnknownConstant(String),

    #[error("parameter error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for failures of the numerics (as opposed to bad input).
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            Error::NearPole { .. } | Error::Truncation { .. } | Error::NonFinite(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
