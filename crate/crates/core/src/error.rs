use thiserror::Error;

/// Errors raised by structure construction, evaluation and searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("semiring mismatch: `{left}` vs `{right}`")]
    SemiringMismatch { left: String, right: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("map `{map}` is undefined on basis element {basis}")]
    Domain { map: String, basis: String },

    #[error("size guard exceeded: {required} candidates required, budget is {budget}")]
    Size { required: String, budget: u64 },

    #[error("configuration error: {0}")]
    Configuration(String),

    #[error("type error: {0}")]
    Type(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
