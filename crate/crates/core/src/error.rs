use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed graph or subgraph data.
    #[error("invalid input: {0}")]
    Input(String),

    /// Edge-list text that does not follow the file format.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An operation was called on arguments outside its contract.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Numeric parameters outside the domain of a formula or construction.
    #[error("domain error: {0}")]
    Domain(String),

    /// The exhaustive oracle refuses instances it cannot finish.
    #[error("unverifiable at this size: {what} needs {required} > budget {limit}")]
    Budget {
        what: &'static str,
        required: u128,
        limit: u128,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
