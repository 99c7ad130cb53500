use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("subspace is not arrow-stable: {0}")]
    Stability(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("resource budget exceeded: needs {needed} candidate tuples, budget is {budget}")]
    Budget { needed: String, budget: u64 },
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    /// Short machine-readable tag, used in structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension(_) => "dimension",
            Error::Config(_) => "configuration",
            Error::Stability(_) => "stability",
            Error::Unsupported(_) => "unsupported",
            Error::Input(_) => "input",
            Error::Budget { .. } => "budget",
            Error::Invariant(_) => "invariant",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
