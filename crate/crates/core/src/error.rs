use thiserror::Error;

/// Errors raised by graph surgery, counting, sequence verification and the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied value is out of range or refers to something that does not exist.
    #[error("invalid input: {0}")]
    Input(String),

    /// A graph or polynomial text could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The request exceeds a configured computation budget.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The focus (vertex or edge) is not admissible for the requested operation.
    #[error("unsupported focus: {0}")]
    UnsupportedFocus(String),

    /// An identity index lies outside its admissible domain.
    #[error("index out of domain for {id}: {bound}")]
    OutOfDomain { id: String, bound: String },

    /// Two computations that must agree did not.
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
