use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside the domain of the requested operation.
    /// Messages cite positions 1-based.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A materializing builder would exceed its word cap, or an
    /// enumeration would exceed its configured bound.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An input violated a documented caller contract (e.g. two words
    /// passed as list neighbors that do not differ in exactly one position).
    #[error("contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
