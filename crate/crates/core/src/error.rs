use thiserror::Error;

/// Errors raised by evaluations in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: u32, max: u32 },
    #[error("argument out of domain: {0}")]
    Domain(String),
    #[error("overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn io_error(path: &std::path::Path, err: std::io::Error) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: err.to_string(),
    }
}
