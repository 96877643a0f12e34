//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by environments, estimators, and the harness.
#[derive(Debug, Error)]
pub enum Error {
    /// Bad configuration: unknown environment, dimension mismatch, invalid field.
    #[error("configuration error: {0}")]
    Config(String),

    /// Invalid numeric domain: non-finite state, zero noise where forbidden, etc.
    #[error("domain error: {0}")]
    Domain(String),

    /// Optimizer could not make progress (e.g. every candidate evaluated non-finite).
    #[error("optimizer error: {0}")]
    Optimizer(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Serde(e.to_string())
    }
}

impl From<toml::ser::Error> for Error {
    fn from(e: toml::ser::Error) -> Self {
        Error::Serde(e.to_string())
    }
}
