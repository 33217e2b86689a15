//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Inconsistent geometry (e.g. sensors inside the sample domain).
    #[error("geometry error: {0}")]
    Geometry(String),

    /// Vector/matrix dimensions do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Linear solver failed to reach the requested residual.
    #[error("solver error: {message} (residual {residual:.3e})")]
    Solver { message: String, residual: f64 },

    /// Training loss became non-finite.
    #[error("training diverged at iteration {iteration}: {message}")]
    Diverged { iteration: usize, message: String },

    /// Invalid configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("format error: {0}")]
    Format(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
    pub fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }
}
