//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of an operation.
    #[error("domain error in {op}: {detail}")]
    Domain { op: &'static str, detail: String },

    /// Structurally invalid parameter (bad window, bad family parameters, ...).
    #[error("parameter error in {op}: {detail}")]
    Parameter { op: &'static str, detail: String },

    /// A numerical procedure failed to converge to the requested tolerance.
    #[error("numeric error in {op}: {detail}")]
    Numeric { op: &'static str, detail: String },

    /// Computed data violates an invariant it must satisfy; usually signals
    /// a quadrature bug upstream.
    #[error("data error in {op}: {detail}")]
    Data { op: &'static str, detail: String },

    /// An operation was requested on a subject that does not support it.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn domain(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            op,
            detail: detail.into(),
        }
    }

    pub fn parameter(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Parameter {
            op,
            detail: detail.into(),
        }
    }

    pub fn numeric(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Numeric {
            op,
            detail: detail.into(),
        }
    }

    pub fn data(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Data {
            op,
            detail: detail.into(),
        }
    }
}
