//! Error type shared by every module of the crate.

use std::path::PathBuf;

use thiserror::Error;

/// Errors raised while building models or evaluating forces.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data violates a structural or physical invariant.
    #[error("validation error: {0}")]
    Validation(String),

    /// A numerical procedure failed (e.g. a non-diagonalizable mode system).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Adaptive quadrature ran out of subdivision budget.
    #[error("quadrature did not converge: best estimate {value:e}, error estimate {error:e}")]
    NonConvergence { value: f64, error: f64 },

    /// Configuration text could not be parsed.
    #[error("syntax error at line {line}: {message}")]
    Syntax { line: usize, message: String },

    /// A configuration key holds an invalid value.
    #[error("invalid `{key}`: {message}")]
    Config { key: String, message: String },

    #[error("{path}: {message}")]
    Data { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn config(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            key: key.into(),
            message: message.into(),
        }
    }

    /// Process exit status: 2 for numerical failures, 1 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Numerical(_) | Error::NonConvergence { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
