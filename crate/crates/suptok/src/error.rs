//! Error type shared by every module in the crate.

use thiserror::Error;

/// Errors surfaced by the tokenization pipeline.
///
/// The CLI maps these onto process exit codes: `Config` -> 2, `Io` and
/// `Format` -> 3, `Numeric` -> 4, everything else -> 1.
#[derive(Debug, Error)]
pub enum Error {
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("format error: {0}")]
    Format(String),

    #[error("config error: field `{field}`: {msg}")]
    Config { field: String, msg: String },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("empty cluster {id} violates the superpixel map invariant")]
    EmptyCluster { id: usize },

    #[error("mask error: {0}")]
    Mask(String),

    #[error("state error: {0}")]
    State(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn config(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
