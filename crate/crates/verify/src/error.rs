use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("unknown case id `{0}`")]
    UnknownId(String),
    #[error("unknown series family `{0}`")]
    UnknownFamily(String),
    #[error("unknown sequence `{0}` (expected A238872 or A321440)")]
    UnknownSequence(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    BFile { line: usize, msg: String },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Series(#[from] hurwitz_core::SeriesError),
}

pub type Result<T> = std::result::Result<T, VerifyError>;
