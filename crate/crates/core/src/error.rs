use std::path::PathBuf;

use thiserror::Error;

use crate::layout::LayoutError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: not valid UTF-8 (first bad byte at offset {valid_up_to})")]
    Decode { path: String, valid_up_to: usize },

    #[error("offset {offset} is beyond the end of the file ({len} bytes)")]
    OffsetOutOfRange { offset: usize, len: usize },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{} is not a directory", .0.display())]
    NotADirectory(PathBuf),

    #[error("duplicate source path {0}")]
    DuplicatePath(String),

    #[error("codebase contains no classes")]
    NoClasses,

    #[error(transparent)]
    Layout(#[from] LayoutError),

    #[error("scene consistency: {0}")]
    Consistency(String),

    #[error("invalid scene document: {0}")]
    Json(#[from] serde_json::Error),
}
