use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by the retrieval library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: invalid JSON: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("duplicate case id {0:?}")]
    DuplicateCaseId(String),

    #[error("invalid case id {0:?}: ids must be non-empty and free of tabs and line breaks")]
    InvalidCaseId(String),

    #[error("judgments: base case {0:?} lists itself as a relevant case")]
    SelfJudgment(String),

    #[error("judgments: {0}")]
    InvalidJudgments(String),

    #[error("cannot build an index from an empty segment list")]
    EmptyIndex,

    #[error("segment handle {handle} out of range: index holds {count} segments")]
    SegmentOutOfRange { handle: u32, count: usize },

    #[error("document frequency {df} exceeds segment count {n}")]
    DfOutOfRange { df: usize, n: usize },

    #[error("{path}: not an index directory")]
    NotAnIndex { path: PathBuf },

    #[error("unsupported index format version {found} (this build reads version {expected})")]
    FormatVersion { found: u32, expected: u32 },

    #[error("corrupt index: {0}")]
    CorruptIndex(String),

    #[error("{path}:{line}: malformed run line: {msg}")]
    RunParse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("{path}:{line}: malformed answers line: {msg}")]
    AnswersParse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("query {0:?} has no judgments entry")]
    MissingJudgment(String),

    #[error("no tuning query has judgments")]
    NoTuningJudgments,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
