use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown emotion label `{0}`")]
    UnknownEmotion(String),

    #[error("unknown sentiment range `{0}`")]
    UnknownRange(String),

    #[error("confidence for `{emotion}` must be in [0, 1], got {value}")]
    InvalidConfidence { emotion: String, value: f64 },

    #[error("threshold must be in [0, 1], got {0}")]
    InvalidThreshold(f64),

    #[error("train fraction must be strictly between 0 and 1, got {0}")]
    InvalidFraction(f64),

    #[error("malformed transition prefix near `{token}`: {reason}")]
    MalformedPrefix { token: String, reason: &'static str },

    #[error("reference/hypothesis count mismatch: {references} references, {hypotheses} hypotheses")]
    LengthMismatch { references: usize, hypotheses: usize },

    #[error("{0} requires at least one record")]
    EmptyInput(&'static str),

    #[error("pair `{id}`: {reason}")]
    InvalidPair { id: String, reason: &'static str },

    #[error("duplicate id `{0}`")]
    DuplicateId(String),

    #[error("incomplete intensity table: no median for `{0}`")]
    MissingMedian(String),

    #[error("lexicon line {line}: {message}")]
    Lexicon { line: usize, message: String },

    #[error("invalid rules file: {0}")]
    Rules(#[source] serde_json::Error),

    #[error("line {line}: {source}")]
    Json {
        line: usize,
        #[source]
        source: serde_json::Error,
    },

    #[error("line {line}: {message}")]
    Tsv { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}
