use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is not connected")]
    Disconnected,

    #[error("weighting is not legitimate: {0}")]
    IllegitimateWeighting(String),

    #[error("no avoiding path exists")]
    NoPath,

    #[error("instance exceeds enumeration budget: {0}")]
    TooLarge(String),

    #[error("random generation failed after retry budget")]
    GenerationFailed,

    #[error("structural law violated: {0}")]
    LemmaViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
