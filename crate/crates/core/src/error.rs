use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("tableau outside convergence region {0}")]
    OutsideRegion(String),

    #[error("index is not admissible: {0}")]
    NotAdmissible(String),

    #[error("tableau is not dualizable: {0}")]
    NotDualizable(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("cache is locked by another writer: {0}")]
    CacheLocked(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
