use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid parts: {0}")]
    InvalidParts(String),

    #[error("invalid vector: {0}")]
    InvalidVector(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("invalid cnf: {0}")]
    InvalidCnf(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("instance has no cost vector")]
    NoObjective,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
