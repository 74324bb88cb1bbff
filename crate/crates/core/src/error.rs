use thiserror::Error;

/// Errors produced anywhere in the engine.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed user input (group name, element token, word syntax, JSON shape).
    #[error("parse error: {0}")]
    Parse(String),

    /// A Cayley table failed validation.
    #[error("invalid group table: {0}")]
    GroupAxiom(String),

    /// An element was used with a context it does not belong to.
    #[error("element {element} does not belong to group {group}")]
    Mismatch { element: String, group: String },

    #[error("group {0} is infinite and cannot be enumerated")]
    NotEnumerable(String),

    #[error("fusion requires nonempty words")]
    EmptyFusion,

    #[error("word is not in the submonoid generated by a z_g a: {0}")]
    NotInSubmonoid(String),

    /// A computation hit a configured size cap.
    #[error("resource cap exceeded: {0}")]
    LimitExceeded(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("value out of range: {0}")]
    Range(String),

    /// Precondition violated by the caller (wrong flavor for a group, ...).
    #[error("invalid argument: {0}")]
    Invalid(String),

    /// An invariant that should be unreachable was violated.
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
