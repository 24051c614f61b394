//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by kernel and structure operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands live over different fields.
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    /// Matrix dimensions are incompatible for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A ShapedMap's factor shapes do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A factor permutation is not a permutation.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// Text input could not be parsed into a structure.
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    /// Parsed data violates a structural axiom.
    #[error("validation error: {0}")]
    Validation(String),

    /// A morphism fails the constraints of its claimed category.
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    /// A claimed certificate fails a V1/W1 membership equation.
    #[error("membership violation: {0}")]
    MembershipViolation(String),

    /// A base-category section/retraction fails its defining equation.
    #[error("not a section/retraction: {0}")]
    NotASection(String),

    /// A named catalog entry does not exist.
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
}

impl Error {
    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { path: path.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
