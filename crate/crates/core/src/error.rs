use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("field error: {0}")]
    Field(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Structural inconsistency of a category presentation (shapes, indices).
    #[error("malformed category data: {0}")]
    Shape(String),

    #[error("invalid module: {0}")]
    Module(String),

    #[error("object list is not closed under tensor products: {left} ⊗ {right} is not listed")]
    NotTensorComplete { left: String, right: String },

    #[error("diagram layers do not chain: {0}")]
    Chain(String),

    #[error("box does not match its strands: {0}")]
    BoxMismatch(String),

    #[error("morphism does not factor as required: {0}")]
    Factorization(String),

    #[error("admissibility violated: {0}")]
    Admissibility(String),

    #[error("bifunctor presentation is not functorial: {0}")]
    NotFunctorial(String),

    #[error("missing sum/retract witness for object {0}")]
    MissingWitness(String),

    #[error("size budget exceeded: {0}")]
    Budget(String),

    #[error("unknown object or subcategory: {0}")]
    Unknown(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
