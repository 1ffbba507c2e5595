use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldSpecError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse field `{0}` (expected `q` or `p:<prime>`)")]
    Syntax(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: vertex `{token}` appears twice in one facet")]
    DuplicateVertex { line: usize, token: String },
    #[error("no facets in input")]
    Empty,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("{0} is not a face of the complex")]
    NotAFace(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(u32),
    #[error("stellar subdivision needs a face of positive dimension, got {0}")]
    SubdivideVertex(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("f-vector has length {len}, expected d+1 = {expected}")]
    LengthMismatch { len: usize, expected: usize },
}

/// A result was requested for a complex outside the class it is valid for.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("precondition failed: {0}")]
pub struct PreconditionError(pub String);

impl PreconditionError {
    pub fn new(msg: impl Into<String>) -> Self {
        PreconditionError(msg.into())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FaceRingError {
    #[error("field {0} is too small to emulate a generic choice (need at least 2^31 - 1 elements)")]
    FieldTooSmall(String),
    #[error("no linear system of parameters found after {attempts} attempts (seed {seed})")]
    RetryCapExceeded { seed: u64, attempts: u32 },
    #[error("forms do not form a linear system of parameters: quotient is nonzero in degree {degree}")]
    NotAnLsop { degree: usize },
    #[error("expected {expected} forms on {vertices} vertices")]
    Shape { expected: usize, vertices: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldSpecError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Precondition(#[from] PreconditionError),
    #[error(transparent)]
    FaceRing(#[from] FaceRingError),
    #[error("{0}")]
    Data(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
