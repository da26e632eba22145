use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("gluing is not an involution: tetrahedron {tet} face {face}")]
    NonInvolutive { tet: usize, face: usize },
    #[error("face {face} of tetrahedron {tet} is glued to itself")]
    SelfGluedFace { tet: usize, face: usize },
    #[error("tetrahedron index {index} out of range (triangulation has {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("triangulation is not orientable")]
    NonOrientable,
    #[error("quadrilateral vector has no standard lift: {0}")]
    NoLift(String),
    #[error("summands are incompatible in tetrahedron {tet}")]
    Incompatible { tet: usize },
    #[error("coordinates violate the matching equations: {0}")]
    MatchingViolated(String),
    #[error("coordinates violate the quadrilateral constraints in tetrahedron {tet}")]
    NotAdmissible { tet: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
