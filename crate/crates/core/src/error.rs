use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("invalid instance: {0}")]
    Semantic(String),
    #[error("dimension bound exceeded: new basis paths of length {0}")]
    DimensionBound(usize),
    #[error("idempotent splitting failed: {0}; try a different field")]
    NonSplit(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("invalid structure: {0}")]
    Invariant(String),
    #[error("not in the subcategory: {0}")]
    Membership(String),
    #[error("cluster tilting violation: {0}")]
    ClusterTilting(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("knitting did not terminate within {0} indecomposables")]
    KnittingBound(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
