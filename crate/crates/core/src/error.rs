use crate::expr::ExprError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("elements belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),
    #[error("antisymmetry fails at [{0},{1}]")]
    Antisymmetry(usize, usize),
    #[error("Jacobi identity fails for ({0},{1},{2})")]
    Jacobi(usize, usize, usize),
    #[error("malformed algebra text, line {line}: {msg}")]
    AlgebraText { line: usize, msg: String },
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0} did not converge")]
    NoConvergence(String),
    #[error("matrix is not in the span of the realization")]
    NotInImage,
    #[error("invalid catalog data: {0}")]
    Catalog(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
