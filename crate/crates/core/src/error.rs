use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("size guard: {what} = {got} exceeds the limit {limit}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("algebra specs differ")]
    SpecMismatch,
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
    #[error("matrix is not Hermitian")]
    NotHermitian,
    #[error("value is not real")]
    NonReal,
    #[error("zero polynomial has no root multiplicities")]
    ZeroPolynomial,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
