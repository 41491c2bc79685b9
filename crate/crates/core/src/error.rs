use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },
    #[error("{context}: map does not factor through the quotient, first mismatch at ({row}, {col})")]
    NotFactorizable {
        context: String,
        row: usize,
        col: usize,
    },
    #[error("{context}: law fails at entry ({row}, {col})")]
    LawViolation {
        context: String,
        row: usize,
        col: usize,
    },
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("base monoid mismatch in {0}")]
    BaseMismatch(String),
    #[error("parse error at {path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("unknown name `{0}`")]
    Unknown(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, KernelError>;

pub(crate) fn dim_check(op: &'static str, left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(KernelError::DimensionMismatch { op, left, right })
    }
}
