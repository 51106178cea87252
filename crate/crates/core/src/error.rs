use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range 1..={bound} for {what}")]
    IndexOutOfRange { what: &'static str, index: usize, bound: usize },
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("family mismatch: {0}")]
    FamilyMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("calibration failed: {0}")]
    CalibrationFailure(String),
    #[error("restriction does not factor: {0}")]
    FactorizationFailure(String),
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if index == 0 || index > bound {
        Err(Error::IndexOutOfRange { what, index, bound })
    } else {
        Ok(())
    }
}
