use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inhomogeneous polynomial: `{0}`")]
    Inhomogeneous(String),
    #[error("invalid parameter: {0}")]
    Invalid(String),
    #[error("degree bound {0} too small: {1}")]
    BoundTooSmall(usize, String),
    #[error("quotient is not Artinian (Hilbert function still {1} at degree {0})")]
    NotArtinian(usize, usize),
    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),
    #[error("graded map violation: {0}")]
    Graded(String),
    #[error("instance validation failed after {0} attempts (socle shape not generic)")]
    InstanceValidation(usize),
    #[error("mathematical check failed: {0}")]
    CheckFailed(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
