use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("invalid frame: {0}")]
    InvalidFrame(ValidationReport),

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("invalid almost contact structure: {0}")]
    InvalidContact(ValidationReport),

    #[error("vector field must be nonzero")]
    ZeroVectorField,

    #[error("manifest error: {}", .0.join("; "))]
    Manifest(Vec<String>),

    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
