use thiserror::Error;

use crate::report::{CertificationReport, ValidationReport};

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field error: {0}")]
    Field(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("composition error: {0}")]
    Composition(String),
    #[error("index out of range: {0}")]
    Range(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("truncation error: {0}")]
    Truncation(String),
    #[error("validation failed:\n{0}")]
    Validation(ValidationReport),
    #[error("certification failed:\n{0}")]
    Certification(CertificationReport),
    #[error("restriction failed: {0}")]
    Restriction(String),
    #[error("operator is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("matrix is singular")]
    Singular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
