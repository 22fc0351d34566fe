use thiserror::Error;

/// Errors raised by field construction and linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NonPrime(u16),
    #[error("extension degree {0} exceeds the supported maximum of 4")]
    DegreeTooLarge(u8),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("characteristic {0} exceeds the supported maximum of 7")]
    CharTooLarge(u16),
    #[error("modulus {0:?} is not the canonical irreducible polynomial for p={1}, e={2}")]
    NonCanonicalModulus(Vec<u16>, u16, u8),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("operator is not nilpotent (no power up to dimension {0} vanishes)")]
    NotNilpotent(usize),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("fields differ: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid serialized form: {0}")]
    BadJson(String),
}
