use thiserror::Error;

/// Errors raised anywhere in the algebra stack.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("zero polynomial in divisor list at position {0}")]
    InvalidDivisor(usize),
    #[error("polynomial is not a member of the ideal")]
    NotInIdeal,
    #[error("the quotient is the zero ring and has no Krull dimension")]
    DimensionOfZeroRing,
    #[error("relations generate the unit ideal")]
    ZeroRing,
    #[error("relation {index} does not vanish under the proposed images (residue {residue})")]
    NotWellDefined { index: usize, residue: String },
    #[error("variable `{0}` already exists")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("row is not unimodular")]
    NotUnimodular,
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("bad certificate: {0}")]
    BadCertificate(String),
    #[error("no shrinking coefficients found within a budget of {budget} candidates")]
    ShrinkFailed { budget: usize },
    #[error("scalar is not a unit")]
    InvalidUnit,
    #[error("operation requires characteristic different from 2")]
    CharacteristicTwoUnsupported,
    #[error("height check failed: expected height {expected}, found {found}")]
    HeightMismatch { expected: usize, found: usize },
    #[error("certificate assembly failed at stage `{stage}`")]
    CertificateAssemblyFailed { stage: String },
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
