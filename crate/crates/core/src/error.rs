use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("backend mismatch: cannot combine exact and ball series")]
    BackendMismatch,
    #[error("series exponential needs a zero constant term")]
    NonzeroConstantTerm,
    #[error("zero sequence contains the value 0")]
    ZeroEntry,
    #[error("invalid zero sequence: {0}")]
    InvalidZeros(String),
    #[error("invalid function spec: {0}")]
    InvalidSpec(String),
    #[error("unknown classical factor `{0}`")]
    UnknownFactor(String),
    #[error("reciprocal gamma tail bound not achievable: {0}")]
    RecipGammaTail(String),
    #[error("insufficient certified coefficients in window {lo}..{hi}: found {found}")]
    InsufficientCoefficients { lo: usize, hi: usize, found: usize },
    #[error("invalid window {lo}..{hi} for truncation order {order}")]
    InvalidWindow { lo: usize, hi: usize, order: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("sturm endpoint {0} is a root")]
    EndpointRoot(String),
    #[error("polynomial is not hyperbolic")]
    NotHyperbolic,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("multiplier sequence too short: need index {needed}, have {available}")]
    SequenceTooShort { needed: usize, available: usize },
    #[error("cannot certify: {0}")]
    Uncertified(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
