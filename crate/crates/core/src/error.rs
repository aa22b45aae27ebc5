use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("modulus mismatch: F_{0} vs F_{1}")]
    ModulusMismatch(u32, u32),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("relations do not generate an admissible ideal: {0}")]
    NotAdmissible(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("search guard exceeded: estimated {estimate} candidates, limit {limit} ({what})")]
    Guard { what: String, estimate: u128, limit: u128 },
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
