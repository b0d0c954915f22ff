use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order exceeds the enumeration cap of {cap} elements")]
    OrderCapExceeded { cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed group description: {0}")]
    Malformed(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycloError {
    #[error("conductor {conductor} does not divide Galois modulus {modulus}")]
    ConductorMismatch { conductor: u32, modulus: u32 },
    #[error("{r} is not a unit modulo {modulus}")]
    NotAUnit { r: i64, modulus: u32 },
    #[error("malformed cyclotomic value: {0}")]
    Malformed(String),
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("character table validation failed: {0}")]
    ValidationFailed(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("malformed table JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabError {
    #[error("degree {0} is above the exhaustive enumeration bound of 7")]
    DegreeTooLarge(usize),
    #[error("k = {k} does not divide p - 1 = {}", p - 1)]
    InvalidK { k: u64, p: u64 },
    #[error("search space of {0} vectors exceeds the cap")]
    CapExceeded(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
