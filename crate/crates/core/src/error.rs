use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    EvenOrCompositeModulus(u64),
    #[error("characteristic 2 is rejected")]
    Char2Rejected,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse scalar: {0:?}")]
    ParseError(String),
    #[error("basis element 0 is not a two-sided unit, first violation at product ({i},{j})")]
    UnitConventionViolated { i: usize, j: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("linear map is singular")]
    Singular,
    #[error("involution is not strong, witness basis index {0}")]
    NotStrong(usize),
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("involution failed verification: {0}")]
    InvolutionNotVerified(String),
    #[error("map is not an involutive algebra automorphism: {0}")]
    NotAutomorphism(String),
    #[error("twisting-map axioms failed: {}", .0.detail)]
    AxiomsFailed(CheckReport),
    #[error("hypothesis {tag} failed")]
    HypothesisFailed { tag: String },
    #[error("internal consistency check failed: {0}")]
    VerificationFailed(String),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("malformed algebra file: {0}")]
    BadFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
