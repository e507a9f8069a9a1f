use thiserror::Error;

use crate::ring::RingParams;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring parameters k={k}, m={m}: {reason}")]
    InvalidParams { k: u32, m: u32, reason: &'static str },

    #[error("ring parameter mismatch: {left} vs {right}")]
    ParamsMismatch { left: RingParams, right: RingParams },

    #[error("integer {value} out of range for {params} (must be < {limit})")]
    EncodingOutOfRange { value: u64, params: RingParams, limit: u64 },

    #[error("element is not a unit")]
    NotAUnit,

    #[error("cannot parse ring element {input:?}: {reason}")]
    ParseElement { input: String, reason: String },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("Gray map phi_k1 requires m = 1, got {params}")]
    GrayRequiresChainRing { params: RingParams },

    #[error("generator matrix is not in standard form [I | A]")]
    NotStandardForm,

    #[error("computation refused: {what} needs {needed}, limit is {limit}")]
    OverBudget { what: &'static str, needed: u128, limit: u128 },

    #[error("code has no nonzero codeword")]
    ZeroCode,

    #[error("dimension {dimension} exceeds the {algorithm} limit of {limit}")]
    DimensionLimit { algorithm: &'static str, dimension: usize, limit: usize },

    #[error("code is not self-dual")]
    NotSelfDual,

    #[error("circulant orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("circulant blocks need order at least 1")]
    EmptyCirculant,

    #[error("no weight-enumerator hypothesis fits length {length}: {detail}")]
    NoConsistentFamily { length: usize, detail: String },

    #[error("{what} {value} is not divisible by {divisor}")]
    NotDivisible { what: &'static str, value: i128, divisor: u128 },

    #[error("unknown table {id:?}; known: {known}")]
    UnknownTable { id: String, known: String },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
