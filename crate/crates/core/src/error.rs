use thiserror::Error;

use crate::root_data::RootFamily;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not supported for type {family}")]
    InvalidRank { family: RootFamily, rank: usize },

    #[error("index {index} is outside 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("expected {expected} weight coordinates, got {got}")]
    WeightLength { expected: usize, got: usize },

    #[error("type A weight coordinates must sum to zero, got sum {0}")]
    UnnormalizedWeight(i64),

    #[error("weights belong to different root data")]
    DatumMismatch,

    #[error("fundamental-weight coordinates {0:?} do not give an integral weight")]
    NonIntegral(Vec<i64>),

    #[error("weight {weight} is not on the boundary of shell {k}")]
    NotOnBoundary { weight: String, k: u32 },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid element: {0}")]
    InvalidElement(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("component {k} exceeds level {level}")]
    ComponentOutOfRange { k: u32, level: u32 },

    #[error("json: {0}")]
    Json(String),

    #[error("instance has {size} elements, above the limit {limit}; pass --force to run it")]
    TooLarge { size: u128, limit: u128 },

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
