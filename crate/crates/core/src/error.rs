use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root datum: {0}")]
    UnsupportedDatum(String),

    #[error("weight has {got} coordinates, datum expects {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("{0} is not a root of the datum")]
    NotARoot(String),

    #[error("simple root index {index} out of range (rank {rank})")]
    SimpleIndexOutOfRange { index: usize, rank: usize },

    #[error("datum mismatch: {0}")]
    DatumMismatch(String),

    #[error("enumeration cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("character is not Weyl-invariant")]
    NotWeylInvariant,

    #[error("not a genuine character: peeling at {0} went negative")]
    NotGenuine(String),

    #[error("invalid embedding data: {0}")]
    InvalidEmbedding(String),

    #[error("inconsistent restriction: {0}")]
    InconsistentRestriction(String),

    #[error("ascent precondition fails: {0}")]
    AscentPrecondition(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
