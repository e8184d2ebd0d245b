use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition syntax `{0}`")]
    PartitionSyntax(String),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("dimension mismatch in {op}: {lhs} vs {rhs}")]
    DimensionMismatch {
        op: &'static str,
        lhs: String,
        rhs: String,
    },

    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    #[error("{0} is not a basic diagram for p = {1}")]
    NotBasic(Partition, u32),

    #[error("{core} is not a {p}-core compatible with degree {d}")]
    InvalidCore { core: Partition, p: u32, d: usize },

    #[error("partition {lambda} has more than {n} rows")]
    TooManyRows { lambda: Partition, n: usize },

    #[error("weight mismatch: {lambda} does not have weight {d}")]
    WeightMismatch { lambda: Partition, d: usize },

    #[error("character coefficient of {0} is not {1}-integral")]
    NonIntegralCharacter(Partition, u32),

    #[error("simple module list is incomplete: {0}")]
    IncompleteSimples(String),

    #[error("idempotent lifting did not converge after {0} steps")]
    LiftingDidNotConverge(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn mismatch(op: &'static str, lhs: impl ToString, rhs: impl ToString) -> Self {
        Error::DimensionMismatch {
            op,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn cap(what: &'static str, needed: impl Into<u128>, cap: impl Into<u128>) -> Self {
        Error::ResourceCap {
            what,
            needed: needed.into(),
            cap: cap.into(),
        }
    }

    /// True for refusals caused by a size cap rather than by bad input.
    pub fn is_resource_refusal(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}
