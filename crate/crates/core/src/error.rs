use thiserror::Error;

use crate::intervals::Interval;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid interval [{left},{right}]: {reason}")]
    InvalidInterval {
        left: u32,
        right: u32,
        reason: &'static str,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{0} is not a member of the set")]
    NotAMember(Interval),

    #[error("{0} has no interior (left endpoint equals right endpoint)")]
    EmptyInterior(Interval),

    #[error("D = {d} exceeds the enumeration ceiling {ceiling}")]
    ResourceLimit { d: u32, ceiling: u32 },

    #[error("vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("subspace is not of the form <B>_1 for any B in S_{d}")]
    NotRealizable { d: u32 },

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("no exceptional family of size {0} (expected one of 1, 2, 3, 4, 5, 11, 17)")]
    UnknownFamily(u32),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
