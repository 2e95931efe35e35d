use alloc::string::String;

use crate::arith::ArithError;

/// Errors from the combinatorial, group and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid rank {n} for type {group}")]
    InvalidRank { group: &'static str, n: usize },
    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },
    #[error("operation needs a double shape")]
    SingleShape,
    #[error("group of order {size} exceeds the enumeration cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("rank {n} exceeds the verification cap {cap} for type {group}")]
    RankCapExceeded { group: &'static str, n: usize, cap: usize },
    #[error("elements belong to different groups")]
    MixedGroups,
    #[error("flavor {flavor} is not defined for type {group}")]
    InvalidFlavor { group: &'static str, flavor: &'static str },
    #[error(transparent)]
    Arith(#[from] ArithError),
}
