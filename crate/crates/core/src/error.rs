use alloc::string::String;
use core::fmt;

use crate::rootsys::Family;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// The family/rank pair does not name a simple Lie algebra.
    InvalidType { family: Family, rank: usize },
    /// Rank above the configured ceiling.
    RankCeiling { rank: usize, ceiling: usize },
    /// A node index outside `1..=rank`.
    IndexOutOfRange { index: usize, rank: usize },
    /// A vector whose length does not match the rank.
    LengthMismatch { expected: usize, found: usize },
    /// The operation needs a dominant weight.
    NonDominant,
    /// The module would exceed the configured dimension ceiling.
    DimensionCeiling { dim: u64, ceiling: u64 },
    /// Exact integer arithmetic overflowed.
    Overflow,
    /// A quantity that must lie in ½ℤ (or ℤ) did not.
    NotHalfIntegral,
    /// The operation is only defined for some families.
    WrongFamily { family: Family },
    /// The grading constraint has a zero coefficient, so the search is unbounded.
    Unbounded,
    /// The pairing requested for a module contradicts its self-duality.
    PairingMismatch,
    /// A consistency check inside an algorithm failed.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType { family, rank } => {
                write!(f, "invalid Lie type {family}{rank}")
            }
            Error::RankCeiling { rank, ceiling } => {
                write!(f, "rank {rank} exceeds the rank ceiling {ceiling}")
            }
            Error::IndexOutOfRange { index, rank } => {
                write!(f, "node index {index} out of range 1..={rank}")
            }
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Error::NonDominant => f.write_str("weight is not dominant"),
            Error::DimensionCeiling { dim, ceiling } => {
                write!(f, "module dimension {dim} exceeds the dimension ceiling {ceiling}")
            }
            Error::Overflow => f.write_str("integer overflow in exact arithmetic"),
            Error::NotHalfIntegral => f.write_str("value is not a half-integer"),
            Error::WrongFamily { family } => write!(f, "operation not defined for type {family}"),
            Error::Unbounded => f.write_str("grading constraint has a non-positive coefficient"),
            Error::PairingMismatch => {
                f.write_str("pairing does not match the self-duality of the highest weight")
            }
            Error::Internal(msg) => write!(f, "internal consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
