//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::zeckendorf::MAX_FIB_INDEX;

/// Errors reported by codecs, set constructors and renderers.
///
/// Domain errors (an input outside a function's domain) and range errors
/// (a result that does not fit the 64-bit width) are kept distinct so
/// callers can tell "you asked a meaningless question" from "the answer
/// exists but is too large".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The Zeckendorf representation and everything built on it is
    /// defined for positive integers only.
    #[error("0 has no Zeckendorf representation; inputs must be >= 1")]
    ZeroOutOfDomain,

    /// A Fibonacci index outside the supported window.
    #[error(
        "Fibonacci index {index} out of range: supported indices are 2..={MAX_FIB_INDEX} \
         (F_{next} is the first to exceed 64 bits)",
        next = MAX_FIB_INDEX + 1
    )]
    FibIndexRange {
        /// The rejected index.
        index: u64,
    },

    /// A result does not fit in 64 bits.
    #[error("{what} exceeds the 64-bit width")]
    Overflow {
        /// What was being computed.
        what: &'static str,
    },

    /// A value whose binary form has two adjacent one bits where the
    /// Zeckendorf condition forbids them.
    #[error(
        "{value} (binary {value:b}) is not fibbinary: adjacent one bits at positions {position} and {}",
        position + 1
    )]
    NotFibbinary {
        /// The offending value.
        value: u64,
        /// Bit position (from the least significant bit) of the lower
        /// bit of the offending pair.
        position: u32,
    },

    /// A coefficient string that is empty or does not start with a one.
    #[error("coefficient string must be non-empty and start with 1")]
    LeadingZero,

    /// A coefficient string holding anything other than '0' and '1'.
    #[error("invalid character {ch:?} in coefficient string")]
    InvalidBitChar {
        /// The rejected character.
        ch: char,
    },

    /// A coefficient string with two adjacent ones.
    #[error("coefficient string violates the no-adjacent-ones condition at offset {offset}")]
    AdjacentCoefficients {
        /// Byte offset of the left '1' of the offending pair, counted
        /// from the start (most significant end) of the string.
        offset: usize,
    },

    /// An even (or zero) input where an odd integer is required.
    #[error("expected an odd positive integer, got {value}")]
    NotOdd {
        /// The rejected value.
        value: u64,
    },

    /// An input that is not a member of the odd fibbinary sequence.
    #[error("{value} is not an odfib member: {reason}")]
    NotOdfib {
        /// The rejected value.
        value: u64,
        /// Which membership requirement failed.
        reason: &'static str,
    },

    /// Index 0 of a complement set, which is undefined.
    #[error("set {k} has no element of index 0; indices start at 1")]
    IndexZeroUndefined {
        /// The set index k >= 1.
        k: u64,
    },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
