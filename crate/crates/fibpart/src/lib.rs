//! Zeckendorf and fibbinary codecs, the complement sets they leave behind,
//! and the partition of the positive integers those sets form.
//!
//! The pieces fit together like this:
//!
//! - [`zeckendorf`]: every positive integer is uniquely a sum of
//!   non-consecutive Fibonacci numbers; its coefficient string has a
//!   length `l(n)` that groups the integers into subsets of Fibonacci
//!   cardinality.
//! - [`fibbinary`]: reading that coefficient string as a base-2 numeral
//!   gives an order-preserving bijection onto the integers with no two
//!   adjacent one bits, with odd (`odfib`) and even (`evfib`)
//!   subsequences.
//! - [`complement`]: the integers that are not fibbinary fall into sets
//!   indexed by k >= 1. Each set is generated from the seed `4k - 1` by
//!   closing under doubling and `j -> 4j + 1`, and equally by the closed
//!   form `fib_of(n) + (2k - 1) * 2^l(n)`. Together with the fibbinary
//!   numbers these sets partition the positive integers; [`complement::classify`]
//!   computes the unique (set, index) address of any integer by splitting
//!   its binary form at the rightmost pair of adjacent ones.
//! - [`oracle`]: brute-force re-derivations of all of the above (string
//!   scans, breadth-first closures, coverage bitmaps) for exhaustive
//!   verification at desk scale.
//! - [`tables`]: text renderings of the set tables and odd-number arrays.
//! - [`bfile`]: OEIS b-file export of the sequences involved.
//!
//! All functions are pure and the types are plain values, so everything
//! can be called concurrently without restriction.

pub mod bfile;
pub mod complement;
pub mod error;
pub mod fibbinary;
pub mod oracle;
pub mod tables;
pub mod zeckendorf;

pub use error::{Error, Result};

pub use complement::{
    alpha, classify, decompose_odd, generate_by_closure, phi, psi, psi_stream, OddSplit,
    PartitionCell, SetId, SetKind,
};
pub use fibbinary::{
    evfib_of, fib_of, fib_rank, fib_stream, is_fibbinary, odfib_of, odfib_rank, FibEntry,
    FibbinaryNumber, FibStream,
};
pub use zeckendorf::{
    fibonacci, subset_index, zeckendorf_decode, zeckendorf_encode, zr_length, ZeckendorfRep,
};
