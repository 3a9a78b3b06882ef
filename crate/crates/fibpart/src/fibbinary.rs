//! The fibbinary numbers: integers whose binary representation has no two
//! adjacent one bits.
//!
//! Reading the Zeckendorf coefficient string of n as a base-2 numeral gives
//! the n-th fibbinary number `fib_of(n)`; the map is an order-preserving
//! bijection from the positive integers onto the fibbinary numbers, inverted
//! by [`fib_rank`]. The odd fibbinary numbers form the `odfib` subsequence
//! (`4 * fib_of(n) + 1`), the even ones `evfib` (`2 * fib_of(n)`).

use crate::error::{Error, Result};
use crate::zeckendorf::{fib_unchecked, zeckendorf_encode};

/// An integer whose binary representation has no two adjacent one bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FibbinaryNumber(u64);

impl FibbinaryNumber {
    /// Validates the no-adjacent-ones condition; the error names the bit
    /// position of the offending pair.
    pub fn new(value: u64) -> Result<Self> {
        let pair = value & (value >> 1);
        if pair == 0 {
            Ok(Self(value))
        } else {
            Err(Error::NotFibbinary {
                value,
                position: pair.trailing_zeros(),
            })
        }
    }

    /// The underlying integer.
    pub fn value(self) -> u64 {
        self.0
    }

    /// Position of this number in the fibbinary sequence; inverse of
    /// [`fib_of`]. Interprets the binary digits as Zeckendorf coefficients
    /// and sums the Fibonacci numbers they select.
    pub fn rank(self) -> u64 {
        let mut total = 0u64;
        let mut rest = self.0;
        while rest != 0 {
            let j = rest.trailing_zeros();
            total += fib_unchecked(j + 2);
            rest &= rest - 1;
        }
        total
    }

    /// Number of binary digits (0 for the value 0).
    pub fn bit_len(self) -> u32 {
        64 - self.0.leading_zeros()
    }
}

impl std::fmt::Display for FibbinaryNumber {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl From<FibbinaryNumber> for u64 {
    fn from(m: FibbinaryNumber) -> u64 {
        m.0
    }
}

/// True iff the binary representation of m has no two adjacent one bits.
#[inline]
pub fn is_fibbinary(m: u64) -> bool {
    m & (m >> 1) == 0
}

/// The n-th fibbinary number: the Zeckendorf coefficient string of n read
/// as a base-2 numeral. `fib_of(0) = 0` by convention.
pub fn fib_of(n: u64) -> Result<FibbinaryNumber> {
    if n == 0 {
        return Ok(FibbinaryNumber(0));
    }
    let mask = zeckendorf_encode(n)?.mask();
    u64::try_from(mask)
        .map(FibbinaryNumber)
        .map_err(|_| Error::Overflow { what: "fib(n)" })
}

/// Position of a fibbinary number in the sequence; `fib_rank(fib_of(n)) = n`.
pub fn fib_rank(m: u64) -> Result<u64> {
    Ok(FibbinaryNumber::new(m)?.rank())
}

/// The n-th odd fibbinary number, `4 * fib_of(n) + 1`. Its binary form is
/// the coefficient string of n followed by `01`, so its bit length is
/// `l(n) + 2`.
pub fn odfib_of(n: u64) -> Result<FibbinaryNumber> {
    let f = fib_of(n)?.value();
    f.checked_mul(4)
        .and_then(|v| v.checked_add(1))
        .map(FibbinaryNumber)
        .ok_or(Error::Overflow { what: "odfib(n)" })
}

/// Inverse of [`odfib_of`]: the index of an odd fibbinary number.
pub fn odfib_rank(m: u64) -> Result<u64> {
    if m.is_multiple_of(2) {
        return Err(Error::NotOdfib {
            value: m,
            reason: "it is even",
        });
    }
    if m % 4 == 3 {
        return Err(Error::NotOdfib {
            value: m,
            reason: "it is congruent to 3 mod 4, which no fibbinary number is",
        });
    }
    if !is_fibbinary(m >> 2) {
        return Err(Error::NotOdfib {
            value: m,
            reason: "(m - 1) / 4 has adjacent one bits",
        });
    }
    fib_rank(m >> 2)
}

/// The n-th even fibbinary number, `2 * fib_of(n)`, for n >= 1.
pub fn evfib_of(n: u64) -> Result<FibbinaryNumber> {
    if n == 0 {
        return Err(Error::ZeroOutOfDomain);
    }
    let f = fib_of(n)?.value();
    f.checked_mul(2)
        .map(FibbinaryNumber)
        .ok_or(Error::Overflow { what: "evfib(n)" })
}

/// A fibbinary number together with its rank and the index of the
/// length subset it belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FibEntry {
    pub value: FibbinaryNumber,
    pub rank: u64,
    pub subset: u32,
}

/// Iterator over all fibbinary numbers up to a limit, in increasing order.
pub struct FibStream {
    next_value: Option<u64>,
    next_rank: u64,
    limit: u64,
}

/// Streams the fibbinary numbers `1, 2, 4, 5, 8, ...` up to and including
/// `limit`, annotated with rank and subset index.
pub fn fib_stream(limit: u64) -> FibStream {
    FibStream {
        next_value: Some(1),
        next_rank: 1,
        limit,
    }
}

/// Smallest fibbinary number strictly greater than m, or None past the
/// 64-bit width. Adds one, then resolves each adjacent pair of ones by
/// carrying into the next higher bit until the condition holds.
fn next_fibbinary(m: u64) -> Option<u64> {
    let mut v = m as u128 + 1;
    loop {
        let pair = v & (v >> 1);
        if pair == 0 {
            return u64::try_from(v).ok();
        }
        let low = pair.trailing_zeros();
        // replace the pair at (low, low+1) and everything below by the
        // next higher power of two
        v = (v >> (low + 2) << (low + 2)) + (1 << (low + 2));
    }
}

impl Iterator for FibStream {
    type Item = FibEntry;

    fn next(&mut self) -> Option<FibEntry> {
        let value = self.next_value.filter(|&v| v <= self.limit)?;
        let entry = FibEntry {
            value: FibbinaryNumber(value),
            rank: self.next_rank,
            subset: 64 - value.leading_zeros(),
        };
        self.next_value = next_fibbinary(value);
        self.next_rank += 1;
        Some(entry)
    }
}
