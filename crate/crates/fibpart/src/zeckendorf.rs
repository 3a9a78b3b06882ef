//! Fibonacci numbers and the Zeckendorf representation codec.
//!
//! Every positive integer n is uniquely a sum of non-consecutive Fibonacci
//! numbers drawn from 1, 2, 3, 5, 8, ... (indexed from 2, so that the two
//! leading 1s of the classical sequence cause no ambiguity). The coefficient
//! string of that sum, written most significant first, is the Zeckendorf
//! representation of n. Its digit count is the length `l(n)`, and grouping
//! integers by length splits the positive integers into subsets of Fibonacci
//! cardinality.

use crate::error::{Error, Result};

/// Largest Fibonacci index whose value fits in 64 bits.
pub const MAX_FIB_INDEX: u32 = 93;

/// `FIB[i]` holds the i-th Fibonacci number, anchored by `FIB[1] = 1` and
/// `FIB[2] = 1` so that indices match the 1, 2, 3, 5, ... convention from
/// index 2 upward.
const FIB: [u64; MAX_FIB_INDEX as usize + 1] = {
    let mut t = [0u64; MAX_FIB_INDEX as usize + 1];
    t[1] = 1;
    let mut i = 2;
    while i < t.len() {
        t[i] = t[i - 1] + t[i - 2];
        i += 1;
    }
    t
};

/// Returns the Fibonacci number of the given index (starting at 2, so
/// `fibonacci(2) = 1`, `fibonacci(3) = 2`, ...).
pub fn fibonacci(index: u32) -> Result<u64> {
    if (2..=MAX_FIB_INDEX).contains(&index) {
        Ok(FIB[index as usize])
    } else {
        Err(Error::FibIndexRange {
            index: index as u64,
        })
    }
}

/// Fibonacci lookup for indices already known to be in range.
pub(crate) fn fib_unchecked(index: u32) -> u64 {
    FIB[index as usize]
}

/// Largest index r with `F_r <= n`; requires n >= 1.
fn top_fib_index(n: u64) -> u32 {
    debug_assert!(n >= 1);
    let mut r = 2;
    while r < MAX_FIB_INDEX && FIB[r as usize + 1] <= n {
        r += 1;
    }
    r
}

/// The Zeckendorf representation of a positive integer: a coefficient
/// string over {0, 1} with a leading one and no two adjacent ones,
/// most significant coefficient first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZeckendorfRep {
    /// Bit j holds the coefficient of the Fibonacci number of index j + 2.
    /// 128 bits because a string can run to index 93, i.e. bit 91.
    mask: u128,
    /// The integer the coefficients sum back to.
    source: u64,
}

impl ZeckendorfRep {
    /// Parses a coefficient string such as `"10101"` (most significant
    /// first), validating the leading-one and no-adjacent-ones invariants.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.starts_with('1') {
            return Err(Error::LeadingZero);
        }
        let mut mask: u128 = 0;
        for (offset, ch) in s.chars().enumerate() {
            mask <<= 1;
            match ch {
                '1' => {
                    if mask & 2 != 0 {
                        return Err(Error::AdjacentCoefficients { offset: offset - 1 });
                    }
                    mask |= 1;
                }
                '0' => {}
                _ => return Err(Error::InvalidBitChar { ch }),
            }
            if offset >= MAX_FIB_INDEX as usize - 1 {
                // index r = offset+2 would pass the end of the table
                return Err(Error::Overflow {
                    what: "decoded value",
                });
            }
        }
        let source = sum_coefficients(mask)?;
        Ok(Self { mask, source })
    }

    /// The integer this representation encodes.
    pub fn source(&self) -> u64 {
        self.source
    }

    /// Number of coefficients, i.e. the length `l(n)`.
    pub fn len(&self) -> u32 {
        128 - self.mask.leading_zeros()
    }

    /// A representation is never empty; provided for completeness.
    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Index of the most significant coefficient (the largest Fibonacci
    /// index taking part in the sum).
    pub fn top_index(&self) -> u32 {
        self.len() + 1
    }

    /// Coefficient of the Fibonacci number of the given index.
    pub fn coefficient(&self, index: u32) -> bool {
        index >= 2 && index <= self.top_index() && self.mask >> (index - 2) & 1 == 1
    }

    /// The raw coefficient mask, bit j holding the coefficient of index j + 2.
    pub fn mask(&self) -> u128 {
        self.mask
    }

    /// The coefficient string, most significant first, e.g. `"10101"`.
    pub fn bit_str(&self) -> String {
        (0..self.len())
            .rev()
            .map(|j| if self.mask >> j & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl std::fmt::Display for ZeckendorfRep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.bit_str())
    }
}

fn sum_coefficients(mask: u128) -> Result<u64> {
    let mut total: u64 = 0;
    let mut rest = mask;
    while rest != 0 {
        let j = rest.trailing_zeros();
        total = total
            .checked_add(FIB[j as usize + 2])
            .ok_or(Error::Overflow {
                what: "decoded value",
            })?;
        rest &= rest - 1;
    }
    Ok(total)
}

/// Encodes a positive integer as its Zeckendorf representation by the
/// greedy largest-Fibonacci-first rule.
pub fn zeckendorf_encode(n: u64) -> Result<ZeckendorfRep> {
    if n == 0 {
        return Err(Error::ZeroOutOfDomain);
    }
    let mut mask: u128 = 0;
    let mut rest = n;
    let mut i = top_fib_index(n);
    while rest > 0 {
        if FIB[i as usize] <= rest {
            mask |= 1 << (i - 2);
            rest -= FIB[i as usize];
            // the remainder is below F_{i-1}, so the next coefficient
            // taken can be at most i-2: no adjacent ones arise
            i = i.saturating_sub(2);
        } else {
            i -= 1;
        }
    }
    debug_assert!(mask & (mask >> 1) == 0);
    Ok(ZeckendorfRep { mask, source: n })
}

/// Sums the represented Fibonacci numbers back to the encoded integer.
pub fn zeckendorf_decode(rep: &ZeckendorfRep) -> u64 {
    let n = sum_coefficients(rep.mask).expect("validated representation fits 64 bits");
    debug_assert_eq!(n, rep.source);
    n
}

/// The length `l(n)` of the Zeckendorf representation of n.
pub fn zr_length(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::ZeroOutOfDomain);
    }
    Ok(top_fib_index(n) - 1)
}

/// The index k of the length-k subset containing n. The subset of index k
/// has exactly F_k members, the largest being `F_{k+2} - 1`.
pub fn subset_index(n: u64) -> Result<u32> {
    zr_length(n)
}
