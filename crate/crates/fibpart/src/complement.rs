//! The complement sets and the partition of the positive integers they
//! induce.
//!
//! Set 0 is the fibbinary numbers. For k >= 1, set k starts from the seed
//! `alpha(k) = 4k - 1` (the k-th odd number that is not fibbinary) and is
//! closed under `j -> 2j` and `j -> 4j + 1`. The same sets have a closed
//! form: the n-th element of set k is `fib_of(n) + (2k - 1) * 2^l(n)`.
//! Every positive integer lies in exactly one set, at exactly one index;
//! [`classify`] computes that address by splitting the binary string at
//! its rightmost pair of adjacent ones.

use crate::error::{Error, Result};
use crate::fibbinary::{fib_of, is_fibbinary, odfib_of, FibbinaryNumber};
use crate::zeckendorf::zr_length;

/// Largest supported set index: `alpha(MAX_SET_INDEX)` is the top of the
/// 64-bit range.
pub const MAX_SET_INDEX: u64 = 1 << 62;

/// Whether a set identifier names the full set or its odd members only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetKind {
    /// The full set (fibbinary numbers for k = 0).
    Phi,
    /// The odd members (odfib for k = 0).
    Psi,
}

/// Names one of the sets of the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetId {
    pub kind: SetKind,
    pub k: u64,
}

impl SetId {
    /// The members of the named set that do not exceed `limit`, ascending.
    pub fn members_up_to(&self, limit: u64) -> Vec<u64> {
        match self.kind {
            SetKind::Phi => generate_by_closure(self.k, limit),
            SetKind::Psi => psi_stream(self.k, limit),
        }
    }
}

impl std::fmt::Display for SetId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            SetKind::Phi => write!(f, "phi_{}", self.k),
            SetKind::Psi => write!(f, "psi_{}", self.k),
        }
    }
}

/// The unique address of a positive integer in the partition: set index k
/// (0 meaning the fibbinary numbers) and element index n within the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PartitionCell {
    pub k: u64,
    pub n: u64,
}

/// An odd integer split at the rightmost pair of adjacent one bits in its
/// binary form. The suffix from the right bit of the pair onward is an odd
/// fibbinary number (`op`); the prefix through the left bit is an odd
/// number (`pp`), zero when the integer is fibbinary and no pair exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddSplit {
    pub pp: u64,
    pub op: FibbinaryNumber,
    pub op_bitlen: u32,
}

impl OddSplit {
    /// Joins the two parts back into the original integer.
    pub fn reassemble(&self) -> u64 {
        if self.pp == 0 {
            // op_bitlen can be the full width here; no prefix to shift in
            return self.op.value();
        }
        (self.pp << self.op_bitlen) | self.op.value()
    }
}

/// Seed of set k for k >= 1: the k-th odd integer that is not fibbinary.
///
/// Panics if k is 0 (set 0 is seeded by 1, not by this formula) or exceeds
/// [`MAX_SET_INDEX`].
pub fn alpha(k: u64) -> u64 {
    assert!(k >= 1, "alpha is defined for k >= 1");
    assert!(k <= MAX_SET_INDEX, "alpha(k) exceeds the 64-bit width");
    // 4k - 1, phrased to stay in range at k = MAX_SET_INDEX
    4 * (k - 1) + 3
}

const PHI_OVERFLOW: Error = Error::Overflow {
    what: "element of set k",
};

/// The n-th element of set k. Set 0 is the fibbinary sequence; for k >= 1
/// the element is `fib_of(n) + (2k - 1) * 2^l(n)`, so `phi(k, 1) = alpha(k)`
/// and the map is increasing in n.
pub fn phi(k: u64, n: u64) -> Result<u64> {
    if k == 0 {
        if n == 0 {
            return Err(Error::ZeroOutOfDomain);
        }
        return fib_of(n).map(FibbinaryNumber::value);
    }
    if n == 0 {
        // index 0 of a complement set is undefined, not a sentinel
        return Err(Error::IndexZeroUndefined { k });
    }
    if k > MAX_SET_INDEX {
        return Err(PHI_OVERFLOW);
    }
    let f = fib_of(n)?.value();
    let shifted = shift_odd_prefix(2 * k - 1, zr_length(n)?)?;
    f.checked_add(shifted).ok_or(PHI_OVERFLOW)
}

/// The n-th odd element of set k: `odfib_of(n) + (2k - 1) * 2^bitlen(odfib_of(n))`
/// for k >= 1, the odfib sequence itself for k = 0. Defined from n = 0, with
/// `psi(k, 0) = alpha(k)`.
pub fn psi(k: u64, n: u64) -> Result<u64> {
    let o = odfib_of(n)?;
    if k == 0 {
        return Ok(o.value());
    }
    if k > MAX_SET_INDEX {
        return Err(PHI_OVERFLOW);
    }
    let shifted = shift_odd_prefix(2 * k - 1, o.bit_len())?;
    o.value().checked_add(shifted).ok_or(PHI_OVERFLOW)
}

/// `prefix * 2^shift` within 64 bits.
fn shift_odd_prefix(prefix: u64, shift: u32) -> Result<u64> {
    let wide = (prefix as u128) << shift;
    u64::try_from(wide).map_err(|_| PHI_OVERFLOW)
}

/// All elements of set k up to `limit`, generated from the seed by closing
/// under `j -> 2j` and `j -> 4j + 1`, sorted ascending.
///
/// Both images of a member are new members (an even and a `1 mod 4` one),
/// so the closure is a tree and no deduplication is needed.
pub fn generate_by_closure(k: u64, limit: u64) -> Vec<u64> {
    let mut members = Vec::new();
    if k > MAX_SET_INDEX {
        return members;
    }
    let seed = if k == 0 { 1 } else { alpha(k) };
    if seed > limit {
        return members;
    }
    let mut work = vec![seed];
    while let Some(j) = work.pop() {
        members.push(j);
        let doubled = j as u128 * 2;
        if doubled <= limit as u128 {
            work.push(doubled as u64);
        }
        let odd_child = j as u128 * 4 + 1;
        if odd_child <= limit as u128 {
            work.push(odd_child as u64);
        }
    }
    members.sort_unstable();
    members
}

/// Splits an odd integer at the rightmost adjacent pair of one bits.
/// Fibbinary inputs have no pair and split as `pp = 0`, `op = m`.
pub fn decompose_odd(m: u64) -> Result<OddSplit> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::NotOdd { value: m });
    }
    let pair = m & (m >> 1);
    if pair == 0 {
        return Ok(OddSplit {
            pp: 0,
            op: FibbinaryNumber::new(m)?,
            op_bitlen: 64 - m.leading_zeros(),
        });
    }
    let low = pair.trailing_zeros();
    // the pair occupies bits low and low+1: the suffix from bit low down
    // is the odfib part, the rest the odd principal part
    let op = m & ((1 << (low + 1)) - 1);
    let pp = m >> (low + 1);
    debug_assert!(pp % 2 == 1 && op % 4 == 1);
    Ok(OddSplit {
        pp,
        op: FibbinaryNumber::new(op)?,
        op_bitlen: low + 1,
    })
}

/// The unique partition address of a positive integer.
///
/// Fibbinary integers classify into set 0 at their rank. Anything else is
/// `odd * 2^r`; the odd part's principal part `2k - 1` names the set, and
/// the rank of the remaining fibbinary residue gives the index, so that
/// `phi(cell.k, cell.n) = m` always holds.
///
/// ```
/// use fibpart::{classify, phi};
///
/// let cell = classify(57)?;
/// assert_eq!((cell.k, cell.n), (2, 6));
/// assert_eq!(phi(2, 6)?, 57);
/// # Ok::<(), fibpart::Error>(())
/// ```
pub fn classify(m: u64) -> Result<PartitionCell> {
    if m == 0 {
        return Err(Error::ZeroOutOfDomain);
    }
    if is_fibbinary(m) {
        let n = FibbinaryNumber::new(m).expect("just checked").rank();
        return Ok(PartitionCell { k: 0, n });
    }
    let r = m.trailing_zeros();
    let split = decompose_odd(m >> r).expect("odd part of a positive integer");
    debug_assert!(split.pp > 0, "non-fibbinary integers have a pair of ones");
    let k = split.pp.div_ceil(2);
    let residue = FibbinaryNumber::new(split.op.value() << r)
        .expect("a fibbinary suffix stays fibbinary under shifts");
    Ok(PartitionCell {
        k,
        n: residue.rank(),
    })
}

/// The odd elements of set k up to `limit`, ascending: `psi(k, n)` for
/// n = 0, 1, ... while the values stay within the limit.
pub fn psi_stream(k: u64, limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for n in 0.. {
        match psi(k, n) {
            Ok(v) if v <= limit => out.push(v),
            _ => break,
        }
    }
    out
}
