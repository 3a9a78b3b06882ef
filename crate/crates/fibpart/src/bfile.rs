//! OEIS b-file export: one `n a(n)` pair per line, using each sequence's
//! own index convention.

use std::io::Write;

use crate::complement::{phi, psi};
use crate::error::Result;
use crate::fibbinary::{evfib_of, fib_of, odfib_of};

/// A sequence that can be exported term by term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sequence {
    /// The fibbinary numbers, indexed from 1.
    Fib,
    /// The odd fibbinary numbers, indexed from 0.
    Odfib,
    /// The even fibbinary numbers, indexed from 1.
    Evfib,
    /// Set k of the partition, indexed from 1 (from 1 for k = 0 too).
    Phi(u64),
    /// The odd members of set k, indexed from 0.
    Psi(u64),
}

impl Sequence {
    /// The index of the first term.
    pub fn offset(&self) -> u64 {
        match self {
            Sequence::Fib | Sequence::Evfib | Sequence::Phi(_) => 1,
            Sequence::Odfib | Sequence::Psi(_) => 0,
        }
    }

    /// The term of the given index.
    pub fn term(&self, n: u64) -> Result<u64> {
        match *self {
            Sequence::Fib => fib_of(n).map(|m| m.value()),
            Sequence::Odfib => odfib_of(n).map(|m| m.value()),
            Sequence::Evfib => evfib_of(n).map(|m| m.value()),
            Sequence::Phi(k) => phi(k, n),
            Sequence::Psi(k) => psi(k, n),
        }
    }
}

impl std::fmt::Display for Sequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sequence::Fib => write!(f, "fib"),
            Sequence::Odfib => write!(f, "odfib"),
            Sequence::Evfib => write!(f, "evfib"),
            Sequence::Phi(k) => write!(f, "phi_{k}"),
            Sequence::Psi(k) => write!(f, "psi_{k}"),
        }
    }
}

/// Writes `count` terms in b-file format, starting at the sequence's offset.
pub fn write_bfile<W: Write>(out: &mut W, seq: Sequence, count: u64) -> Result<()> {
    for n in (seq.offset()..).take(count as usize) {
        let term = seq.term(n)?;
        writeln!(out, "{n} {term}").expect("b-file write");
    }
    Ok(())
}
