//! Brute-force verification of the partition claims.
//!
//! Everything here recomputes membership and coverage by pedestrian means:
//! binary strings are scanned character by character, sets are grown
//! breadth-first from their seeds, and coverage is tallied in a bitmap.
//! None of it calls the bit-trick predicates or closed forms it checks, so
//! agreement between the two paths is meaningful evidence.

use std::collections::VecDeque;
use std::time::{Duration, Instant};

use crate::complement::{classify, phi, psi_stream};

/// One verified claim that did not hold.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    /// The integer at which the claim failed.
    pub m: u64,
    /// Compact witness of what was expected, without spaces.
    pub expected: String,
    /// Compact witness of what was observed, without spaces.
    pub actual: String,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FAIL {} {} {}", self.m, self.expected, self.actual)
    }
}

/// Outcome of an exhaustive check over an integer range.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub range_lo: u64,
    pub range_hi: u64,
    /// How many integers were checked.
    pub checked: u64,
    /// Violations found, sorted and truncated to [`FAILURE_CAP`].
    pub failures: Vec<Failure>,
    /// Wall-clock time of the run; excluded from the stable text forms.
    pub elapsed: Duration,
}

/// Reports keep at most this many failures so output stays diagnosable.
pub const FAILURE_CAP: usize = 100;

impl VerificationReport {
    /// True iff the verified property held everywhere.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Stable one-line summary, identical across runs and work splits.
    pub fn summary(&self) -> String {
        if self.passed() {
            format!("OK {} checked", self.checked)
        } else {
            format!(
                "FAIL {} failures in [{}, {}] ({} checked)",
                self.failures.len(),
                self.range_lo,
                self.range_hi,
                self.checked
            )
        }
    }

    /// Machine-readable lines, one `FAIL m expected actual` per failure.
    pub fn failure_lines(&self) -> String {
        let mut out = String::new();
        for f in &self.failures {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }

    fn finish(mut self, started: Instant) -> Self {
        self.failures.sort();
        self.failures.truncate(FAILURE_CAP);
        self.elapsed = started.elapsed();
        self
    }
}

/// Fibbinary test by scanning the binary digit string for "11".
/// Deliberately avoids the single-AND trick it is used to double-check.
pub fn naive_is_fibbinary(m: u64) -> bool {
    !format!("{m:b}").contains("11")
}

/// All members of set k up to `limit`, grown breadth-first from the seed
/// under `j -> 2j` and `j -> 4j + 1`, returned sorted.
pub fn naive_closure_set(k: u64, limit: u64) -> Vec<u64> {
    let seed: u64 = if k == 0 { 1 } else { 4 * k - 1 };
    let mut members = Vec::new();
    if k > u64::MAX / 4 || seed > limit {
        return members;
    }
    let mut queue = VecDeque::from([seed]);
    while let Some(j) = queue.pop_front() {
        members.push(j);
        if let Some(even) = j.checked_mul(2).filter(|&v| v <= limit) {
            queue.push_back(even);
        }
        if let Some(odd) = j
            .checked_mul(4)
            .and_then(|v| v.checked_add(1))
            .filter(|&v| v <= limit)
        {
            queue.push_back(odd);
        }
    }
    members.sort_unstable();
    members
}

/// Membership of m in set k, decided purely by the breadth-first closure.
pub fn naive_membership(k: u64, m: u64, limit: u64) -> bool {
    debug_assert!(m <= limit);
    naive_closure_set(k, limit).binary_search(&m).is_ok()
}

/// Partition address of m recovered without any bit splitting: each
/// candidate set in turn is binary-searched (its elements increase with
/// the index) for an element equal to m.
pub fn search_classify(m: u64) -> Option<(u64, u64)> {
    if m == 0 {
        return None;
    }
    let mut k = 0u64;
    loop {
        // every set from seed 4k - 1 > m onward starts beyond m
        if k >= 1 && k.checked_mul(4).is_none_or(|v| v - 1 > m) {
            return None;
        }
        let (mut lo, mut hi) = (1u64, m); // the n-th element is at least n
        while lo <= hi {
            let mid = lo + (hi - lo) / 2;
            match phi(k, mid) {
                Ok(v) if v == m => return Some((k, mid)),
                Ok(v) if v < m => lo = mid + 1,
                // larger than m, or past the 64-bit width
                _ => hi = mid - 1,
            }
        }
        k += 1;
    }
}

/// Splits `1..=limit` into contiguous chunks, one per job.
fn chunk_ranges(limit: u64, jobs: usize) -> Vec<(u64, u64)> {
    let jobs = jobs.clamp(1, 256) as u64;
    let jobs = jobs.min(limit.max(1));
    let span = limit / jobs;
    let mut start = 1;
    let mut out = Vec::new();
    for i in 0..jobs {
        let end = if i == jobs - 1 { limit } else { start + span - 1 };
        if start <= end {
            out.push((start, end));
        }
        start = end + 1;
    }
    out
}

fn classify_chunk(lo: u64, hi: u64) -> Vec<Failure> {
    let mut failures = Vec::new();
    for m in lo..=hi {
        match classify(m) {
            Ok(cell) => match phi(cell.k, cell.n) {
                Ok(v) if v == m => {}
                Ok(v) => failures.push(Failure {
                    m,
                    expected: format!("m={m}"),
                    actual: format!("phi({},{})={v}", cell.k, cell.n),
                }),
                Err(e) => failures.push(Failure {
                    m,
                    expected: format!("m={m}"),
                    actual: format!("phi({},{})=error:{e:?}", cell.k, cell.n).replace(' ', "_"),
                }),
            },
            Err(e) => failures.push(Failure {
                m,
                expected: "cell".into(),
                actual: format!("error:{e:?}").replace(' ', "_"),
            }),
        }
        if failures.len() >= FAILURE_CAP {
            break;
        }
    }
    failures
}

/// Checks that every integer in `1..=limit` classifies into exactly one
/// cell whose closed form reproduces it, and that streaming every set's
/// members covers the range exactly once.
pub fn verify_partition(limit: u64) -> VerificationReport {
    verify_partition_jobs(limit, 1)
}

/// Range-parallel variant of [`verify_partition`]. The interval is split
/// into contiguous chunks handled by `jobs` threads; results are merged in
/// range order, so the report is identical for any job count.
pub fn verify_partition_jobs(limit: u64, jobs: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport {
        range_lo: 1,
        range_hi: limit,
        checked: limit,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    if limit == 0 {
        return report.finish(started);
    }

    // round-trip phase: classify each m and evaluate its cell
    let chunks = chunk_ranges(limit, jobs);
    if chunks.len() == 1 {
        report.failures.extend(classify_chunk(1, limit));
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|&(lo, hi)| scope.spawn(move || classify_chunk(lo, hi)))
                .collect();
            for h in handles {
                report.failures.extend(h.join().expect("verifier thread"));
            }
        });
    }

    // coverage phase: every set streamed once, every integer hit once
    let mut covered = vec![false; limit as usize + 1];
    for m in 1..=limit {
        if naive_is_fibbinary(m) {
            covered[m as usize] = true;
        }
    }
    let mut k = 1u64;
    while k.checked_mul(4).is_some_and(|v| v - 1 <= limit) {
        for v in naive_closure_set(k, limit) {
            if covered[v as usize] {
                report.failures.push(Failure {
                    m: v,
                    expected: "covered=1".into(),
                    actual: format!("covered=2@k={k}"),
                });
            }
            covered[v as usize] = true;
        }
        k += 1;
    }
    for m in 1..=limit {
        if !covered[m as usize] {
            report.failures.push(Failure {
                m,
                expected: "covered=1".into(),
                actual: "covered=0".into(),
            });
        }
    }

    report.finish(started)
}

/// Checks that every odd integer in `1..=limit` appears in exactly one of
/// the odd-member streams, and that stream 0 holds exactly the integers
/// whose digit-string scan finds no "11".
pub fn verify_odd_partition(limit: u64) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport {
        range_lo: 1,
        range_hi: limit,
        checked: limit.div_ceil(2),
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    if limit == 0 {
        return report.finish(started);
    }

    // source[i] holds 1 + the set index that covered the odd number 2i + 1
    let mut source: Vec<u64> = vec![0; limit.div_ceil(2) as usize];
    let mut k = 0u64;
    loop {
        if k >= 1 && k.checked_mul(4).is_none_or(|v| v - 1 > limit) {
            break;
        }
        for v in psi_stream(k, limit) {
            if v % 2 == 0 {
                report.failures.push(Failure {
                    m: v,
                    expected: "odd".into(),
                    actual: format!("even@k={k}"),
                });
                continue;
            }
            let slot = &mut source[((v - 1) / 2) as usize];
            if *slot != 0 {
                report.failures.push(Failure {
                    m: v,
                    expected: "covered=1".into(),
                    actual: format!("covered=2@k={},k={k}", *slot - 1),
                });
            }
            *slot = k + 1;
        }
        k += 1;
    }

    let mut m = 1u64;
    while m <= limit {
        let slot = source[((m - 1) / 2) as usize];
        if slot == 0 {
            report.failures.push(Failure {
                m,
                expected: "covered=1".into(),
                actual: "covered=0".into(),
            });
        } else {
            // stream 0 must hold exactly the scan-verified fibbinary odds
            let in_fib_stream = slot == 1;
            if in_fib_stream != naive_is_fibbinary(m) {
                report.failures.push(Failure {
                    m,
                    expected: format!("fibbinary={}", naive_is_fibbinary(m)),
                    actual: format!("k={}", slot - 1),
                });
            }
        }
        m += 2;
    }

    report.finish(started)
}
