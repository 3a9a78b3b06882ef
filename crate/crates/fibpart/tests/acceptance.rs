//! Acceptance suite: one test per shipping criterion, each printing a
//! PASS line (visible with `--nocapture`) once its assertions hold.

use std::collections::BTreeMap;
use std::time::Instant;

use fibpart::complement::{classify, generate_by_closure, phi, psi, PartitionCell};
use fibpart::fibbinary::{fib_of, fib_stream, odfib_of};
use fibpart::oracle::{naive_closure_set, naive_membership, verify_odd_partition, verify_partition};
use fibpart::tables::{render_ona1, render_ona2, render_phi_table, TableGrid};
use fibpart::zeckendorf::fibonacci;

/// First 33 fibbinary numbers, through the subset boundary at 85.
const FIB_PREFIX: [u64; 33] = [
    1, 2, 4, 5, 8, 9, 10, 16, 17, 18, 20, 21, 32, 33, 34, 36, 37, 40, 41, 42, 64, 65, 66, 68, 69,
    72, 73, 74, 80, 81, 82, 84, 85,
];

/// Odd fibbinary numbers through 341.
const ODFIB_PREFIX: [u64; 34] = [
    1, 5, 9, 17, 21, 33, 37, 41, 65, 69, 73, 81, 85, 129, 133, 137, 145, 149, 161, 165, 169, 257,
    261, 265, 273, 277, 289, 293, 297, 321, 325, 329, 337, 341,
];

/// The 13-row, 7-column odd-number array.
const ONA1: [[u64; 7]; 13] = [
    [1, 3, 7, 11, 15, 19, 23],
    [5, 13, 29, 45, 61, 77, 93],
    [9, 25, 57, 89, 121, 153, 185],
    [17, 49, 113, 177, 241, 305, 369],
    [21, 53, 117, 181, 245, 309, 373],
    [33, 97, 225, 353, 481, 609, 737],
    [37, 101, 229, 357, 485, 613, 741],
    [41, 105, 233, 361, 489, 617, 745],
    [65, 193, 449, 705, 961, 1217, 1473],
    [69, 197, 453, 709, 965, 1221, 1477],
    [73, 201, 457, 713, 969, 1225, 1481],
    [81, 209, 465, 721, 977, 1233, 1489],
    [85, 213, 469, 725, 981, 1237, 1493],
];

/// Cell layout of the six-row fibbinary table: (row, col, value).
const FIB_TABLE: [(usize, usize, u64); 20] = [
    (1, 0, 1),
    (2, 0, 2),
    (3, 0, 4),
    (3, 8, 5),
    (4, 0, 8),
    (4, 5, 9),
    (4, 8, 10),
    (5, 0, 16),
    (5, 3, 17),
    (5, 5, 18),
    (5, 8, 20),
    (5, 11, 21),
    (6, 0, 32),
    (6, 2, 33),
    (6, 3, 34),
    (6, 5, 36),
    (6, 7, 37),
    (6, 8, 40),
    (6, 10, 41),
    (6, 11, 42),
];

/// Cell layout of the six-row table of set 1: (row, col, value).
const PHI1_TABLE: [(usize, usize, u64); 20] = [
    (1, 0, 3),
    (2, 0, 6),
    (3, 0, 12),
    (3, 8, 13),
    (4, 0, 24),
    (4, 5, 25),
    (4, 8, 26),
    (5, 0, 48),
    (5, 3, 49),
    (5, 5, 50),
    (5, 8, 52),
    (5, 11, 53),
    (6, 0, 96),
    (6, 2, 97),
    (6, 3, 98),
    (6, 5, 100),
    (6, 7, 101),
    (6, 8, 104),
    (6, 10, 105),
    (6, 11, 106),
];

fn assert_grid_matches(grid: &TableGrid, expected: &[(usize, usize, u64)]) {
    let want: BTreeMap<(usize, usize), String> = expected
        .iter()
        .map(|&(r, c, v)| ((r - 1, c), v.to_string()))
        .collect();
    assert_eq!(grid.cells, want);
}

#[test]
fn criterion_01_fib_sequence_fidelity() {
    let started = Instant::now();
    let entries: Vec<_> = fib_stream(85).collect();
    let elapsed = started.elapsed();

    let values: Vec<u64> = entries.iter().map(|e| e.value.value()).collect();
    assert_eq!(values, FIB_PREFIX);
    // block boundaries: ranks 12, 20 and 33 close subsets 5, 6 and 7
    for (rank, value, subset) in [(12u64, 21u64, 5u32), (20, 42, 6), (33, 85, 7)] {
        let e = &entries[rank as usize - 1];
        assert_eq!((e.rank, e.value.value(), e.subset), (rank, value, subset));
        assert!(entries
            .get(rank as usize)
            .is_none_or(|next| next.subset == subset + 1));
    }
    assert!(
        elapsed.as_micros() < 1000,
        "took {elapsed:?}, budget is 1 ms"
    );
    println!("criterion 01 fib sequence fidelity: PASS");
}

#[test]
fn criterion_02_odfib_sequence_fidelity() {
    let mut expected_by_scan = Vec::new();
    for m in (1..=341u64).step_by(2) {
        if !format!("{m:b}").contains("11") {
            expected_by_scan.push(m);
        }
    }
    assert_eq!(expected_by_scan, ODFIB_PREFIX, "frozen listing vs scan");

    let produced: Vec<u64> = (0..34).map(|n| odfib_of(n).unwrap().value()).collect();
    assert_eq!(produced, ODFIB_PREFIX);
    println!("criterion 02 odfib sequence fidelity: PASS");
}

#[test]
fn criterion_03_worked_examples() {
    assert_eq!(psi(2, 2).unwrap(), 57);
    assert_eq!(psi(4, 5).unwrap(), 481);
    assert_eq!(phi(2, 10).unwrap(), 114);
    assert_eq!(phi(4, 17).unwrap(), 485);

    let o = odfib_of(6).unwrap();
    assert_eq!(o.value(), 37);
    assert_eq!(485, o.value() + 7 * (1u64 << o.bit_len()));
    assert_eq!(psi(4, 6).unwrap(), 485);
    println!("criterion 03 worked examples: PASS");
}

#[test]
fn criterion_04_partition_exactness_to_1e6() {
    let report = verify_partition(1_000_000);
    assert_eq!(report.checked, 1_000_000);
    assert!(report.passed(), "{}", report.failure_lines());
    assert!(
        report.elapsed.as_secs() < 10,
        "took {:?}, budget is 10 s",
        report.elapsed
    );
    println!(
        "criterion 04 partition exactness to 1e6: PASS ({:?})",
        report.elapsed
    );
}

#[test]
fn criterion_05_odd_partition_to_1e6() {
    let report = verify_odd_partition(1_000_000);
    assert_eq!(report.checked, 500_000);
    assert!(report.passed(), "{}", report.failure_lines());
    println!(
        "criterion 05 odd partition to 1e6: PASS ({:?})",
        report.elapsed
    );
}

#[test]
fn criterion_06_dual_path_equivalence() {
    let limit = 1u64 << 16;
    for k in 0..=16u64 {
        let mut by_closed_form = Vec::new();
        for n in 1.. {
            match phi(k, n) {
                Ok(v) if v <= limit => by_closed_form.push(v),
                _ => break,
            }
        }
        assert_eq!(generate_by_closure(k, limit), by_closed_form, "set {k}");
    }
    for k in 0..=64u64 {
        for n in 1..=10_000u64 {
            assert_eq!(psi(k, n).unwrap(), 4 * phi(k, n).unwrap() + 1, "k={k} n={n}");
        }
    }
    println!("criterion 06 dual-path equivalence: PASS");
}

#[test]
fn criterion_07_table_reproduction() {
    let fib_grid = render_phi_table(0, 6).unwrap();
    assert_eq!(fib_grid.cols.len(), 13);
    assert_eq!(fib_grid.rows.len(), 6);
    assert_eq!(fib_grid.cols[12], "12");
    assert_grid_matches(&fib_grid, &FIB_TABLE);

    let phi1_grid = render_phi_table(1, 6).unwrap();
    assert_eq!(phi1_grid.cols.len(), 13);
    assert_grid_matches(&phi1_grid, &PHI1_TABLE);

    let ona1 = render_ona1(12, 6).unwrap();
    for (n, row) in ONA1.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            assert_eq!(ona1.get(n, k), Some(v.to_string().as_str()), "({n},{k})");
        }
    }
    assert_eq!(ona1.get(11, 4), Some("977"));

    let ona2 = render_ona2(12, 6).unwrap();
    let text = ona2.to_text();
    let row2 = text.lines().nth(3).expect("row n=2");
    let normalized: Vec<String> = row2.split('|').map(|f| f.trim().to_string()).collect();
    assert_eq!(
        normalized.join(" | "),
        "0:1001 | 1:1001 | 11:1001 | 101:1001 | 111:1001 | 1001:1001 | 1011:1001"
    );
    println!("criterion 07 table reproduction: PASS");
}

#[test]
fn criterion_08_errata_fixtures() {
    // listing prints the seventh subset of set 3 as "706, ..., 725"; the
    // closed form puts 704 and 705 ahead of 706, with 705 its first odd
    // member (in agreement with the odd-member listing "705, 709, ...")
    let block: Vec<u64> = (21..=33).map(|n| phi(3, n).unwrap()).collect();
    assert_eq!(
        block,
        [704, 705, 706, 708, 709, 712, 713, 714, 720, 721, 722, 724, 725]
    );
    assert_eq!(phi(3, 22).unwrap(), 705);
    assert_eq!(block.iter().find(|v| *v % 2 == 1), Some(&705));
    let closure3 = naive_closure_set(3, 725);
    assert_eq!(closure3[closure3.len() - 13..], block[..]);

    // 979 appears in one listing; the set holds 977 there instead
    assert_eq!(psi(4, 11).unwrap(), 977);
    assert!(naive_membership(4, 977, 981));
    assert!(!naive_membership(4, 979, 981));

    // 605, 609, 613 appear in one listing; the set holds 609, 613, 617
    let vals: Vec<u64> = (5..=7).map(|n| psi(5, n).unwrap()).collect();
    assert_eq!(vals, [609, 613, 617]);
    assert!(!naive_membership(5, 605, 617));
    for v in vals {
        assert!(naive_membership(5, v, 617));
    }

    // 747 appears in one listing; the set holds 745 there instead
    assert_eq!(psi(6, 7).unwrap(), 745);
    assert!(naive_membership(6, 745, 745));
    assert!(!naive_membership(6, 747, 747));

    // two inline labels attach 53 and 106 to the wrong set; they are
    // elements 12 and 20 of set 1
    assert_eq!(phi(1, 12).unwrap(), 53);
    assert_eq!(phi(1, 20).unwrap(), 106);

    // one listing shows 47 inside set 6; 47 seeds set 12 instead
    assert!(!naive_membership(6, 47, 47));
    assert_eq!(classify(47).unwrap(), PartitionCell { k: 12, n: 1 });
    assert_eq!(generate_by_closure(6, 47), [23, 46]);
    println!("criterion 08 errata fixtures: PASS");
}

#[test]
fn criterion_09_subset_structure() {
    let top_rank = fibonacci(22).unwrap() - 1;
    let top_value = fib_of(top_rank).unwrap().value();
    let mut count = [0u64; 21];
    let mut max = [0u64; 21];
    for e in fib_stream(top_value) {
        if e.subset <= 20 {
            count[e.subset as usize] += 1;
            max[e.subset as usize] = max[e.subset as usize].max(e.value.value());
        }
    }
    for k in 1..=20u32 {
        // F_1 = 1 sits below the public index window
        let cardinality = if k == 1 { 1 } else { fibonacci(k).unwrap() };
        assert_eq!(count[k as usize], cardinality, "cardinality k={k}");
        let last_rank = fibonacci(k + 2).unwrap() - 1;
        assert_eq!(
            max[k as usize],
            fib_of(last_rank).unwrap().value(),
            "maximum k={k}"
        );
    }
    println!("criterion 09 subset structure: PASS");
}

#[test]
fn criterion_10_decomposition_invariants() {
    use fibpart::complement::decompose_odd;
    for k in 0..=64u64 {
        for n in 0..=10_000u64 {
            let split = decompose_odd(psi(k, n).unwrap()).unwrap();
            let expected_pp = if k == 0 { 0 } else { 2 * k - 1 };
            assert_eq!(split.pp, expected_pp, "pp constancy k={k} n={n}");
            assert_eq!(
                split.op.value(),
                odfib_of(n).unwrap().value(),
                "op constancy k={k} n={n}"
            );
        }
    }
    println!("criterion 10 decomposition invariants: PASS");
}
