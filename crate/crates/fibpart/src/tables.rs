//! Text-grid renderers for the structure tables.
//!
//! A set table lays the elements of one set out on a grid: row i holds the
//! members of the i-th length subset, and each column is the geometric
//! chain j, 2j, 4j, ... below one odd member j. Columns are ordered by the
//! dyadic fraction `j / 2^bitlen(j)` of their head, ascending, with heads
//! from one row beyond the rendered depth claiming the interleaved columns
//! they will grow into.
//!
//! The odd-number arrays index differently: column k holds the odd members
//! of set k, row n the n-th of each, either in decimal or split as
//! `prefix:suffix` binary at the rightmost pair of adjacent ones.

use std::collections::BTreeMap;

use crate::complement::{decompose_odd, phi, psi};
use crate::error::{Error, Result};
use crate::zeckendorf::{fibonacci, zr_length, MAX_FIB_INDEX};

/// A sparse text grid with labelled rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableGrid {
    /// Row labels, top to bottom.
    pub rows: Vec<String>,
    /// Column labels, left to right.
    pub cols: Vec<String>,
    /// Cell text by (row, col) position; absent positions render empty.
    pub cells: BTreeMap<(usize, usize), String>,
}

impl TableGrid {
    /// Cell text at a (row, col) position, if present.
    pub fn get(&self, row: usize, col: usize) -> Option<&str> {
        self.cells.get(&(row, col)).map(String::as_str)
    }

    /// Aligned monospace text: a header line of column labels, then one
    /// line per row, cells joined by `" | "`.
    pub fn to_text(&self) -> String {
        let ncols = self.cols.len();
        let mut widths: Vec<usize> = self.cols.iter().map(String::len).collect();
        for (&(_, c), text) in &self.cells {
            widths[c] = widths[c].max(text.len());
        }
        let mut lines = Vec::with_capacity(self.rows.len() + 1);
        let header: Vec<String> = (0..ncols)
            .map(|c| format!("{:>width$}", self.cols[c], width = widths[c]))
            .collect();
        lines.push(header.join(" | "));
        for r in 0..self.rows.len() {
            let row: Vec<String> = (0..ncols)
                .map(|c| {
                    let text = self.get(r, c).unwrap_or("");
                    format!("{text:>width$}", width = widths[c])
                })
                .collect();
            lines.push(row.join(" | "));
        }
        lines.join("\n")
    }

    /// Comma-separated form: header line of column labels, then one line
    /// per row with empty fields for absent cells.
    pub fn to_csv(&self) -> String {
        let ncols = self.cols.len();
        let mut lines = Vec::with_capacity(self.rows.len() + 1);
        lines.push(self.cols.join(","));
        for r in 0..self.rows.len() {
            let row: Vec<&str> = (0..ncols).map(|c| self.get(r, c).unwrap_or("")).collect();
            lines.push(row.join(","));
        }
        lines.join("\n")
    }
}

/// Orders odd column heads by their dyadic fraction `j / 2^bitlen(j)`,
/// compared cross-multiplied so no division is involved.
fn dyadic_order(a: u64, b: u64) -> std::cmp::Ordering {
    let len_a = 64 - a.leading_zeros();
    let len_b = 64 - b.leading_zeros();
    ((a as u128) << len_b).cmp(&((b as u128) << len_a))
}

/// Renders the table of set k down to the given subset row.
pub fn render_phi_table(k: u64, depth: u32) -> Result<TableGrid> {
    assert!(depth >= 1, "a table has at least one row");
    if depth > MAX_FIB_INDEX - 3 {
        return Err(Error::Overflow {
            what: "table depth",
        });
    }
    let last_row_rank = fibonacci(depth + 2)? - 1;
    let last_head_rank = fibonacci(depth + 3)? - 1;

    // heads: odd elements down to one row past the rendered depth
    let mut heads: Vec<u64> = Vec::new();
    for n in 1..=last_head_rank {
        let v = phi(k, n)?;
        if v % 2 == 1 {
            heads.push(v);
        }
    }
    heads.sort_unstable_by(|&a, &b| dyadic_order(a, b));
    let col_of: BTreeMap<u64, usize> = heads.iter().enumerate().map(|(i, &h)| (h, i)).collect();

    let mut cells = BTreeMap::new();
    for n in 1..=last_row_rank {
        let v = phi(k, n)?;
        let head = v >> v.trailing_zeros();
        let row = zr_length(n)? as usize;
        cells.insert((row - 1, col_of[&head]), v.to_string());
    }
    Ok(TableGrid {
        rows: (1..=depth).map(|r| r.to_string()).collect(),
        cols: (0..heads.len()).map(|c| c.to_string()).collect(),
        cells,
    })
}

/// Renders the first odd-number array: column k holds `psi(k, n)` in
/// decimal for rows n = 0..=max_row.
pub fn render_ona1(max_row: u64, max_k: u64) -> Result<TableGrid> {
    render_ona(max_row, max_k, |v| Ok(v.to_string()))
}

/// Renders the second odd-number array: the same cells as the first, each
/// written as binary prefix, colon, binary suffix, split at the rightmost
/// adjacent pair of ones ("0:..." in column 0, where no pair exists).
pub fn render_ona2(max_row: u64, max_k: u64) -> Result<TableGrid> {
    render_ona(max_row, max_k, |v| {
        let split = decompose_odd(v)?;
        Ok(format!("{:b}:{:b}", split.pp, split.op.value()))
    })
}

fn render_ona(
    max_row: u64,
    max_k: u64,
    cell: impl Fn(u64) -> Result<String>,
) -> Result<TableGrid> {
    let mut cells = BTreeMap::new();
    for n in 0..=max_row {
        for k in 0..=max_k {
            cells.insert((n as usize, k as usize), cell(psi(k, n)?)?);
        }
    }
    Ok(TableGrid {
        rows: (0..=max_row).map(|n| n.to_string()).collect(),
        cols: (0..=max_k).map(|k| k.to_string()).collect(),
        cells,
    })
}
