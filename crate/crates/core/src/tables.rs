//! Positions, difference and double-difference tables of k-bonacci words.
//!
//! Row `X^j` of the positions table lists the 1-based positions of letter `j`
//! in the k-bonacci word. Consecutive columns differ by a step vector that
//! depends only on the letter heading the earlier column, which is how the
//! fast generators work. The `*_oracle` functions scan the word instead.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::substitution::{Letter, WordStream, MAX_ALPHABET};

/// Upper bound on the number of columns a table may be built with.
pub const MAX_COLUMNS: usize = 1 << 27;

/// Above this bound `check_partition` merges rows instead of using a bitmap.
pub const BITMAP_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Positions,
    Difference,
    DoubleDifference,
}

/// A family of strictly increasing rows sharing a header of k-bonacci letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub kind: TableKind,
    pub k: usize,
    pub header: Vec<Letter>,
    pub rows: Vec<Vec<u64>>,
}

impl SequenceTable {
    pub fn columns(&self) -> usize {
        self.header.len()
    }

    pub fn row(&self, j: usize) -> &[u64] {
        &self.rows[j]
    }

    /// Name of the header row, `w3` for the Tribonacci word and so on.
    pub fn header_name(&self) -> String {
        format!("w{}", self.k)
    }

    /// Row labels: `X0..`, `D0..`, or `dD0..` followed by the sum row `S`.
    pub fn row_names(&self) -> Vec<String> {
        match self.kind {
            TableKind::Positions => (0..self.rows.len()).map(|j| format!("X{j}")).collect(),
            TableKind::Difference => (0..self.rows.len()).map(|j| format!("D{j}")).collect(),
            TableKind::DoubleDifference => {
                let mut names: Vec<String> =
                    (0..self.rows.len() - 1).map(|j| format!("dD{j}")).collect();
                names.push(String::from("S"));
                names
            }
        }
    }

    /// Truncates every row and the header to the first `n` columns.
    pub fn truncated(&self, n: usize) -> SequenceTable {
        let n = n.min(self.columns());
        SequenceTable {
            kind: self.kind,
            k: self.k,
            header: self.header[..n].to_vec(),
            rows: self.rows.iter().map(|r| r[..n].to_vec()).collect(),
        }
    }
}

/// Per-row column increment for one heading letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepVector(pub Vec<u64>);

fn check_k(k: usize, min: usize) -> Result<()> {
    if k < min || k > MAX_ALPHABET {
        return Err(Error::InvalidParameter("k out of range for this table"));
    }
    Ok(())
}

fn check_columns(n: usize) -> Result<()> {
    if n == 0 || n > MAX_COLUMNS {
        return Err(Error::InvalidParameter("column count out of range"));
    }
    Ok(())
}

/// `[l^0(i), .., l^{k-1}(i)]` where `l^j(i)` is the length of `theta^{j+1}(i)`.
///
/// Every letter doubles under the substitution except `k-1`, and the one
/// letter `k-1` in `theta^h(i)` appears exactly when `h + i == k - 1`.
pub fn step_lengths(k: usize, i: Letter) -> Result<Vec<u64>> {
    check_k(k, 2)?;
    if i.index() >= k {
        return Err(Error::InvalidLetter {
            letter: i.0,
            alphabet_size: k,
        });
    }
    let i = i.index();
    let mut out = Vec::with_capacity(k);
    out.push(if i + 1 < k { 2 } else { 1 });
    for h in 1..k {
        let prev = out[h - 1];
        out.push(2 * prev - u64::from(h + i == k - 1));
    }
    Ok(out)
}

/// Increment of the positions table for a column headed by `i`.
pub fn positions_steps(k: usize, i: Letter) -> Result<StepVector> {
    step_lengths(k, i).map(StepVector)
}

/// Increment of the difference table: `l^{j+1}(i) - l^j(i)`.
pub fn difference_steps(k: usize, i: Letter) -> Result<StepVector> {
    let l = step_lengths(k, i)?;
    Ok(StepVector(l.windows(2).map(|w| w[1] - w[0]).collect()))
}

/// Increment of the double-difference table: second differences of the step
/// lengths, then `l^{k-1}(i) - l^0(i)` for the sum row.
pub fn double_difference_steps(k: usize, i: Letter) -> Result<StepVector> {
    check_k(k, 3)?;
    let l = step_lengths(k, i)?;
    let mut v: Vec<u64> = l.windows(3).map(|w| w[2] + w[0] - 2 * w[1]).collect();
    v.push(l[k - 1] - l[0]);
    Ok(StepVector(v))
}

fn build_by_steps(
    kind: TableKind,
    k: usize,
    n: usize,
    first_column: Vec<u64>,
    steps: impl Fn(Letter) -> Result<StepVector>,
) -> Result<SequenceTable> {
    let mut stream = WordStream::kbonacci(k)?;
    let header = stream.ensure(n)?[..n].to_vec();
    let step_table: Vec<StepVector> = (0..k as u8)
        .map(|i| steps(Letter(i)))
        .collect::<Result<_>>()?;
    let mut rows: Vec<Vec<u64>> = first_column
        .iter()
        .map(|&v| {
            let mut r = Vec::with_capacity(n);
            r.push(v);
            r
        })
        .collect();
    for &letter in &header[..n - 1] {
        let inc = &step_table[letter.index()].0;
        for (row, &d) in rows.iter_mut().zip(inc) {
            let last = *row.last().unwrap();
            row.push(last.checked_add(d).ok_or(Error::Overflow)?);
        }
    }
    Ok(SequenceTable {
        kind,
        k,
        header,
        rows,
    })
}

/// Positions table built from the step vectors; column 1 holds `1, 2, 4, ..`.
pub fn positions_table(k: usize, n: usize) -> Result<SequenceTable> {
    check_k(k, 2)?;
    check_columns(n)?;
    let first = (0..k).map(|j| 1u64 << j).collect();
    build_by_steps(TableKind::Positions, k, n, first, |i| positions_steps(k, i))
}

/// Positions table read directly off the word by scanning for each letter.
pub fn positions_table_oracle(k: usize, n: usize) -> Result<SequenceTable> {
    check_k(k, 2)?;
    check_columns(n)?;
    let mut stream = WordStream::kbonacci(k)?;
    let rows = (0..k as u8)
        .map(|j| stream.letter_positions(Letter(j), n))
        .collect::<Result<Vec<_>>>()?;
    let header = stream.ensure(n)?[..n].to_vec();
    Ok(SequenceTable {
        kind: TableKind::Positions,
        k,
        header,
        rows,
    })
}

/// Difference table `D^j = X^{j+1} - X^j`, built from its own step vectors.
pub fn difference_table(k: usize, n: usize) -> Result<SequenceTable> {
    check_k(k, 2)?;
    check_columns(n)?;
    let first = (0..k - 1).map(|j| 1u64 << j).collect();
    build_by_steps(TableKind::Difference, k, n, first, |i| {
        difference_steps(k, i)
    })
}

/// Double-difference table: rows `dD^j = D^{j+1} - D^j` and the sum row
/// `S = D^0 + .. + D^{k-2}`.
pub fn double_difference_table(k: usize, n: usize) -> Result<SequenceTable> {
    check_k(k, 3)?;
    check_columns(n)?;
    let mut first: Vec<u64> = (0..k - 2).map(|j| 1u64 << j).collect();
    first.push((1u64 << (k - 1)) - 1);
    build_by_steps(TableKind::DoubleDifference, k, n, first, |i| {
        double_difference_steps(k, i)
    })
}

/// Elementwise differences of consecutive rows of `t`.
pub fn row_differences(rows: &[Vec<u64>]) -> Vec<Vec<u64>> {
    rows.windows(2)
        .map(|w| w[1].iter().zip(&w[0]).map(|(&b, &a)| b - a).collect())
        .collect()
}

/// Elementwise sum of rows.
pub fn row_sum(rows: &[Vec<u64>]) -> Vec<u64> {
    let n = rows.first().map_or(0, Vec::len);
    (0..n).map(|c| rows.iter().map(|r| r[c]).sum()).collect()
}

/// Column of the first failure of `X^{k-1} = E + X^0 + .. + X^{k-2}`, where
/// `E = 1, 2, 3, ..`; `None` if the identity holds on every column.
pub fn bottom_row_sum_failure(t: &SequenceTable) -> Option<usize> {
    let (last, rest) = t.rows.split_last()?;
    (0..t.columns()).find(|&c| last[c] != c as u64 + 1 + rest.iter().map(|r| r[c]).sum::<u64>())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Missing,
    Duplicate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub value: u64,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionReport {
    pub is_partition: bool,
    pub first_violation: Option<Violation>,
}

/// Checks that every integer in `1..=upto` occurs in exactly one row, once.
///
/// Only values up to the smallest row maximum can be decided. A violation
/// found below that horizon is reported; if none is found and the horizon is
/// short of `upto`, the result is [`Error::InsufficientTerms`].
pub fn check_partition(rows: &[Vec<u64>], upto: u64) -> Result<PartitionReport> {
    check_partition_with(rows, upto, BITMAP_LIMIT)
}

pub(crate) fn check_partition_with(
    rows: &[Vec<u64>],
    upto: u64,
    bitmap_limit: u64,
) -> Result<PartitionReport> {
    for r in rows {
        if r.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter("rows must be strictly increasing"));
        }
    }
    let horizon = rows
        .iter()
        .map(|r| r.last().copied().unwrap_or(0))
        .min()
        .unwrap_or(0);
    let bound = upto.min(horizon);
    let violation = if bound <= bitmap_limit {
        first_violation_bitmap(rows, bound)
    } else {
        first_violation_merge(rows, bound)
    };
    match violation {
        Some(v) => Ok(PartitionReport {
            is_partition: false,
            first_violation: Some(v),
        }),
        None if bound < upto => Err(Error::InsufficientTerms {
            horizon,
            requested: upto,
        }),
        None => Ok(PartitionReport {
            is_partition: true,
            first_violation: None,
        }),
    }
}

fn first_violation_bitmap(rows: &[Vec<u64>], bound: u64) -> Option<Violation> {
    let size = bound as usize + 1;
    let mut seen = FixedBitSet::with_capacity(size);
    let mut dup: Option<u64> = None;
    for r in rows {
        for &v in r.iter().take_while(|&&v| v <= bound) {
            if v == 0 {
                continue;
            }
            if seen.put(v as usize) {
                dup = Some(dup.map_or(v, |d| d.min(v)));
            }
        }
    }
    seen.insert(0);
    let missing = seen.zeroes().next().map(|m| m as u64);
    let dup = dup.map(|value| Violation {
        value,
        kind: ViolationKind::Duplicate,
    });
    let missing = missing.map(|value| Violation {
        value,
        kind: ViolationKind::Missing,
    });
    match (dup, missing) {
        (Some(d), Some(m)) => Some(if m.value < d.value { m } else { d }),
        (d, m) => d.or(m),
    }
}

fn first_violation_merge(rows: &[Vec<u64>], bound: u64) -> Option<Violation> {
    let mut heap: BinaryHeap<Reverse<(u64, usize, usize)>> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !r.is_empty())
        .map(|(i, r)| Reverse((r[0], i, 0)))
        .collect();
    let mut expected = 1u64;
    while let Some(Reverse((v, row, idx))) = heap.pop() {
        if v > bound {
            break;
        }
        if let Some(&next) = rows[row].get(idx + 1) {
            heap.push(Reverse((next, row, idx + 1)));
        }
        if v == 0 {
            continue;
        }
        if v < expected {
            return Some(Violation {
                value: v,
                kind: ViolationKind::Duplicate,
            });
        }
        if v > expected {
            return Some(Violation {
                value: expected,
                kind: ViolationKind::Missing,
            });
        }
        expected += 1;
    }
    (expected <= bound).then_some(Violation {
        value: expected,
        kind: ViolationKind::Missing,
    })
}

/// Smallest value shared by two or more rows within `1..=upto`.
pub fn first_common_value(rows: &[Vec<u64>], upto: u64) -> Option<u64> {
    let size = upto as usize + 1;
    let mut seen = FixedBitSet::with_capacity(size);
    let mut best: Option<u64> = None;
    for r in rows {
        for &v in r.iter().take_while(|&&v| v <= upto) {
            if seen.put(v as usize) {
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
    }
    best
}

/// Outcome of checking `upper - s` and `upper + s` against `lower`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftCoverReport {
    /// Checked values lie in `1..=horizon`.
    pub horizon: u64,
    /// An element `u - s` or `u + s` missing from `lower`.
    pub not_subset: Option<u64>,
    /// An element of `lower` that is neither `u - s` nor `u + s`.
    pub not_covered: Option<u64>,
}

impl ShiftCoverReport {
    pub fn holds(&self) -> bool {
        self.not_subset.is_none() && self.not_covered.is_none()
    }
}

/// Checks that `upper - shift` and `upper + shift` are subsets of `lower` and
/// that together they cover `lower`, on the range both truncated rows decide.
pub fn check_shift_cover(upper: &[u64], lower: &[u64], shift: u64) -> ShiftCoverReport {
    let horizon = match (upper.last(), lower.last()) {
        (Some(&u), Some(&l)) => l.min(u.saturating_sub(shift)),
        _ => 0,
    };
    let in_lower = |v: u64| lower.binary_search(&v).is_ok();
    let in_upper = |v: u64| upper.binary_search(&v).is_ok();
    let not_subset = upper.iter().find_map(|&u| {
        if u > shift && u - shift <= horizon && !in_lower(u - shift) {
            return Some(u - shift);
        }
        if u + shift <= horizon && !in_lower(u + shift) {
            return Some(u + shift);
        }
        None
    });
    let not_covered = lower
        .iter()
        .take_while(|&&l| l <= horizon)
        .find(|&&l| !in_upper(l + shift) && !(l > shift && in_upper(l - shift)))
        .copied();
    ShiftCoverReport {
        horizon,
        not_subset,
        not_covered,
    }
}

/// Fills a table whose columns are given column-wise.
pub(crate) fn transpose(columns: &[Vec<u64>], rows: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::with_capacity(columns.len()); rows];
    for col in columns {
        for (r, &v) in out.iter_mut().zip(col) {
            r.push(v);
        }
    }
    out
}
