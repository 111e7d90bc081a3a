//! Mex-rule generators and exact Beatty machinery.
//!
//! The generators draw their mex values from `{1, 2, 3, ..}`: the tables never
//! list the terminal position `(0, 0)`.

mod beatty;
mod mex;
mod quadratic;

use alloc::vec::Vec;

pub use beatty::{
    beatty_floor, skolem_fraenkel_check, skolem_fraenkel_report, sturmian_locations,
    sturmian_mechanical_positions, sturmian_word, wythoff_ab_params, BeattyPair,
    SkolemFraenkelReport,
};
pub use mex::{mex, MexDomain, MexSet};
pub use quadratic::QuadraticIrrational;

use crate::error::{Error, Result};
use crate::tables::transpose;

/// Named rows of equal length produced by a mex rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MexTable {
    pub names: Vec<&'static str>,
    pub rows: Vec<Vec<u64>>,
}

impl MexTable {
    fn from_columns(names: Vec<&'static str>, columns: &[Vec<u64>]) -> Self {
        let rows = transpose(columns, names.len());
        MexTable { names, rows }
    }

    pub fn row(&self, name: &str) -> Option<&[u64]> {
        self.names
            .iter()
            .position(|&n| n == name)
            .map(|i| &self.rows[i][..])
    }

    pub fn columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Keeps only the named rows, in the given order.
    pub fn select(&self, names: &[&'static str]) -> Option<MexTable> {
        let rows = names
            .iter()
            .map(|n| self.row(n).map(<[u64]>::to_vec))
            .collect::<Option<Vec<_>>>()?;
        Some(MexTable {
            names: names.to_vec(),
            rows,
        })
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("need at least one column"));
    }
    Ok(())
}

/// Wythoff's recursive construction: `a_i = mex(A ∪ B)`, `b_i = a_i + i`.
pub fn wythoff_columns(n: usize) -> Result<MexTable> {
    check_n(n)?;
    let mut seen = MexSet::new(MexDomain::Positive);
    let mut cols = Vec::with_capacity(n);
    for i in 1..=n as u64 {
        let a = seen.mex();
        let b = a + i;
        seen.insert(a);
        seen.insert(b);
        cols.push(alloc::vec![a, b]);
    }
    Ok(MexTable::from_columns(alloc::vec!["A", "B"], &cols))
}

/// The Splythoff mex rule:
///
/// ```text
/// delta_{i+1} = mex(D_i ∪ S_i)     a_{i+1} = mex(A_i ∪ B_i)
/// b_{i+1} = a_{i+1} + delta_{i+1}  sigma_{i+1} = a_{i+1} + b_{i+1}
/// ```
///
/// Rows come out as `D, A, B, S`.
pub fn splythoff_columns(n: usize) -> Result<MexTable> {
    check_n(n)?;
    let mut ab = MexSet::new(MexDomain::Positive);
    let mut ds = MexSet::new(MexDomain::Positive);
    let mut cols = Vec::with_capacity(n);
    for _ in 0..n {
        let delta = ds.mex();
        let a = ab.mex();
        let b = a + delta;
        let sigma = a + b;
        ab.insert(a);
        ab.insert(b);
        ds.insert(delta);
        ds.insert(sigma);
        cols.push(alloc::vec![delta, a, b, sigma]);
    }
    Ok(MexTable::from_columns(
        alloc::vec!["D", "A", "B", "S"],
        &cols,
    ))
}

/// Simultaneous mex rule for the Quadribonacci positions, difference and
/// double-difference tables.
///
/// Rows: `X0..X3` (positions), `D0..D2` (differences), `dD0`, `dD1` and the
/// sum row `S = D0 + D1 + D2`.
pub fn quadribonacci_columns(n: usize) -> Result<MexTable> {
    check_n(n)?;
    let mut diff = MexSet::new(MexDomain::Positive);
    let mut ddiff = MexSet::new(MexDomain::Positive);
    let mut pos = MexSet::new(MexDomain::Positive);
    let mut cols = Vec::with_capacity(n);
    for i in 1..=n as u64 {
        let a0 = diff.mex();
        let b0 = ddiff.mex();
        let x0 = pos.mex();
        let a1 = a0 + b0;
        let x1 = x0 + a0;
        let x2 = x1 + a1;
        let x3 = x0 + x1 + x2 + i;
        let a2 = x3 - x2;
        let d1 = a2 - a1;
        let s = a0 + a1 + a2;
        for v in [a0, a1, a2] {
            diff.insert(v);
        }
        for v in [b0, d1, s] {
            ddiff.insert(v);
        }
        for v in [x0, x1, x2, x3] {
            pos.insert(v);
        }
        cols.push(alloc::vec![x0, x1, x2, x3, a0, a1, a2, b0, d1, s]);
    }
    Ok(MexTable::from_columns(
        alloc::vec!["X0", "X1", "X2", "X3", "D0", "D1", "D2", "dD0", "dD1", "S"],
        &cols,
    ))
}
