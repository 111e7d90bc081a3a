use alloc::vec;
use alloc::vec::Vec;

use super::{for_each_move, GameRules, Position};
use crate::error::{Error, Result};

/// Largest grid (in cells) that [`sprague_grundy_grid`] will allocate.
pub const MAX_GRID_CELLS: usize = 1 << 28;

/// Square table of Sprague-Grundy values for piles `0..size`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SgGrid {
    size: usize,
    values: Vec<u32>,
}

impl SgGrid {
    /// An all-zero grid, for callers that fill cells themselves.
    pub fn zeroed(size: usize) -> Result<Self> {
        let cells = size
            .checked_mul(size)
            .filter(|&c| c <= MAX_GRID_CELLS)
            .ok_or(Error::Resource("Sprague-Grundy grid too large"))?;
        Ok(SgGrid {
            size,
            values: vec![0; cells],
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, m: usize, n: usize) -> u32 {
        self.values[m * self.size + n]
    }

    /// Writes `v` at `(m, n)` and `(n, m)`.
    pub fn set(&mut self, m: usize, n: usize, v: u32) {
        self.values[m * self.size + n] = v;
        self.values[n * self.size + m] = v;
    }

    pub fn row(&self, m: usize) -> &[u32] {
        &self.values[m * self.size..(m + 1) * self.size]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Cells `(m, n)` with `m <= n` and `m + n = s` inside the grid.
    pub fn level(size: usize, s: usize) -> impl Iterator<Item = Position> {
        let lo = s.saturating_sub(size.saturating_sub(1));
        (lo..=s / 2).map(move |m| Position::new(m as u64, (s - m) as u64))
    }

    /// The P-positions `(a, b)`, `0 < a <= b`, visible in the grid.
    pub fn zeros(&self) -> Vec<Position> {
        let mut out = Vec::new();
        for m in 1..self.size {
            for n in m..self.size {
                if self.get(m, n) == 0 {
                    out.push(Position::new(m as u64, n as u64));
                }
            }
        }
        out
    }
}

/// Reusable mex buffer: a value is "seen" when its stamp equals the epoch.
#[derive(Debug, Clone, Default)]
pub struct MexScratch {
    stamp: Vec<u32>,
    epoch: u32,
}

impl MexScratch {
    fn next_epoch(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    fn mark(&mut self, v: u32) {
        let i = v as usize;
        if i >= self.stamp.len() {
            self.stamp.resize(i + 1, 0);
        }
        self.stamp[i] = self.epoch;
    }

    fn mex(&self) -> u32 {
        let mut v = 0;
        while (v as usize) < self.stamp.len() && self.stamp[v as usize] == self.epoch {
            v += 1;
        }
        v
    }
}

/// Sprague-Grundy value of `pos`, given the values of every position with a
/// smaller pile sum through `lookup`.
pub fn sg_cell(
    rules: &GameRules,
    pos: Position,
    lookup: impl Fn(Position) -> u32,
    scratch: &mut MexScratch,
) -> u32 {
    scratch.next_epoch();
    for_each_move(rules, pos, |p| scratch.mark(lookup(p)));
    scratch.mex()
}

/// Sprague-Grundy values for all positions with both piles below `size`,
/// computed in order of increasing pile sum.
pub fn sprague_grundy_grid(rules: &GameRules, size: usize) -> Result<SgGrid> {
    let mut grid = SgGrid::zeroed(size)?;
    let mut scratch = MexScratch::default();
    for s in 0..(2 * size).saturating_sub(1) {
        for pos in SgGrid::level(size, s) {
            let v = sg_cell(
                rules,
                pos,
                |p| grid.get(p.a as usize, p.b as usize),
                &mut scratch,
            );
            grid.set(pos.a as usize, pos.b as usize, v);
        }
    }
    Ok(grid)
}

/// A line of cells through the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineAxis {
    /// `(index, n)` for `n = 0, 1, ..`
    Row,
    /// `(m, index)` for `m = 0, 1, ..`
    Column,
    /// `(n, n + index)` for `n = 0, 1, ..`
    Diagonal,
    /// The diagonal `(n, n + index)` followed by the anti-diagonal of pile
    /// sum `index`.
    ReflectedDiagonal,
}

/// Value counts along one line of an [`SgGrid`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineReport {
    pub values: Vec<u32>,
    /// `counts[v]` is how often `v <= prefix_cap` occurs.
    pub counts: Vec<u32>,
    /// Values `<= prefix_cap` that never occur.
    pub missing: Vec<u32>,
    /// First repeated value and the offset of its second occurrence.
    pub first_duplicate: Option<(u32, usize)>,
}

impl LineReport {
    /// No value repeats and every value up to the cap is present.
    pub fn is_permutation_prefix(&self) -> bool {
        self.first_duplicate.is_none() && self.missing.is_empty()
    }
}

pub fn sg_permutation_check(
    grid: &SgGrid,
    axis: LineAxis,
    index: usize,
    prefix_cap: u32,
) -> Result<LineReport> {
    let size = grid.size();
    if index >= size {
        return Err(Error::InvalidParameter("line index outside the grid"));
    }
    let values: Vec<u32> = match axis {
        LineAxis::Row => grid.row(index).to_vec(),
        LineAxis::Column => (0..size).map(|m| grid.get(m, index)).collect(),
        LineAxis::Diagonal => (0..size - index).map(|n| grid.get(n, n + index)).collect(),
        LineAxis::ReflectedDiagonal => (0..size - index)
            .map(|n| grid.get(n, n + index))
            .chain((0..=index).map(|m| grid.get(m, index - m)))
            .collect(),
    };
    let mut counts = vec![0u32; prefix_cap as usize + 1];
    let mut seen = Vec::new();
    let mut first_duplicate = None;
    for (i, &v) in values.iter().enumerate() {
        if let Some(c) = counts.get_mut(v as usize) {
            *c += 1;
        }
        let vi = v as usize;
        if vi >= seen.len() {
            seen.resize(vi + 1, false);
        }
        if seen[vi] && first_duplicate.is_none() {
            first_duplicate = Some((v, i));
        }
        seen[vi] = true;
    }
    let missing = (0..=prefix_cap)
        .filter(|&v| counts[v as usize] == 0)
        .collect();
    Ok(LineReport {
        values,
        counts,
        missing,
        first_duplicate,
    })
}
