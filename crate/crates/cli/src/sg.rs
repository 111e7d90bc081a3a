//! Parallel Sprague-Grundy sweep and grid file formats.

use std::io::{Read, Write};

use anyhow::{bail, ensure, Result};
use rayon::prelude::*;
use splythoff_core::games::{sg_cell, GameRules, MexScratch, SgGrid};

/// Same grid as the sequential sweep; cells of one pile-sum level are
/// independent and computed in parallel.
pub fn sprague_grundy_grid_par(rules: &GameRules, size: usize) -> Result<SgGrid> {
    let mut grid = SgGrid::zeroed(size)?;
    for s in 0..(2 * size).saturating_sub(1) {
        let cells: Vec<_> = SgGrid::level(size, s).collect();
        let g = &grid;
        let values: Vec<u32> = cells
            .par_iter()
            .map_init(MexScratch::default, |scratch, &pos| {
                sg_cell(rules, pos, |p| g.get(p.a as usize, p.b as usize), scratch)
            })
            .collect();
        for (pos, v) in cells.into_iter().zip(values) {
            grid.set(pos.a as usize, pos.b as usize, v);
        }
    }
    Ok(grid)
}

/// One line per first pile `m`; with `paper_orientation` the lines run from
/// the largest pile down so that the origin sits bottom-left.
pub fn to_csv(grid: &SgGrid, paper_orientation: bool) -> String {
    let mut order: Vec<usize> = (0..grid.size()).collect();
    if paper_orientation {
        order.reverse();
    }
    let mut out = String::new();
    for m in order {
        let line: Vec<String> = grid.row(m).iter().map(u32::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

const MAGIC: &[u8; 4] = b"SGG1";

/// `SGG1`, the size as little-endian `u32`, then every cell row-major.
pub fn write_binary(grid: &SgGrid, w: &mut (impl Write + ?Sized)) -> Result<()> {
    let n = u32::try_from(grid.size())?;
    w.write_all(MAGIC)?;
    w.write_all(&n.to_le_bytes())?;
    let mut buf = Vec::with_capacity(grid.values().len() * 4);
    for v in grid.values() {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    w.write_all(&buf)?;
    Ok(())
}

pub fn read_binary(r: &mut impl Read) -> Result<SgGrid> {
    let mut head = [0u8; 8];
    r.read_exact(&mut head)?;
    if &head[..4] != MAGIC {
        bail!("not an SGG1 grid dump");
    }
    let n = u32::from_le_bytes(head[4..].try_into()?) as usize;
    let mut grid = SgGrid::zeroed(n)?;
    let mut body = Vec::new();
    r.read_to_end(&mut body)?;
    ensure!(body.len() == n * n * 4, "truncated grid dump");
    for (i, c) in body.chunks_exact(4).enumerate() {
        let v = u32::from_le_bytes(c.try_into()?);
        let (m, k) = (i / n, i % n);
        if m <= k {
            grid.set(m, k, v);
        } else {
            ensure!(
                grid.get(m, k) == v,
                "grid dump is not symmetric at ({m},{k})"
            );
        }
    }
    Ok(grid)
}
