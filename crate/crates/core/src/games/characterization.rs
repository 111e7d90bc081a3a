use alloc::vec;

use super::{for_each_move, legal_moves, GameRules, Position, PositionSweep};
use crate::error::{Error, Result};
use crate::sequences::splythoff_columns;

/// A Splythoff move that keeps neither a pile size nor the difference/sum
/// pair, searched over all positions with `a + b <= max_sum`.
pub fn shape_keeping_violation(max_sum: u64) -> Option<(Position, Position)> {
    let rules = GameRules::splythoff();
    for s in 0..=max_sum {
        for m in 0..=s / 2 {
            let from = Position::new(m, s - m);
            for to in legal_moves(&rules, from) {
                let piles = [from.a, from.b].iter().any(|v| *v == to.a || *v == to.b);
                let (d, t) = (from.delta(), from.sigma());
                let shape = [d, t].iter().any(|v| *v == to.delta() || *v == to.sigma());
                if !piles && !shape {
                    return Some((from, to));
                }
            }
        }
    }
    None
}

/// A position where the move-based and the table-based index disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub position: Position,
    pub is_p_position: bool,
    /// Least `i` with a move to the `i`-th P-position.
    pub k_move: Option<usize>,
    /// Least `i` such that `{m, n}` meets `{a_i, b_i}` or `{δ, σ}` meets
    /// `{δ_i, σ_i}`; for a P-position its own column is skipped.
    pub k_int: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationReport {
    pub bound: u64,
    /// Number of mex-rule columns consulted.
    pub columns: usize,
    pub positions_checked: usize,
    pub p_positions: usize,
    pub mismatches: usize,
    pub first_mismatch: Option<Mismatch>,
}

impl CharacterizationReport {
    pub fn holds(&self) -> bool {
        self.mismatches == 0
    }
}

/// Checks, for every Splythoff position `0 < m < n <= bound`, that the
/// positions with a move to one of the first `k` non-zero P-positions are
/// exactly those whose piles meet `A_k ∪ B_k` or whose difference/sum meet
/// `Δ_k ∪ Σ_k`, for every `k`.
///
/// Both sides are summarized by a least index, `k_move` and `k_int`, and the
/// check is that they coincide. P/N status comes from the level sweep, not
/// from the tables, and P-positions must be exactly the table columns.
pub fn np_characterization_check(bound: u64) -> Result<CharacterizationReport> {
    if bound < 2 {
        return Err(Error::InvalidParameter("bound must be at least 2"));
    }
    // enough columns that every pile up to `bound` is an a_i or b_i
    let mut n = (bound as usize / 2).max(2);
    let table = loop {
        let t = splythoff_columns(n)?;
        if *t.rows[1].last().unwrap() > bound {
            break t;
        }
        n *= 2;
    };
    let (d_row, a_row, b_row, s_row) = (
        &table.rows[0],
        &table.rows[1],
        &table.rows[2],
        &table.rows[3],
    );
    let cols = table.columns();
    let top = (2 * bound) as usize + 1;
    let mut pile_index = vec![usize::MAX; top.max(*s_row.last().unwrap() as usize + 1)];
    let mut shape_index = pile_index.clone();
    // 1-based column index, first hit wins
    for i in (0..cols).rev() {
        for v in [a_row[i], b_row[i]] {
            if (v as usize) < pile_index.len() {
                pile_index[v as usize] = i + 1;
            }
        }
        for v in [d_row[i], s_row[i]] {
            if (v as usize) < shape_index.len() {
                shape_index[v as usize] = i + 1;
            }
        }
    }
    let column_of = |p: Position| -> Option<usize> {
        let i = *pile_index.get(p.a as usize)?;
        (i != usize::MAX && a_row[i - 1] == p.a && b_row[i - 1] == p.b).then_some(i)
    };

    let rules = GameRules::splythoff();
    let mut sweep = PositionSweep::new(rules);
    sweep.run_to_sum(2 * bound);

    let mut report = CharacterizationReport {
        bound,
        columns: cols,
        positions_checked: 0,
        p_positions: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for m in 1..=bound {
        for n in m + 1..=bound {
            let pos = Position::new(m, n);
            let is_p = sweep.is_p_position(pos).unwrap_or(false);
            let own = column_of(pos);
            let mut k_move: Option<usize> = None;
            for_each_move(&rules, pos, |t| {
                if let Some(i) = column_of(t) {
                    k_move = Some(k_move.map_or(i, |k| k.min(i)));
                }
            });
            let k_int = [
                pile_index[m as usize],
                pile_index[n as usize],
                shape_index[pos.delta() as usize],
                shape_index[pos.sigma() as usize],
            ]
            .into_iter()
            .filter(|&i| i != usize::MAX && Some(i) != own)
            .min();
            let consistent = is_p == own.is_some() && k_move == k_int;
            report.positions_checked += 1;
            report.p_positions += is_p as usize;
            if !consistent {
                report.mismatches += 1;
                report.first_mismatch.get_or_insert(Mismatch {
                    position: pos,
                    is_p_position: is_p,
                    k_move,
                    k_int,
                });
            }
        }
    }
    Ok(report)
}
