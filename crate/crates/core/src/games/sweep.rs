use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use super::{split_remainders, GameRules, Position};
use crate::error::{Error, Result};

/// Pile-sum bound used by [`p_positions`].
pub const DEFAULT_SUM_CAP: u64 = 1 << 20;

const NONE: u64 = u64::MAX;

/// Decides P/N status level by level in the pile sum, using the facts that
/// each pile size and each difference `b - a` belongs to at most one
/// P-position (both are reachable from each other otherwise).
///
/// Every position of sum `s` is decided in `O(a)` lookups, so sweeping to sum
/// `S` costs `O(S^2 a)` time and `O(S)` memory.
#[derive(Debug, Clone)]
pub struct PositionSweep {
    rules: GameRules,
    /// Other pile of the P-position containing `v`.
    partner: Vec<u64>,
    /// Smaller pile of the P-position with difference `e`.
    by_diff: Vec<u64>,
    /// Pile sums of P-positions with both piles non-empty.
    by_sum: FixedBitSet,
    found: Vec<Position>,
    /// Every pile size below `cursor` belongs to a known P-position.
    cursor: u64,
    small_flag: FixedBitSet,
    settled: usize,
    next_sum: u64,
}

impl PositionSweep {
    pub fn new(rules: GameRules) -> Self {
        let mut sweep = PositionSweep {
            rules,
            partner: Vec::new(),
            by_diff: Vec::new(),
            by_sum: FixedBitSet::new(),
            found: Vec::new(),
            cursor: 1,
            small_flag: FixedBitSet::new(),
            settled: 0,
            next_sum: 0,
        };
        sweep.run_to_sum(0);
        sweep
    }

    pub fn rules(&self) -> &GameRules {
        &self.rules
    }

    /// Largest pile sum decided so far.
    pub fn swept_sum(&self) -> u64 {
        self.next_sum - 1
    }

    fn grow(&mut self, s: u64) {
        let need = s as usize + 1;
        if self.partner.len() < need {
            let len = need.max(2 * self.partner.len());
            self.partner.resize(len, NONE);
            self.by_diff.resize(len, NONE);
            self.by_sum.grow(len);
            self.small_flag.grow(len);
        }
    }

    fn partner_of(&self, v: u64) -> u64 {
        self.partner.get(v as usize).copied().unwrap_or(NONE)
    }

    fn decide(&self, p: u64, q: u64) -> bool {
        if p == 0 {
            return q == 0;
        }
        if self.partner_of(p) < q || self.partner_of(q) < p {
            return false;
        }
        let gap = self.rules.a as i64;
        let d = (q - p) as i64;
        for e in (d - gap + 1)..=(d + gap - 1) {
            let s = self
                .by_diff
                .get(e.unsigned_abs() as usize)
                .copied()
                .unwrap_or(NONE);
            if s == NONE {
                continue;
            }
            let (t1, t2) = if e >= 0 {
                (s, s + e as u64)
            } else {
                (s + e.unsigned_abs(), s)
            };
            if t1 < p && t2 < q {
                return false;
            }
        }
        if self.rules.allows_split() {
            let mut hit = false;
            split_remainders(&self.rules, Position { a: p, b: q }, |m| {
                hit |= self.by_sum.contains(m as usize);
            });
            if hit {
                return false;
            }
        }
        true
    }

    fn record(&mut self, p: u64, q: u64) {
        self.partner[p as usize] = q;
        self.partner[q as usize] = p;
        self.by_diff[(q - p) as usize] = p;
        if p > 0 {
            self.by_sum.insert((p + q) as usize);
            self.small_flag.insert(p as usize);
            self.found.push(Position { a: p, b: q });
        }
    }

    fn advance_cursor(&mut self) {
        while (self.cursor as usize) < self.partner.len()
            && self.partner[self.cursor as usize] != NONE
        {
            if self.small_flag.contains(self.cursor as usize) {
                self.settled += 1;
            }
            self.cursor += 1;
        }
    }

    /// Decides every position with pile sum up to `s`.
    pub fn run_to_sum(&mut self, s: u64) {
        self.grow(s);
        while self.next_sum <= s {
            let t = self.next_sum;
            for p in 0..=t / 2 {
                let q = t - p;
                if self.decide(p, q) {
                    self.record(p, q);
                }
            }
            self.next_sum += 1;
            self.advance_cursor();
        }
    }

    /// P/N status of a position with pile sum already swept.
    pub fn is_p_position(&self, pos: Position) -> Option<bool> {
        if pos.sigma() >= self.next_sum {
            return None;
        }
        Some(pos.a == 0 && pos.b == 0 || self.partner_of(pos.a) == pos.b)
    }

    /// Number of P-positions known to be final in order of smaller pile.
    pub fn settled(&self) -> usize {
        self.settled
    }

    /// P-positions `(a, b)` with `a >= 1` found so far, by increasing `a`;
    /// only the first [`settled`](Self::settled) are guaranteed complete.
    pub fn found(&self) -> Vec<Position> {
        let mut v = self.found.clone();
        v.sort_unstable();
        v
    }
}

/// The first `n` P-positions `(a, b)` with `a >= 1`, by increasing `a`.
pub fn p_positions(rules: &GameRules, n: usize) -> Result<Vec<Position>> {
    p_positions_capped(rules, n, DEFAULT_SUM_CAP)
}

/// As [`p_positions`], giving up once the pile sum would exceed `sum_cap`.
pub fn p_positions_capped(rules: &GameRules, n: usize, sum_cap: u64) -> Result<Vec<Position>> {
    let mut sweep = PositionSweep::new(*rules);
    let mut s = 16u64;
    while sweep.settled() < n {
        if sweep.swept_sum() >= sum_cap {
            return Err(Error::CapExceeded {
                cap: sum_cap as usize,
            });
        }
        s = s.min(sum_cap);
        sweep.run_to_sum(s);
        s = s.saturating_mul(2);
    }
    let mut out = sweep.found();
    out.truncate(n);
    Ok(out)
}

/// Brute-force P-positions from an explicit table, for cross-checks.
#[cfg(test)]
pub(crate) fn p_positions_by_grid(rules: &GameRules, size: usize) -> Vec<Position> {
    super::sprague_grundy_grid(rules, size).unwrap().zeros()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::splythoff_columns;
    use crate::sequences::wythoff_columns;

    fn pairs(v: &[Position]) -> Vec<(u64, u64)> {
        v.iter().map(|p| (p.a, p.b)).collect()
    }

    #[test]
    fn wythoff_pairs() {
        let p = p_positions(&GameRules::wythoff(), 200).unwrap();
        let t = wythoff_columns(200).unwrap();
        let expect: Vec<(u64, u64)> = t.rows[0]
            .iter()
            .copied()
            .zip(t.rows[1].iter().copied())
            .collect();
        assert_eq!(pairs(&p), expect);
    }

    #[test]
    fn splythoff_pairs() {
        let p = p_positions(&GameRules::splythoff(), 300).unwrap();
        let t = splythoff_columns(300).unwrap();
        let expect: Vec<(u64, u64)> = t.rows[1]
            .iter()
            .copied()
            .zip(t.rows[2].iter().copied())
            .collect();
        assert_eq!(pairs(&p), expect);
        assert_eq!(
            pairs(&p[..12]),
            [
                (1, 2),
                (3, 5),
                (4, 8),
                (6, 11),
                (7, 13),
                (9, 16),
                (10, 19),
                (12, 22),
                (14, 25),
                (15, 28),
                (17, 31),
                (18, 33)
            ]
        );
    }

    #[test]
    fn two_splythoff_prefix() {
        let p = p_positions(&GameRules::a_splythoff(2).unwrap(), 5).unwrap();
        assert_eq!(pairs(&p), [(1, 3), (2, 8), (4, 12), (5, 17), (6, 20)]);
    }

    #[test]
    fn agrees_with_grid() {
        let size = 90;
        for rules in [
            GameRules::wythoff(),
            GameRules::splythoff(),
            GameRules::a_wythoff(2).unwrap(),
            GameRules::a_wythoff(4).unwrap(),
            GameRules::a_splythoff(2).unwrap(),
            GameRules::a_splythoff(3).unwrap(),
            GameRules::a_splythoff(5).unwrap(),
        ] {
            let grid = p_positions_by_grid(&rules, size);
            let mut sweep = PositionSweep::new(rules);
            sweep.run_to_sum(2 * size as u64);
            let swept: Vec<Position> = sweep
                .found()
                .into_iter()
                .filter(|p| (p.b as usize) < size)
                .collect();
            assert_eq!(swept, grid, "{rules:?}");
            for a in 0..size as u64 {
                for b in 0..size as u64 {
                    let pos = Position::new(a, b);
                    let in_grid = pos == Position::default() || grid.contains(&pos);
                    assert_eq!(sweep.is_p_position(pos), Some(in_grid));
                }
            }
        }
    }

    #[test]
    fn cap_is_reported() {
        let e = p_positions_capped(&GameRules::splythoff(), 1000, 100).unwrap_err();
        assert_eq!(e, Error::CapExceeded { cap: 100 });
    }
}
