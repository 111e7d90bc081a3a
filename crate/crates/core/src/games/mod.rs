//! Wythoff-type two-pile games: move generation, Sprague-Grundy grids,
//! P-position sweeps and step codes.

mod characterization;
mod code;
mod grid;
mod sweep;

use alloc::vec::Vec;
use core::fmt;

pub use characterization::{
    np_characterization_check, shape_keeping_violation, CharacterizationReport, Mismatch,
};
pub use code::{check_substitution_fixpoint, step_code, FixpointReport, StepCode};
pub use grid::{
    sg_cell, sg_permutation_check, sprague_grundy_grid, LineAxis, LineReport, MexScratch, SgGrid,
    MAX_GRID_CELLS,
};
pub use sweep::{p_positions, p_positions_capped, PositionSweep, DEFAULT_SUM_CAP};

use crate::error::{Error, Result};

/// An unordered pair of pile sizes, stored with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Position {
    pub a: u64,
    pub b: u64,
}

impl Position {
    pub fn new(x: u64, y: u64) -> Self {
        if x <= y {
            Position { a: x, b: y }
        } else {
            Position { a: y, b: x }
        }
    }

    /// `b - a`
    pub fn delta(&self) -> u64 {
        self.b - self.a
    }

    /// `a + b`
    pub fn sigma(&self) -> u64 {
        self.a + self.b
    }

    pub fn is_terminal(&self) -> bool {
        self.b == 0
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Wythoff,
    AWythoff,
    Splythoff,
    ASplythoff,
}

/// Which moves are legal: singles always, doubles `(x, y)` with
/// `|x - y| < a`, and for the Splythoff families a split of the surviving
/// pile after a double that clears the other pile, provided the double took
/// at least as many counters from the surviving pile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameRules {
    pub family: Family,
    pub a: u32,
}

impl GameRules {
    pub fn new(family: Family, a: u32) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParameter("a must be at least 1"));
        }
        if matches!(family, Family::Wythoff | Family::Splythoff) && a != 1 {
            return Err(Error::InvalidParameter(
                "plain Wythoff and Splythoff have a = 1",
            ));
        }
        Ok(GameRules { family, a })
    }

    pub fn wythoff() -> Self {
        GameRules {
            family: Family::Wythoff,
            a: 1,
        }
    }

    pub fn splythoff() -> Self {
        GameRules {
            family: Family::Splythoff,
            a: 1,
        }
    }

    pub fn a_wythoff(a: u32) -> Result<Self> {
        Self::new(Family::AWythoff, a)
    }

    pub fn a_splythoff(a: u32) -> Result<Self> {
        Self::new(Family::ASplythoff, a)
    }

    pub fn allows_split(&self) -> bool {
        matches!(self.family, Family::Splythoff | Family::ASplythoff)
    }

    fn gap(&self) -> u64 {
        self.a as u64
    }
}

/// Range of `y >= 1` paired with removal `x` in a double, `|x - y| < gap`,
/// capped by the pile `limit`.
fn partner_range(x: u64, gap: u64, limit: u64) -> core::ops::RangeInclusive<u64> {
    let lo = x.saturating_sub(gap - 1).max(1);
    let hi = (x + gap - 1).min(limit);
    lo..=hi
}

/// Remainders `m >= 2` that may be split: left by a double that clears one
/// pile while taking at least as many counters from the surviving pile.
///
/// For `a = 1` this is the Splythoff split of the difference `b - a`. For
/// larger `a` the restriction is what reproduces the a-Splythoff P-position
/// tables; a double that takes fewer from the surviving pile leaves it
/// unsplittable.
pub(crate) fn split_remainders(rules: &GameRules, pos: Position, mut f: impl FnMut(u64)) {
    let Position { a, b } = pos;
    if a == 0 {
        return;
    }
    // only the smaller pile can be cleared by taking no more than from the other
    for y in a..=(a + rules.gap() - 1).min(b) {
        if b - y >= 2 {
            f(b - y);
        }
    }
}

/// Calls `f` on every successor of `pos`; a successor may be reported more
/// than once.
pub fn for_each_move(rules: &GameRules, pos: Position, mut f: impl FnMut(Position)) {
    let Position { a, b } = pos;
    for t in 0..a {
        f(Position::new(t, b));
    }
    for t in 0..b {
        f(Position::new(a, t));
    }
    let gap = rules.gap();
    for x in 1..=a {
        for y in partner_range(x, gap, b) {
            f(Position::new(a - x, b - y));
        }
    }
    if rules.allows_split() {
        split_remainders(rules, pos, |m| {
            for c in 1..=m / 2 {
                f(Position::new(c, m - c));
            }
        });
    }
}

/// All successors of `pos`, sorted and deduplicated.
pub fn legal_moves(rules: &GameRules, pos: Position) -> Vec<Position> {
    let mut out = Vec::new();
    for_each_move(rules, pos, |p| out.push(p));
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splythoff_examples() {
        let s = GameRules::splythoff();
        assert!(legal_moves(&s, Position::new(4, 7)).contains(&Position::new(1, 2)));
        let from35 = legal_moves(&s, Position::new(3, 5));
        assert!(!from35.contains(&Position::new(0, 0)));
        assert!(from35.contains(&Position::new(1, 1)));
        assert!(legal_moves(&s, Position::new(0, 0)).is_empty());
        assert!(legal_moves(&GameRules::wythoff(), Position::new(0, 0)).is_empty());
    }

    #[test]
    fn wythoff_has_no_splits() {
        let w = GameRules::wythoff();
        let moves = legal_moves(&w, Position::new(4, 7));
        assert!(!moves.contains(&Position::new(1, 2)));
        // 4 + 7 singles and 4 diagonal moves, with (1,4) reached twice
        assert_eq!(moves.len(), 4 + 7 + 4 - 1);
    }

    #[test]
    fn a_wythoff_doubles() {
        let r = GameRules::a_wythoff(2).unwrap();
        let moves = legal_moves(&r, Position::new(1, 3));
        // doubles: (1,1) -> (0,2), (1,2) -> (0,1)
        assert!(moves.contains(&Position::new(0, 2)));
        assert!(moves.contains(&Position::new(0, 1)));
        assert!(!moves.contains(&Position::new(0, 0)));
    }

    #[test]
    fn a_splythoff_splits_after_clearing_the_smaller_pile() {
        let from = Position::new(2, 9);
        let split = legal_moves(&GameRules::a_splythoff(2).unwrap(), from);
        // clear 2 and take 3 from 9: split 6
        assert!(split.contains(&Position::new(3, 3)));
        // clear 2 and take 1 from 9 takes less from the survivor: 8 stays whole
        assert!(!split.contains(&Position::new(3, 5)));
        assert!(split.contains(&Position::new(0, 8)));
        let plain = legal_moves(&GameRules::a_wythoff(2).unwrap(), from);
        assert!(!plain.contains(&Position::new(3, 3)));
        // the 3-Splythoff P-position (3,14) must not reach (2,10)
        let r3 = GameRules::a_splythoff(3).unwrap();
        assert!(!legal_moves(&r3, Position::new(3, 14)).contains(&Position::new(2, 10)));
    }

    #[test]
    fn every_move_lowers_the_sum() {
        for rules in [
            GameRules::wythoff(),
            GameRules::splythoff(),
            GameRules::a_splythoff(3).unwrap(),
        ] {
            for a in 0..12 {
                for b in a..12 {
                    let p = Position::new(a, b);
                    for m in legal_moves(&rules, p) {
                        assert!(m.sigma() < p.sigma());
                    }
                }
            }
        }
    }

    #[test]
    fn rules_validation() {
        assert!(GameRules::new(Family::Wythoff, 2).is_err());
        assert!(GameRules::new(Family::ASplythoff, 0).is_err());
        assert!(GameRules::new(Family::ASplythoff, 1).is_ok());
    }
}
