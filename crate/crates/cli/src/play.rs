//! Text play mode against an engine that moves to P-positions.

use std::fmt;
use std::io::{BufRead, Write};

use anyhow::Result;
use splythoff_core::games::{legal_moves, GameRules, Position, PositionSweep};

/// A move on a normalized position `(a, b)`, `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Take `take` counters from a pile holding `pile`.
    Single { pile: u64, take: u64 },
    /// Take `x` from the smaller pile and `y` from the larger.
    Double { x: u64, y: u64 },
    /// A double that clears a pile, then the surviving pile splits off `c`.
    Split { x: u64, y: u64, c: u64 },
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Single { pile, take } => write!(f, "single {pile} {take}"),
            Move::Double { x, y } => write!(f, "double {x} {y}"),
            Move::Split { x, y, c } => write!(f, "split {x} {y} {c}"),
        }
    }
}

impl std::str::FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let nums = words[1..]
            .iter()
            .map(|w| w.parse::<u64>().map_err(|_| format!("not a number: {w}")))
            .collect::<Result<Vec<_>, _>>()?;
        match (words.first().copied(), nums.as_slice()) {
            (Some("single"), &[pile, take]) => Ok(Move::Single { pile, take }),
            (Some("double"), &[x, y]) => Ok(Move::Double { x, y }),
            (Some("split"), &[x, y, c]) => Ok(Move::Split { x, y, c }),
            _ => Err(String::from(
                "expected \"single p t\", \"double x y\" or \"split x y c\"",
            )),
        }
    }
}

fn double_ok(rules: &GameRules, pos: Position, x: u64, y: u64) -> Result<(), String> {
    if x == 0 || y == 0 {
        return Err("a double takes at least one counter from each pile".into());
    }
    if x > pos.a || y > pos.b {
        return Err(format!("cannot take {x} and {y} from {pos}"));
    }
    if x.abs_diff(y) >= rules.a as u64 {
        return Err(format!(
            "the two removals must differ by less than {}",
            rules.a
        ));
    }
    Ok(())
}

/// The position after `mv`, or why the move is illegal.
pub fn apply(rules: &GameRules, pos: Position, mv: Move) -> Result<Position, String> {
    let next = match mv {
        Move::Single { pile, take } => {
            if pile != pos.a && pile != pos.b {
                return Err(format!("no pile of {pile} in {pos}"));
            }
            if take == 0 || take > pile {
                return Err(format!("cannot take {take} from a pile of {pile}"));
            }
            if pile == pos.a {
                Position::new(pos.a - take, pos.b)
            } else {
                Position::new(pos.a, pos.b - take)
            }
        }
        Move::Double { x, y } => {
            double_ok(rules, pos, x, y)?;
            Position::new(pos.a - x, pos.b - y)
        }
        Move::Split { x, y, c } => {
            if !rules.allows_split() {
                return Err("this game has no splits".into());
            }
            double_ok(rules, pos, x, y)?;
            if x != pos.a {
                return Err("a split needs the smaller pile cleared".into());
            }
            if y < x {
                return Err("a split needs at least as many taken from the surviving pile".into());
            }
            let m = pos.b - y;
            if c == 0 || c >= m {
                return Err(format!(
                    "cannot split {m} into {c} and {}",
                    m.saturating_sub(c)
                ));
            }
            Position::new(c, m - c)
        }
    };
    debug_assert!(legal_moves(rules, pos).contains(&next));
    Ok(next)
}

/// Every move from `pos` with its result; splits list the smaller part first.
pub fn moves(rules: &GameRules, pos: Position) -> Vec<(Move, Position)> {
    let mut out = Vec::new();
    let mut push = |mv: Move| {
        if let Ok(p) = apply(rules, pos, mv) {
            out.push((mv, p));
        }
    };
    for take in 1..=pos.a {
        push(Move::Single { pile: pos.a, take });
    }
    if pos.b != pos.a {
        for take in 1..=pos.b {
            push(Move::Single { pile: pos.b, take });
        }
    }
    let gap = rules.a as u64;
    for x in 1..=pos.a {
        for y in x.saturating_sub(gap - 1).max(1)..=(x + gap - 1).min(pos.b) {
            push(Move::Double { x, y });
            if rules.allows_split() && x == pos.a && y >= x {
                for c in 1..=(pos.b - y) / 2 {
                    push(Move::Split { x, y, c });
                }
            }
        }
    }
    out
}

/// Decides positions on demand.
pub struct Engine {
    sweep: PositionSweep,
}

impl Engine {
    pub fn new(rules: GameRules) -> Self {
        Engine {
            sweep: PositionSweep::new(rules),
        }
    }

    pub fn rules(&self) -> GameRules {
        *self.sweep.rules()
    }

    pub fn is_p_position(&mut self, pos: Position) -> bool {
        if pos.sigma() > self.sweep.swept_sum() {
            self.sweep.run_to_sum(pos.sigma());
        }
        self.sweep.is_p_position(pos).unwrap_or(false)
    }

    /// A move to a P-position, or `Err` with a fallback move when there is
    /// none; `None` at `(0, 0)`.
    pub fn choose(&mut self, pos: Position) -> Option<Result<(Move, Position), (Move, Position)>> {
        let rules = self.rules();
        let all = moves(&rules, pos);
        let first = *all.first()?;
        Some(
            all.into_iter()
                .find(|&(_, p)| self.is_p_position(p))
                .ok_or(first),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Player {
    Human,
    Engine,
}

/// Plays from `start` until `(0, 0)`, reading the human's moves from
/// `input`. Returns the winner, or `None` if the input ends first.
pub fn session(
    rules: GameRules,
    start: Position,
    first: Player,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<Option<Player>> {
    let mut engine = Engine::new(rules);
    let mut pos = start;
    let mut to_move = first;
    let mut last = None;
    writeln!(out, "position {pos}")?;
    loop {
        if pos.is_terminal() {
            let winner = last.unwrap_or(match first {
                Player::Human => Player::Engine,
                Player::Engine => Player::Human,
            });
            let who = match winner {
                Player::Human => "you win",
                Player::Engine => "engine wins",
            };
            writeln!(out, "(0,0) reached: {who}")?;
            return Ok(Some(winner));
        }
        match to_move {
            Player::Engine => {
                let (mv, next) = match engine.choose(pos).expect("non-terminal position has moves")
                {
                    Ok(m) => m,
                    Err(m) => {
                        writeln!(out, "no winning move")?;
                        m
                    }
                };
                writeln!(out, "engine plays {mv} -> {next}")?;
                pos = next;
                to_move = Player::Human;
                last = Some(Player::Engine);
            }
            Player::Human => {
                write!(out, "your move at {pos}: ")?;
                out.flush()?;
                let mut line = String::new();
                if input.read_line(&mut line)? == 0 {
                    writeln!(out)?;
                    return Ok(None);
                }
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                match line.parse::<Move>().and_then(|mv| apply(&rules, pos, mv)) {
                    Ok(next) => {
                        writeln!(out, "-> {next}")?;
                        pos = next;
                        to_move = Player::Engine;
                        last = Some(Player::Human);
                    }
                    Err(why) => writeln!(out, "illegal: {why}")?,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn move_list_matches_core() {
        for rules in [
            GameRules::wythoff(),
            GameRules::splythoff(),
            GameRules::a_wythoff(3).unwrap(),
            GameRules::a_splythoff(2).unwrap(),
            GameRules::a_splythoff(4).unwrap(),
        ] {
            for a in 0..14 {
                for b in a..14 {
                    let pos = Position::new(a, b);
                    let mut ours: Vec<Position> =
                        moves(&rules, pos).into_iter().map(|m| m.1).collect();
                    ours.sort_unstable();
                    ours.dedup();
                    assert_eq!(ours, legal_moves(&rules, pos), "{rules:?} at {pos}");
                }
            }
        }
    }

    #[test]
    fn engine_finds_the_split_from_4_7() {
        let mut e = Engine::new(GameRules::splythoff());
        let (mv, next) = e.choose(Position::new(4, 7)).unwrap().unwrap();
        assert!(e.is_p_position(next));
        assert_eq!(next, Position::new(1, 2));
        assert_eq!(mv, Move::Split { x: 4, y: 4, c: 1 });
    }

    #[test]
    fn engine_at_a_p_position_falls_back() {
        let mut e = Engine::new(GameRules::splythoff());
        assert!(e.choose(Position::new(3, 5)).unwrap().is_err());
        assert!(e.choose(Position::new(0, 0)).is_none());
    }

    #[test]
    fn illegal_moves_are_explained() {
        let r = GameRules::splythoff();
        let p = Position::new(3, 5);
        assert!(apply(&r, p, Move::Double { x: 3, y: 3 }).is_ok());
        assert!(apply(&r, p, Move::Double { x: 1, y: 2 }).is_err());
        assert!(apply(&r, p, Move::Single { pile: 4, take: 1 }).is_err());
        assert!(apply(&r, p, Move::Split { x: 3, y: 3, c: 2 }).is_err());
        assert!(apply(&GameRules::wythoff(), p, Move::Split { x: 3, y: 3, c: 1 }).is_err());
        assert!("single 3".parse::<Move>().is_err());
        assert_eq!(
            "split 4 4 1".parse::<Move>(),
            Ok(Move::Split { x: 4, y: 4, c: 1 })
        );
    }

    #[test]
    fn human_clearing_the_board_wins() {
        let mut input = &b"bogus\ndouble 2 2\n"[..];
        let mut out = Vec::new();
        let w = session(
            GameRules::wythoff(),
            Position::new(2, 2),
            Player::Human,
            &mut input,
            &mut out,
        )
        .unwrap();
        assert_eq!(w, Some(Player::Human));
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("illegal"));
        assert!(text.contains("you win"));
    }

    #[test]
    fn engine_wins_from_an_n_position() {
        let mut input = &b"single 1 1\nsingle 2 1\nsingle 1 1\n"[..];
        let mut out = Vec::new();
        let w = session(
            GameRules::splythoff(),
            Position::new(4, 7),
            Player::Engine,
            &mut input,
            &mut out,
        )
        .unwrap();
        assert_eq!(w, Some(Player::Engine), "{}", String::from_utf8_lossy(&out));
    }
}
