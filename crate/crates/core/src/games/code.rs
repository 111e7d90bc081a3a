use alloc::vec::Vec;

use super::{p_positions, GameRules, Position};
use crate::error::{Error, Result};
use crate::substitution::{Letter, Substitution, WordStream};

/// Consecutive differences of P-positions, lettered by first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepCode {
    /// `step_alphabet[l]` is the `(Δa, Δb)` step written as letter `l`.
    pub step_alphabet: Vec<(u64, u64)>,
    pub code: Vec<Letter>,
}

impl StepCode {
    /// Letters in order of first appearance, each with the index in `code`
    /// where it first occurs.
    pub fn alphabet_growth(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for (i, &l) in self.code.iter().enumerate() {
            if l.index() == out.len() {
                out.push((l, i));
            }
        }
        out
    }

    /// Rebuilds the P-positions from the first one.
    pub fn decode(&self, first: Position) -> Vec<Position> {
        let mut out = Vec::with_capacity(self.code.len() + 1);
        out.push(first);
        let mut cur = first;
        for l in &self.code {
            let (da, db) = self.step_alphabet[l.index()];
            cur = Position {
                a: cur.a + da,
                b: cur.b + db,
            };
            out.push(cur);
        }
        out
    }
}

/// Builds the step code of the given P-positions.
pub(crate) fn encode(positions: &[Position]) -> Result<StepCode> {
    let mut step_alphabet: Vec<(u64, u64)> = Vec::new();
    let mut code = Vec::with_capacity(positions.len().saturating_sub(1));
    for w in positions.windows(2) {
        let step = (w[1].a - w[0].a, w[1].b - w[0].b);
        let l = match step_alphabet.iter().position(|&s| s == step) {
            Some(l) => l,
            None => {
                step_alphabet.push(step);
                step_alphabet.len() - 1
            }
        };
        let l = u8::try_from(l).map_err(|_| Error::Resource("more than 256 distinct steps"))?;
        code.push(Letter(l));
    }
    Ok(StepCode {
        step_alphabet,
        code,
    })
}

/// Step code of the first `n + 1` P-positions, so `n` letters long.
pub fn step_code(rules: &GameRules, n: usize) -> Result<StepCode> {
    encode(&p_positions(rules, n + 1)?)
}

/// How far a word agrees with the fixed point of a substitution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixpointReport {
    /// Length of the longest common prefix with the fixed point.
    pub consistent_prefix: usize,
    pub word_len: usize,
}

impl FixpointReport {
    pub fn holds(&self) -> bool {
        self.consistent_prefix == self.word_len
    }
}

/// Compares `word` with the fixed point of `sub` seeded at its first letter.
/// A first letter outside the alphabet, or whose image does not start with
/// it, is inconsistent from the start.
pub fn check_substitution_fixpoint(word: &[Letter], sub: &Substitution) -> FixpointReport {
    let word_len = word.len();
    let report = |consistent_prefix| FixpointReport {
        consistent_prefix,
        word_len,
    };
    let Some(&seed) = word.first() else {
        return report(0);
    };
    let Ok(mut stream) = WordStream::new(sub.clone(), seed) else {
        return report(0);
    };
    // a fixed point that stops growing is compared as far as it goes
    let _ = stream.ensure(word_len);
    let fixed = stream.prefix();
    let common = word.iter().zip(fixed).take_while(|(a, b)| a == b).count();
    report(common)
}
