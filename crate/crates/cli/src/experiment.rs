//! Step-code experiments on a-Splythoff.

use anyhow::{ensure, Result};
use serde::Serialize;
use splythoff_core::games::{check_substitution_fixpoint, step_code, GameRules};
use splythoff_core::substitution::{render_word, Substitution};

/// Candidates always tried: the Tribonacci substitution and `0:01,1:2,2:01`.
pub const DEFAULT_CANDIDATES: [&str; 2] = ["0:01,1:02,2:0", "0:01,1:2,2:01"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateResult {
    pub substitution: String,
    pub consistent_prefix: usize,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentRecord {
    pub family: &'static str,
    pub a: u32,
    /// Number of P-positions; the code has `n - 1` letters.
    pub n: usize,
    pub step_alphabet: Vec<(u64, u64)>,
    /// Each letter with the code index of its first occurrence.
    pub alphabet_growth: Vec<(char, usize)>,
    pub code_prefix: String,
    pub candidates: Vec<CandidateResult>,
}

/// Step code of the first `n` a-Splythoff P-positions, tested against the
/// default candidates and any extra substitutions.
pub fn run(a: u32, n: usize, extra: &[Substitution]) -> Result<ExperimentRecord> {
    ensure!(n >= 2, "need at least two P-positions");
    let rules = GameRules::a_splythoff(a)?;
    let code = step_code(&rules, n - 1)?;
    let mut subs: Vec<Substitution> = DEFAULT_CANDIDATES
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    for s in extra {
        if !subs.contains(s) {
            subs.push(s.clone());
        }
    }
    let candidates = subs
        .iter()
        .map(|s| {
            let r = check_substitution_fixpoint(&code.code, s);
            CandidateResult {
                substitution: s.to_string(),
                consistent_prefix: r.consistent_prefix,
                consistent: r.holds(),
            }
        })
        .collect();
    Ok(ExperimentRecord {
        family: "a-splythoff",
        a,
        n,
        step_alphabet: code.step_alphabet.clone(),
        alphabet_growth: code
            .alphabet_growth()
            .into_iter()
            .map(|(l, i)| (l.to_char(), i))
            .collect(),
        code_prefix: render_word(&code.code),
        candidates,
    })
}
