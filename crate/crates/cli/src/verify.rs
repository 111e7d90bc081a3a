//! Cross-checks between independent constructions, each producing a
//! [`VerificationReport`].

use std::collections::BTreeMap;
use std::time::Instant;

use anyhow::Result;
use serde::Serialize;
use serde_json::{json, Value};
use splythoff_core::games::{
    check_substitution_fixpoint, np_characterization_check, p_positions, sg_permutation_check,
    shape_keeping_violation, sprague_grundy_grid, step_code, GameRules, LineAxis, Position,
};
use splythoff_core::sequences::{
    quadribonacci_columns, skolem_fraenkel_report, splythoff_columns, wythoff_ab_params,
};
use splythoff_core::substitution::{
    kbonacci_substitution, render_word, Coding, Letter, Substitution, WordStream,
};
use splythoff_core::tables::{
    bottom_row_sum_failure, check_partition, difference_table, double_difference_table,
    positions_table,
};

use crate::format::to_tsv;
use crate::{golden, sg, tables};

/// Outcome of one named check. A failure always carries a counterexample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub passed: bool,
    pub counterexample: Option<String>,
    pub wall_time_ms: f64,
}

impl VerificationReport {
    /// `PASS name k=v .. (t ms)`, or `FAIL` with the counterexample.
    pub fn line(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut s = format!(
            "{} {} {} ({:.0} ms)",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            params.join(" "),
            self.wall_time_ms
        );
        if let Some(c) = &self.counterexample {
            s.push_str(": ");
            s.push_str(c);
        }
        s
    }
}

/// Runs `f`, which returns `Some(counterexample)` on failure. Errors count
/// as failures with the error text as the datum.
fn timed(
    check: &str,
    params: Value,
    f: impl FnOnce() -> Result<Option<String>>,
) -> VerificationReport {
    let start = Instant::now();
    let outcome = f();
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let counterexample = match outcome {
        Ok(c) => c,
        Err(e) => Some(format!("error: {e:#}")),
    };
    let params = match params {
        Value::Object(m) => m.into_iter().collect(),
        _ => BTreeMap::new(),
    };
    VerificationReport {
        check: check.to_string(),
        params,
        passed: counterexample.is_none(),
        counterexample,
        wall_time_ms,
    }
}

fn first_difference<T: PartialEq + std::fmt::Debug>(
    what: &str,
    x: &[T],
    y: &[T],
) -> Option<String> {
    if let Some(i) = x.iter().zip(y).position(|(a, b)| a != b) {
        return Some(format!(
            "{what}: column {} has {:?} vs {:?}",
            i + 1,
            x[i],
            y[i]
        ));
    }
    (x.len() != y.len()).then(|| format!("{what}: lengths {} vs {}", x.len(), y.len()))
}

/// Every reference table is reproduced byte for byte by its generator.
pub fn golden_tables() -> VerificationReport {
    timed("golden", json!({ "tables": golden::TABLES.len() }), || {
        for (name, want) in golden::TABLES {
            let got = to_tsv(&tables::reference(name)?);
            if got != want {
                let line = got
                    .lines()
                    .zip(want.lines())
                    .find(|(g, w)| g != w)
                    .map_or_else(|| String::from("line count"), |(g, _)| g.to_string());
                return Ok(Some(format!("{name} differs at {line:?}")));
            }
        }
        Ok(None)
    })
}

/// Splythoff P-positions from the game, from the mex rule, and as
/// `(y - x, z - y)` over the letter positions of the Tribonacci word.
pub fn three_routes(n: usize) -> VerificationReport {
    timed("theorem1", json!({ "n": n }), || {
        let solved = p_positions(&GameRules::splythoff(), n)?;
        let mex = splythoff_columns(n)?;
        let mut w = WordStream::kbonacci(3)?;
        let x = w.letter_positions(Letter(0), n)?;
        let y = w.letter_positions(Letter(1), n)?;
        let z = w.letter_positions(Letter(2), n)?;
        for i in 0..n {
            let word = (y[i] - x[i], z[i] - y[i]);
            let game = (solved[i].a, solved[i].b);
            let rule = (mex.row("A").unwrap()[i], mex.row("B").unwrap()[i]);
            if word != game || word != rule {
                return Ok(Some(format!(
                    "column {}: game {game:?}, mex rule {rule:?}, word {word:?}",
                    i + 1
                )));
            }
        }
        Ok(None)
    })
}

/// Deleting the 2s from the Tribonacci word leaves the indicator of `B`
/// among `A ∪ B`: 0 at members of `A`, 1 at members of `B`.
pub fn coding(letters: usize) -> VerificationReport {
    timed("coding", json!({ "letters": letters }), || {
        let mut w = WordStream::kbonacci(3)?;
        let prefix = w.ensure(letters)?[..letters].to_vec();
        let coded = Coding::deleting(3, Letter(2))?.apply(&prefix)?;
        let len = coded.len() as u64;
        let t = splythoff_columns(coded.len().max(1))?;
        let mut nu = vec![None; coded.len()];
        for (row, letter) in [("A", 0u8), ("B", 1)] {
            for &v in t.row(row).unwrap() {
                if v <= len {
                    nu[v as usize - 1] = Some(Letter(letter));
                }
            }
        }
        for (i, (c, n)) in coded.iter().zip(&nu).enumerate() {
            if Some(*c) != *n {
                return Ok(Some(format!(
                    "letter {} is {} but the indicator gives {n:?}",
                    i + 1,
                    c.to_char()
                )));
            }
        }
        Ok(None)
    })
}

/// Difference rows, and double-difference rows with the sum row, partition
/// `1..=upto`.
pub fn partitions(k: usize, upto: u64) -> VerificationReport {
    timed("partitions", json!({ "k": k, "upto": upto }), || {
        let n = upto as usize + 1;
        for (label, rows) in [
            ("difference", difference_table(k, n)?.rows),
            ("double-difference", double_difference_table(k, n)?.rows),
        ] {
            let r = check_partition(&rows, upto)?;
            if let Some(v) = r.first_violation {
                return Ok(Some(format!("{label} rows: {:?} at {}", v.kind, v.value)));
            }
        }
        Ok(None)
    })
}

/// The Quadribonacci mex rule against the three letter tables of `w4`.
pub fn quadribonacci_rule(n: usize) -> VerificationReport {
    timed("theorem4", json!({ "n": n }), || {
        let mex = quadribonacci_columns(n)?;
        for t in [
            positions_table(4, n)?,
            difference_table(4, n)?,
            double_difference_table(4, n)?,
        ] {
            for (name, row) in t.row_names().iter().zip(&t.rows) {
                if let Some(d) = first_difference(name, mex.row(name).unwrap(), row) {
                    return Ok(Some(d));
                }
            }
        }
        Ok(None)
    })
}

/// `X^{k-1} = E + X^0 + .. + X^{k-2}` on the positions table, and for
/// `k = 4` on the mex-rule rows as well.
pub fn bottom_row_identity(k: usize, n: usize) -> VerificationReport {
    timed("lemma18", json!({ "k": k, "n": n }), || {
        let t = positions_table(k, n)?;
        if let Some(c) = bottom_row_sum_failure(&t) {
            return Ok(Some(format!("positions table column {}", c + 1)));
        }
        if k == 4 {
            let mex = quadribonacci_columns(n)?;
            let x: Vec<&[u64]> = ["X0", "X1", "X2", "X3"]
                .iter()
                .map(|r| mex.row(r).unwrap())
                .collect();
            if let Some(c) = (0..n).find(|&c| x[3][c] != c as u64 + 1 + x[0][c] + x[1][c] + x[2][c])
            {
                return Ok(Some(format!("mex rule column {}", c + 1)));
            }
        }
        Ok(None)
    })
}

/// The 18x18 Splythoff grid against the reference, and the marked cells
/// against the cells where it differs from Wythoff.
pub fn sg_table() -> VerificationReport {
    timed("sg-table", json!({ "size": 18 }), || {
        let reference = golden::parse_sg_table(golden::SG_TABLE)?;
        let size = reference.size();
        let sply = sprague_grundy_grid(&GameRules::splythoff(), size)?;
        let wyth = sprague_grundy_grid(&GameRules::wythoff(), size)?;
        for m in 0..size {
            for n in 0..size {
                let v = sply.get(m, n);
                if v != reference.values[m][n] {
                    return Ok(Some(format!(
                        "({m},{n}) is {v}, table has {}",
                        reference.values[m][n]
                    )));
                }
                let differs = v != wyth.get(m, n);
                if differs != reference.marked[m][n] {
                    return Ok(Some(format!(
                        "({m},{n}) differs from Wythoff: {differs}, marked: {}",
                        reference.marked[m][n]
                    )));
                }
            }
        }
        Ok(None)
    })
}

/// On a `size x size` Splythoff grid: no value up to `cap` repeats in a row
/// or column, diagonal 3 has no 0 and diagonal 4 has no 1.
pub fn sg_evidence(size: usize, cap: u32) -> VerificationReport {
    timed("sg-evidence", json!({ "size": size, "cap": cap }), || {
        let grid = sg::sprague_grundy_grid_par(&GameRules::splythoff(), size)?;
        for axis in [LineAxis::Row, LineAxis::Column] {
            for i in 0..size {
                let r = sg_permutation_check(&grid, axis, i, cap)?;
                if let Some(v) = r.counts.iter().position(|&c| c > 1) {
                    return Ok(Some(format!("{axis:?} {i} repeats {v}")));
                }
            }
        }
        for (offset, banned) in [(3usize, 0u32), (4, 1)] {
            if size > offset {
                let r = sg_permutation_check(&grid, LineAxis::Diagonal, offset, banned)?;
                if let Some(i) = r.values.iter().position(|&v| v == banned) {
                    return Ok(Some(format!(
                        "diagonal {offset} has {banned} at ({i},{})",
                        i + offset
                    )));
                }
            }
        }
        Ok(None)
    })
}

/// Move-based and table-based indices coincide for every position up to
/// `bound`, and every Splythoff move keeps a pile, the difference or the sum.
pub fn characterization(bound: u64) -> VerificationReport {
    timed("characterization", json!({ "bound": bound }), || {
        if let Some((from, to)) = shape_keeping_violation(bound.min(60)) {
            return Ok(Some(format!(
                "move {from} -> {to} keeps no pile, difference or sum"
            )));
        }
        let r = np_characterization_check(bound)?;
        Ok(r.first_mismatch.map(|m| format!("{m:?}")))
    })
}

/// Step codes of 2- and 3-Splythoff against their conjectured substitutions.
pub fn step_codes(n: usize) -> VerificationReport {
    timed("step-codes", json!({ "n": n }), || {
        let cases = [
            (
                2u32,
                vec![(1, 5), (2, 4), (1, 3)],
                kbonacci_substitution(3)?,
            ),
            (
                3,
                vec![(1, 6), (1, 4), (2, 6)],
                "0:01,1:2,2:01".parse::<Substitution>()?,
            ),
        ];
        for (a, alphabet, sub) in cases {
            let c = step_code(&GameRules::a_splythoff(a)?, n)?;
            if c.step_alphabet != alphabet {
                return Ok(Some(format!(
                    "a = {a}: step alphabet {:?}",
                    c.step_alphabet
                )));
            }
            let r = check_substitution_fixpoint(&c.code, &sub);
            if !r.holds() {
                return Ok(Some(format!(
                    "a = {a}: code leaves the fixed point of {sub} at letter {}",
                    r.consistent_prefix + 1
                )));
            }
        }
        Ok(None)
    })
}

/// Leading letters of the 4-Splythoff step code as printed in the reference.
pub const FOUR_SPLYTHOFF_PREFIX: &str = "012302010420121013002312011132";

pub fn table10_code() -> VerificationReport {
    let len = FOUR_SPLYTHOFF_PREFIX.len();
    timed("table10-code", json!({ "a": 4, "letters": len }), || {
        let c = step_code(&GameRules::a_splythoff(4)?, len)?;
        let got = render_word(&c.code);
        Ok(first_mismatch_in(&got, FOUR_SPLYTHOFF_PREFIX))
    })
}

fn first_mismatch_in(got: &str, want: &str) -> Option<String> {
    let i = got.bytes().zip(want.bytes()).position(|(g, w)| g != w)?;
    Some(format!(
        "letter {} is {} (expected {}); code {got}",
        i + 1,
        &got[i..=i],
        &want[i..=i]
    ))
}

/// Skolem-Fraenkel conditions and partitions for every `(a, b)` with
/// `b <= a <= max_a`, and a-Wythoff P-positions against the `b = a` pairs.
pub fn beatty(max_a: u32, upto: u64, positions: usize) -> VerificationReport {
    let params = json!({ "max_a": max_a, "upto": upto, "positions": positions });
    timed("beatty", params, || {
        for a in 1..=max_a {
            for b in 1..=a {
                let pair = wythoff_ab_params(a, b)?;
                let r = skolem_fraenkel_report(&pair)?;
                if !r.holds() {
                    return Ok(Some(format!("(a, b) = ({a}, {b}): {r:?}")));
                }
                let (ra, rb) = pair.rows(pair.terms_covering(upto)?)?;
                let p = check_partition(&[ra, rb], upto)?;
                if let Some(v) = p.first_violation {
                    return Ok(Some(format!(
                        "(a, b) = ({a}, {b}): {:?} at {}",
                        v.kind, v.value
                    )));
                }
            }
        }
        for a in 1..=max_a.min(4) {
            let (ra, rb) = wythoff_ab_params(a, a)?.rows(positions)?;
            let solved = p_positions(&GameRules::a_wythoff(a)?, positions)?;
            let beatty: Vec<Position> = ra
                .iter()
                .zip(&rb)
                .map(|(&x, &y)| Position::new(x, y))
                .collect();
            if let Some(d) = first_difference(&format!("a = {a}"), &solved, &beatty) {
                return Ok(Some(d));
            }
        }
        Ok(None)
    })
}

/// Checks accepted by `verify`.
pub const CHECKS: [&str; 12] = [
    "golden",
    "theorem1",
    "coding",
    "partitions",
    "theorem4",
    "lemma18",
    "sg-table",
    "sg-evidence",
    "characterization",
    "step-codes",
    "table10-code",
    "beatty",
];

/// Parameters for [`run`]; `None` selects each check's default.
#[derive(Debug, Clone, Default)]
pub struct VerifyParams {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub upto: Option<u64>,
    pub size: Option<usize>,
    pub bound: Option<u64>,
}

/// Runs one named check, or every check for `all`, at default parameters
/// unless overridden.
pub fn run(check: &str, p: &VerifyParams) -> Result<Vec<VerificationReport>> {
    let ks = |lo: usize, hi: usize| p.k.map_or((lo..=hi).collect::<Vec<_>>(), |k| vec![k]);
    Ok(match check {
        "all" => {
            let mut out = Vec::new();
            for c in CHECKS {
                out.extend(run(c, p)?);
            }
            out
        }
        "golden" => vec![golden_tables()],
        "theorem1" => vec![three_routes(p.n.unwrap_or(1000))],
        "coding" => vec![coding(p.n.unwrap_or(100_000))],
        "partitions" => ks(3, 6)
            .into_iter()
            .map(|k| partitions(k, p.upto.unwrap_or(100_000)))
            .collect(),
        "theorem4" => vec![quadribonacci_rule(p.n.unwrap_or(10_000))],
        "lemma18" => ks(2, 8)
            .into_iter()
            .map(|k| bottom_row_identity(k, p.n.unwrap_or(10_000)))
            .collect(),
        "sg-table" => vec![sg_table()],
        "sg-evidence" => vec![sg_evidence(p.size.unwrap_or(512), 100)],
        "characterization" => vec![characterization(p.bound.unwrap_or(300))],
        "step-codes" => vec![step_codes(p.n.unwrap_or(500))],
        "table10-code" => vec![table10_code()],
        "beatty" => vec![beatty(5, p.upto.unwrap_or(100_000), p.n.unwrap_or(500))],
        other => anyhow::bail!("unknown check {other:?}; expected all or one of {CHECKS:?}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        for r in [
            three_routes(200),
            coding(5000),
            partitions(4, 5000),
            quadribonacci_rule(500),
            bottom_row_identity(5, 500),
            sg_table(),
            sg_evidence(64, 20),
            characterization(60),
            golden_tables(),
        ] {
            assert!(r.passed, "{}", r.line());
        }
    }

    #[test]
    fn failures_carry_a_counterexample() {
        let r = timed("demo", json!({ "n": 1 }), || Ok(Some("x".into())));
        assert!(!r.passed);
        assert!(r.line().starts_with("FAIL demo n=1"));
        let e = timed("demo", json!({}), || anyhow::bail!("boom"));
        assert_eq!(e.counterexample.as_deref(), Some("error: boom"));
        assert_eq!(
            first_mismatch_in("0120", "0121").unwrap(),
            "letter 4 is 0 (expected 1); code 0120"
        );
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert!(run("nope", &VerifyParams::default()).is_err());
    }
}
