//! Builders turning core tables into printable [`NamedRows`].

use anyhow::{ensure, Result};
use splythoff_core::games::{p_positions, step_code, Family, GameRules};
use splythoff_core::sequences::{
    quadribonacci_columns, splythoff_columns, wythoff_ab_params, wythoff_columns, MexTable,
};
use splythoff_core::substitution::Letter;
use splythoff_core::tables::{
    difference_table, double_difference_table, positions_table, SequenceTable,
};

use crate::format::NamedRows;

fn letters(w: &[Letter]) -> Vec<String> {
    w.iter().map(|l| l.to_char().to_string()).collect()
}

pub fn from_sequence_table(t: &SequenceTable) -> NamedRows {
    NamedRows {
        header: Some((t.header_name(), letters(&t.header))),
        rows: t
            .row_names()
            .into_iter()
            .zip(t.rows.iter().cloned())
            .collect(),
    }
}

pub fn from_mex_table(t: &MexTable) -> NamedRows {
    NamedRows {
        header: None,
        rows: t
            .names
            .iter()
            .map(|n| n.to_string())
            .zip(t.rows.iter().cloned())
            .collect(),
    }
}

pub fn positions(k: usize, n: usize) -> Result<NamedRows> {
    Ok(from_sequence_table(&positions_table(k, n)?))
}

pub fn differences(k: usize, n: usize) -> Result<NamedRows> {
    Ok(from_sequence_table(&difference_table(k, n)?))
}

pub fn double_differences(k: usize, n: usize) -> Result<NamedRows> {
    Ok(from_sequence_table(&double_difference_table(k, n)?))
}

pub fn wythoff(n: usize) -> Result<NamedRows> {
    Ok(from_mex_table(&wythoff_columns(n)?))
}

pub fn splythoff(n: usize) -> Result<NamedRows> {
    Ok(from_mex_table(&splythoff_columns(n)?))
}

/// The simultaneous Quadribonacci mex rule, headed by the letters of `w4`.
pub fn quadribonacci(n: usize) -> Result<NamedRows> {
    let t = quadribonacci_columns(n)?;
    let header = positions_table(4, n)?.header;
    let mut rows = from_mex_table(&t);
    rows.header = Some((String::from("w4"), letters(&header)));
    Ok(rows)
}

pub fn beatty(a: u32, b: u32, n: usize) -> Result<NamedRows> {
    ensure!(n > 0, "need at least one column");
    let (ra, rb) = wythoff_ab_params(a, b)?.rows(n)?;
    Ok(NamedRows {
        header: None,
        rows: vec![("A".into(), ra), ("B".into(), rb)],
    })
}

/// First `n` P-positions of a game, headed by their step code.
pub fn game(rules: &GameRules, n: usize) -> Result<NamedRows> {
    ensure!(n > 0, "need at least one column");
    let p = p_positions(rules, n)?;
    let code = step_code(rules, n)?;
    let (a, b) = p.iter().map(|q| (q.a, q.b)).unzip();
    Ok(NamedRows {
        header: Some((String::from("code"), letters(&code.code[..n]))),
        rows: vec![("A".into(), a), ("B".into(), b)],
    })
}

/// The generator behind each reference table, at its printed width.
pub fn reference(name: &str) -> Result<NamedRows> {
    let a_sply = |a| GameRules::new(Family::ASplythoff, a);
    match name {
        "table1" => wythoff(12),
        "table2" => beatty(2, 2, 12),
        "table3" => beatty(1, 2, 12),
        "table4" => splythoff(12),
        "table5" => positions(4, 16),
        "table6" => differences(4, 16),
        "table7" => double_differences(4, 16),
        "table8" => game(&a_sply(2)?, 17),
        "table9" => game(&a_sply(3)?, 16),
        "table10" => game(&a_sply(4)?, 17),
        _ => anyhow::bail!("unknown reference table {name}"),
    }
}
