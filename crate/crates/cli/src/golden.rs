//! Reference tables shipped with the crate.

use anyhow::{bail, ensure, Context};

/// `(name, contents)` of the ten reference tables, in order.
pub const TABLES: [(&str, &str); 10] = [
    ("table1", include_str!("../golden/table1.tsv")),
    ("table2", include_str!("../golden/table2.tsv")),
    ("table3", include_str!("../golden/table3.tsv")),
    ("table4", include_str!("../golden/table4.tsv")),
    ("table5", include_str!("../golden/table5.tsv")),
    ("table6", include_str!("../golden/table6.tsv")),
    ("table7", include_str!("../golden/table7.tsv")),
    ("table8", include_str!("../golden/table8.tsv")),
    ("table9", include_str!("../golden/table9.tsv")),
    ("table10", include_str!("../golden/table10.tsv")),
];

/// The 18x18 Splythoff Sprague-Grundy table: top line is second pile 17,
/// bottom line second pile 0; `*` marks cells that differ from Wythoff.
pub const SG_TABLE: &str = include_str!("../golden/sg_table.txt");

pub fn table(name: &str) -> Option<&'static str> {
    TABLES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// A parsed Sprague-Grundy reference table, indexed `[m][n]` from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SgReference {
    pub values: Vec<Vec<u32>>,
    pub marked: Vec<Vec<bool>>,
}

impl SgReference {
    pub fn size(&self) -> usize {
        self.values.len()
    }
}

pub fn parse_sg_table(text: &str) -> anyhow::Result<SgReference> {
    let mut values = Vec::new();
    let mut marked = Vec::new();
    // printed bottom-up
    for line in text.lines().rev().filter(|l| !l.trim().is_empty()) {
        let mut vs = Vec::new();
        let mut ms = Vec::new();
        for cell in line.split_whitespace() {
            let (num, mark) = match cell.strip_suffix('*') {
                Some(n) => (n, true),
                None => (cell, false),
            };
            vs.push(
                num.parse::<u32>()
                    .with_context(|| format!("bad cell {cell:?}"))?,
            );
            ms.push(mark);
        }
        values.push(vs);
        marked.push(ms);
    }
    let size = values.len();
    if size == 0 {
        bail!("empty table");
    }
    ensure!(
        values.iter().all(|r| r.len() == size),
        "table is not square"
    );
    Ok(SgReference { values, marked })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_sg_table_parses() {
        let t = parse_sg_table(SG_TABLE).unwrap();
        assert_eq!(t.size(), 18);
        for k in 0..18 {
            assert_eq!(t.values[0][k], k as u32);
            assert_eq!(t.values[k][k.min(17)], t.values[k][k]);
        }
        assert!(!t.marked[0].iter().any(|&m| m));
    }

    fn marks_symmetric(t: &SgReference) -> Vec<(usize, usize)> {
        let n = t.size();
        (0..n)
            .flat_map(|m| (m + 1..n).map(move |k| (m, k)))
            .filter(|&(m, k)| t.marked[m][k] != t.marked[k][m])
            .collect()
    }

    #[test]
    fn marks_are_symmetric() {
        let t = parse_sg_table(SG_TABLE).unwrap();
        assert!(marks_symmetric(&t).is_empty());
        for m in 0..18 {
            for k in 0..18 {
                assert_eq!(t.values[m][k], t.values[k][m]);
            }
        }
    }

    /// As printed, the line for pile 5 marks (5,10) and leaves (5,16) plain,
    /// the opposite of their mirror cells (10,5) and (16,5); the shipped
    /// table follows the mirror cells.
    #[test]
    fn printed_line_five_was_asymmetric() {
        let printed = "5 3 4 0 6 8 10 1 2 7 12* 9* 15* 16* 13* 17* 14 11";
        let mut lines: Vec<&str> = SG_TABLE.lines().collect();
        lines[17 - 5] = printed;
        let t = parse_sg_table(&lines.join("\n")).unwrap();
        assert_eq!(marks_symmetric(&t), [(5, 10), (5, 16)]);
    }

    #[test]
    fn table_lookup() {
        assert!(table("table4").unwrap().starts_with("D\t"));
        assert!(table("table11").is_none());
    }
}
