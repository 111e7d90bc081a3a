//! Text serializations of named integer rows.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

/// Output formats for tables and sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Csv,
    Bfile,
    Json,
}

/// A table as printed: an optional header row of letters, then named rows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NamedRows {
    pub header: Option<(String, Vec<String>)>,
    pub rows: Vec<(String, Vec<u64>)>,
}

impl NamedRows {
    pub fn row(&self, name: &str) -> Option<&[u64]> {
        self.rows
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| &r[..])
    }

    pub fn render(&self, format: Format, row: Option<&str>) -> anyhow::Result<String> {
        Ok(match format {
            Format::Tsv => to_tsv(self),
            Format::Csv => to_csv(self),
            Format::Json => to_json(self),
            Format::Bfile => {
                let values = match row {
                    Some(name) => self
                        .row(name)
                        .ok_or_else(|| anyhow::anyhow!("no row named {name}"))?,
                    None => {
                        &self
                            .rows
                            .first()
                            .ok_or_else(|| anyhow::anyhow!("table has no rows"))?
                            .1
                    }
                };
                to_bfile(values)
            }
        })
    }
}

/// Tab-separated: the header row first (if any), then one line per row, each
/// led by its name.
pub fn to_tsv(t: &NamedRows) -> String {
    let mut out = String::new();
    if let Some((name, letters)) = &t.header {
        out.push_str(name);
        for l in letters {
            out.push('\t');
            out.push_str(l);
        }
        out.push('\n');
    }
    for (name, row) in &t.rows {
        out.push_str(name);
        for v in row {
            write!(out, "\t{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Comma-separated with a `row_name` column and 1-based column numbers.
pub fn to_csv(t: &NamedRows) -> String {
    let width = t
        .rows
        .iter()
        .map(|(_, r)| r.len())
        .chain(t.header.iter().map(|(_, h)| h.len()))
        .max()
        .unwrap_or(0);
    let mut out = String::from("row_name");
    for c in 1..=width {
        write!(out, ",{c}").unwrap();
    }
    out.push('\n');
    if let Some((name, letters)) = &t.header {
        out.push_str(name);
        for l in letters {
            write!(out, ",{l}").unwrap();
        }
        out.push('\n');
    }
    for (name, row) in &t.rows {
        out.push_str(name);
        for v in row {
            write!(out, ",{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// OEIS b-file: line `i` is `i v_i`, 1-indexed.
pub fn to_bfile(values: &[u64]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        writeln!(out, "{} {v}", i + 1).unwrap();
    }
    out
}

pub fn to_json(t: &NamedRows) -> String {
    let mut rows = Map::new();
    for (name, row) in &t.rows {
        rows.insert(name.clone(), json!(row));
    }
    let header = t
        .header
        .as_ref()
        .map(|(n, h)| json!({ "name": n, "letters": h }));
    let mut s = json!({ "header": header, "rows": Value::Object(rows) }).to_string();
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> NamedRows {
        NamedRows {
            header: Some(("w3".into(), vec!["0".into(), "1".into()])),
            rows: vec![("A".into(), vec![1, 3]), ("B".into(), vec![2, 5])],
        }
    }

    #[test]
    fn tsv_layout() {
        assert_eq!(to_tsv(&sample()), "w3\t0\t1\nA\t1\t3\nB\t2\t5\n");
    }

    #[test]
    fn csv_layout() {
        assert_eq!(to_csv(&sample()), "row_name,1,2\nw3,0,1\nA,1,3\nB,2,5\n");
    }

    #[test]
    fn bfile_layout() {
        assert_eq!(to_bfile(&[1, 3, 4]), "1 1\n2 3\n3 4\n");
        let t = sample();
        assert_eq!(t.render(Format::Bfile, Some("B")).unwrap(), "1 2\n2 5\n");
        assert!(t.render(Format::Bfile, Some("Z")).is_err());
    }

    #[test]
    fn json_layout() {
        let v: Value = serde_json::from_str(&to_json(&sample())).unwrap();
        assert_eq!(v["rows"]["B"], json!([2, 5]));
        assert_eq!(v["header"]["name"], "w3");
    }
}
