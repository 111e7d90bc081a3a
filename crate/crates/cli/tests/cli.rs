use std::io::Write;
use std::process::{Command, Stdio};

use splythoff::app::run;
use splythoff::golden;

fn cli(args: &[&str]) -> (i32, String, String) {
    cli_with_input(args, "")
}

fn cli_with_input(args: &[&str], input: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["splythoff"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn word_prefixes() {
    assert_eq!(
        cli(&["word", "--k", "3", "--n", "20"]).1,
        "01020100102010102010\n"
    );
    assert_eq!(
        cli(&["word", "--k", "2", "--n", "15"]).1,
        "010010100100101\n"
    );
    let (code, nu, _) = cli(&["word", "--k", "3", "--n", "56", "--delete", "2"]);
    assert_eq!(code, 0);
    assert!(nu.starts_with("01001001001010010"));
    let (_, coded, _) = cli(&["word", "--k", "3", "--n", "56", "--coding", "0:0,1:1,2:"]);
    assert_eq!(coded, nu);
}

#[test]
fn bad_parameters_are_usage_errors() {
    assert_eq!(cli(&["word", "--k", "1", "--n", "5"]).0, 2);
    assert_eq!(
        cli(&["word", "--k", "3", "--n", "5", "--coding", "0:0"]).0,
        2
    );
    assert_eq!(cli(&["word", "--k", "3", "--n", "5", "--delete", "7"]).0, 2);
    assert_eq!(
        cli(&["word", "--k", "3", "--n", "500", "--seed-cap", "100"]).0,
        2
    );
    assert_eq!(cli(&["table", "nonsense"]).0, 2);
    assert_eq!(cli(&["verify", "nonsense"]).0, 2);
    assert_eq!(
        cli(&["table", "game", "--family", "wythoff", "--a", "2"]).0,
        2
    );
    let (code, _, err) = cli(&["experiment", "--a", "2", "--candidate", "0:9"]);
    assert_eq!(code, 2);
    assert!(err.contains("candidate"));
}

#[test]
fn designated_generators_print_the_reference_tables() {
    let cases: [(&str, &[&str]); 10] = [
        ("table1", &["table", "wythoff"]),
        ("table2", &["table", "beatty", "--a", "2", "--b", "2"]),
        ("table3", &["table", "beatty", "--a", "1", "--b", "2"]),
        ("table4", &["table", "splythoff", "--n", "12"]),
        ("table5", &["table", "positions", "--k", "4", "--n", "16"]),
        ("table6", &["table", "diff", "--k", "4", "--n", "16"]),
        ("table7", &["table", "ddiff", "--k", "4", "--n", "16"]),
        (
            "table8",
            &[
                "table",
                "game",
                "--family",
                "a-splythoff",
                "--a",
                "2",
                "--n",
                "17",
            ],
        ),
        (
            "table9",
            &[
                "table",
                "game",
                "--family",
                "a-splythoff",
                "--a",
                "3",
                "--n",
                "16",
            ],
        ),
        (
            "table10",
            &[
                "table",
                "game",
                "--family",
                "a-splythoff",
                "--a",
                "4",
                "--n",
                "17",
            ],
        ),
    ];
    for (name, args) in cases {
        let (code, out, err) = cli(args);
        assert_eq!(code, 0, "{name}: {err}");
        assert_eq!(out, golden::table(name).unwrap(), "{name}");
    }
}

fn tsv_row(table: &str, name: &str) -> Vec<u64> {
    let line = table
        .lines()
        .find(|l| l.split('\t').next() == Some(name))
        .unwrap();
    line.split('\t')
        .skip(1)
        .map(|v| v.parse().unwrap())
        .collect()
}

/// The last sum-row entry of the double-difference table is the column sum
/// of the difference table: 28 + 54 + 104.
#[test]
fn sum_row_closes_over_the_difference_columns() {
    let diff = golden::table("table6").unwrap();
    let ddiff = golden::table("table7").unwrap();
    let d: Vec<Vec<u64>> = ["D0", "D1", "D2"]
        .iter()
        .map(|r| tsv_row(diff, r))
        .collect();
    let s = tsv_row(ddiff, "S");
    for c in 0..16 {
        assert_eq!(s[c], d[0][c] + d[1][c] + d[2][c], "column {}", c + 1);
    }
    assert_eq!((d[0][15], d[1][15], d[2][15], s[15]), (28, 54, 104, 186));
}

#[test]
fn quadribonacci_table_holds_all_three_tables() {
    let (_, out, _) = cli(&["table", "quadribonacci", "--n", "16"]);
    let names: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(
        names,
        ["w4", "X0", "X1", "X2", "X3", "D0", "D1", "D2", "dD0", "dD1", "S"]
    );
    for (name, src) in [("X3", "table5"), ("D2", "table6"), ("S", "table7")] {
        assert_eq!(
            tsv_row(&out, name),
            tsv_row(golden::table(src).unwrap(), name)
        );
    }
}

#[test]
fn other_formats() {
    let (_, csv, _) = cli(&["table", "splythoff", "--n", "3", "--format", "csv"]);
    assert_eq!(csv, "row_name,1,2,3\nD,1,2,4\nA,1,3,4\nB,2,5,8\nS,3,8,12\n");
    let (_, bfile, _) = cli(&["table", "splythoff", "--format", "bfile"]);
    assert_eq!(bfile.lines().count(), 12);
    let (_, json, _) = cli(&["table", "wythoff", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"]["B"], serde_json::json!([2, 5]));
}

#[test]
fn bfile_export_of_the_splythoff_rows() {
    let (code, a, _) = cli(&["export", "row", "splythoff", "--n", "12", "--row", "A"]);
    assert_eq!(code, 0);
    let expect: String = [1, 3, 4, 6, 7, 9, 10, 12, 14, 15, 17, 18]
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{} {v}\n", i + 1))
        .collect();
    assert_eq!(a, expect);
    assert_eq!(cli(&["export", "row", "splythoff", "--row", "Q"]).0, 2);
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("splythoff-out-{}.bin", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, stdout, _) = cli(&["export", "sg", "--size", "18", "--binary", "--out", p]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let grid = splythoff::sg::read_binary(&mut std::fs::File::open(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(grid.size(), 18);
    let reference = golden::parse_sg_table(golden::SG_TABLE).unwrap();
    assert_eq!(grid.row(5), &reference.values[5][..]);
}

#[test]
fn sg_csv_in_paper_orientation() {
    let (_, csv, _) = cli(&["export", "sg", "--paper-orientation", "--threads", "2"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 18);
    assert_eq!(
        lines[17],
        (0..18).map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    );
    assert!(lines[0].starts_with("17,13,18,20,12,11"));
}

#[test]
fn verify_reports_and_exit_codes() {
    let (code, out, _) = cli(&["verify", "theorem1", "--n", "300"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS theorem1 n=300"));
    let (code, out, _) = cli(&["verify", "partitions", "--k", "5", "--upto", "100000"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(cli(&["verify", "sg-table"]).0, 0);
    let (code, out, _) = cli(&["verify", "table10-code", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["counterexample"].as_str().unwrap().contains("letter 18"));
}

#[test]
fn experiments() {
    let (code, out, _) = cli(&["experiment", "--a", "2", "--n", "500"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v["step_alphabet"],
        serde_json::json!([[1, 5], [2, 4], [1, 3]])
    );
    assert_eq!(v["code_prefix"].as_str().unwrap().len(), 499);
    assert_eq!(v["candidates"][0]["consistent"], true);

    let (_, out, _) = cli(&[
        "experiment",
        "--a",
        "3",
        "--n",
        "500",
        "--candidate",
        "0:01,1:2,2:01",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let c = v["candidates"].as_array().unwrap();
    assert!(c
        .iter()
        .any(|c| c["substitution"] == "0:01,1:2,2:01" && c["consistent"] == true));

    let (_, out, _) = cli(&["experiment", "--a", "4", "--n", "200"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["step_alphabet"].as_array().unwrap().len() >= 5);
    assert!(v["code_prefix"]
        .as_str()
        .unwrap()
        .starts_with("01230201042012"));
}

#[test]
fn play_session() {
    let (code, out, _) = cli_with_input(
        &["play", "--start", "4,7", "--first", "engine"],
        "single 1 1\n",
    );
    assert_eq!(code, 0);
    assert!(out.contains("-> (1,2)"));
    let (_, out, _) = cli_with_input(&["play", "--start", "3,5", "--first", "engine"], "");
    assert!(out.contains("no winning move"));
    let (_, out, _) = cli_with_input(&["play", "--start", "0,3"], "double 1 1\nsingle 3 3\n");
    assert!(out.contains("illegal"));
    assert!(out.contains("you win"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_splythoff");
    let ok = Command::new(bin)
        .args(["word", "--k", "3", "--n", "20"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(ok.stdout, b"01020100102010102010\n");
    let usage = Command::new(bin).arg("--no-such-flag").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let failed = Command::new(bin)
        .args(["verify", "table10-code"])
        .output()
        .unwrap();
    assert_eq!(failed.status.code(), Some(1));

    let mut child = Command::new(bin)
        .args(["play", "--start", "1,2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"single 2 1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("engine wins"));
}
