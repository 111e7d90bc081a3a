use splythoff_core::sequences::{quadribonacci_columns, splythoff_columns};
use splythoff_core::substitution::Letter;
use splythoff_core::tables::{
    bottom_row_sum_failure, check_partition, check_shift_cover, difference_table,
    double_difference_table, first_common_value, positions_table, positions_table_oracle,
    row_differences, row_sum, step_lengths,
};

#[test]
fn step_generator_matches_letter_scan() {
    for k in 3..=6 {
        let fast = positions_table(k, 10_000).unwrap();
        let slow = positions_table_oracle(k, 10_000).unwrap();
        assert_eq!(fast, slow, "k = {k}");
    }
}

#[test]
fn difference_tables_match_subtraction() {
    for k in 3..=6 {
        let x = positions_table(k, 5_000).unwrap();
        let d = difference_table(k, 5_000).unwrap();
        assert_eq!(d.rows, row_differences(&x.rows), "k = {k}");
        let dd = double_difference_table(k, 5_000).unwrap();
        let mut expect = row_differences(&d.rows);
        expect.push(row_sum(&d.rows));
        assert_eq!(dd.rows, expect, "k = {k}");
    }
}

#[test]
fn shifted_rows_cover_the_row_above() {
    for k in 3..=6 {
        let x = positions_table(k, 20_000).unwrap();
        for j in 0..k - 1 {
            let r = check_shift_cover(&x.rows[j + 1], &x.rows[j], 1 << j);
            assert!(r.holds(), "positions k={k} j={j}: {r:?}");
            assert!(r.horizon > 10_000);
        }
        let d = difference_table(k, 20_000).unwrap();
        for j in 0..k - 2 {
            let r = check_shift_cover(&d.rows[j + 1], &d.rows[j], 1 << j);
            assert!(r.holds(), "differences k={k} j={j}: {r:?}");
        }
        let dd = double_difference_table(k, 20_000).unwrap();
        for j in 0..k.saturating_sub(3) {
            let r = check_shift_cover(&dd.rows[j + 1], &dd.rows[j], 1 << j);
            assert!(r.holds(), "double differences k={k} j={j}: {r:?}");
        }
    }
}

#[test]
fn rows_partition_the_naturals() {
    let n = 100_001;
    for k in 3..=6 {
        let x = positions_table(k, n).unwrap();
        assert!(check_partition(&x.rows, 100_000).unwrap().is_partition);
        let d = difference_table(k, n).unwrap();
        assert!(
            check_partition(&d.rows, 100_000).unwrap().is_partition,
            "k = {k}"
        );
        assert_eq!(first_common_value(&d.rows, 100_000), None);
        let dd = double_difference_table(k, n).unwrap();
        assert!(
            check_partition(&dd.rows, 100_000).unwrap().is_partition,
            "k = {k}"
        );
        let diff_rows = &dd.rows[..dd.rows.len() - 1];
        assert_eq!(first_common_value(diff_rows, 100_000), None);
    }
}

#[test]
fn minimal_step_sits_under_the_last_letter() {
    for k in 3..=6 {
        let last = Letter(k as u8 - 1);
        for i in 0..k as u8 {
            let l = step_lengths(k, Letter(i)).unwrap();
            for (j, &s) in l.iter().enumerate() {
                if Letter(i) == last {
                    assert_eq!(s, 1 << j);
                } else {
                    assert!(s > 1 << j);
                }
            }
        }
        let t = positions_table(k, 3_000).unwrap();
        for (j, row) in t.rows.iter().enumerate() {
            for (c, w) in row.windows(2).enumerate() {
                assert_eq!(w[1] - w[0] == 1 << j, t.header[c] == last);
            }
        }
    }
}

#[test]
fn bottom_row_is_index_plus_other_rows() {
    for k in 2..=8 {
        let t = positions_table(k, 10_000).unwrap();
        assert_eq!(bottom_row_sum_failure(&t), None, "k = {k}");
    }
}

#[test]
fn splythoff_rows_are_tribonacci_differences() {
    let n = 10_000;
    let mex = splythoff_columns(n).unwrap();
    let d = difference_table(3, n).unwrap();
    assert_eq!(mex.row("A").unwrap(), d.rows[0]);
    assert_eq!(mex.row("B").unwrap(), d.rows[1]);
    let dd = double_difference_table(3, n).unwrap();
    assert_eq!(mex.row("D").unwrap(), dd.rows[0]);
    assert_eq!(mex.row("S").unwrap(), dd.rows[1]);
}

#[test]
fn quadribonacci_mex_rule_rebuilds_all_three_tables() {
    let n = 10_000;
    let mex = quadribonacci_columns(n).unwrap();
    let x = positions_table(4, n).unwrap();
    let d = difference_table(4, n).unwrap();
    let dd = double_difference_table(4, n).unwrap();
    for (name, row) in ["X0", "X1", "X2", "X3"].iter().zip(&x.rows) {
        assert_eq!(mex.row(name).unwrap(), &row[..], "{name}");
    }
    for (name, row) in ["D0", "D1", "D2"].iter().zip(&d.rows) {
        assert_eq!(mex.row(name).unwrap(), &row[..], "{name}");
    }
    for (name, row) in ["dD0", "dD1", "S"].iter().zip(&dd.rows) {
        assert_eq!(mex.row(name).unwrap(), &row[..], "{name}");
    }
}
