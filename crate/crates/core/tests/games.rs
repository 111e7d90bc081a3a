use splythoff_core::games::{
    np_characterization_check, p_positions, sg_permutation_check, shape_keeping_violation,
    sprague_grundy_grid, step_code, GameRules, LineAxis, Position, PositionSweep,
};
use splythoff_core::sequences::{
    splythoff_columns, wythoff_ab_params, BeattyPair, QuadraticIrrational,
};
use splythoff_core::substitution::{Letter, WordStream};

fn rows_of(p: &[Position]) -> (Vec<u64>, Vec<u64>) {
    p.iter().map(|q| (q.a, q.b)).unzip()
}

#[test]
fn three_routes_to_the_splythoff_positions() {
    let n = 1000;
    let solved = rows_of(&p_positions(&GameRules::splythoff(), n).unwrap());
    let mex = splythoff_columns(n).unwrap();
    let mut w = WordStream::kbonacci(3).unwrap();
    let x = w.letter_positions(Letter(0), n).unwrap();
    let y = w.letter_positions(Letter(1), n).unwrap();
    let z = w.letter_positions(Letter(2), n).unwrap();
    let a: Vec<u64> = (0..n).map(|i| y[i] - x[i]).collect();
    let b: Vec<u64> = (0..n).map(|i| z[i] - y[i]).collect();
    assert_eq!(solved.0, a);
    assert_eq!(solved.1, b);
    assert_eq!(mex.row("A").unwrap(), a);
    assert_eq!(mex.row("B").unwrap(), b);
}

#[test]
fn wythoff_positions_are_golden_beatty_pairs() {
    let phi = QuadraticIrrational::golden_ratio();
    let phi2 = phi.add_integer(1).unwrap();
    let zero = QuadraticIrrational::integer(0, 5).unwrap();
    let pair = BeattyPair {
        alpha: phi,
        beta: phi2,
        gamma: zero,
        delta: zero,
    };
    let (a, b) = pair.rows(500).unwrap();
    assert_eq!(
        rows_of(&p_positions(&GameRules::wythoff(), 500).unwrap()),
        (a, b)
    );
}

#[test]
fn a_wythoff_positions_are_beatty_pairs() {
    for a in 1..=4 {
        let (ra, rb) = wythoff_ab_params(a, a).unwrap().rows(500).unwrap();
        let solved = rows_of(&p_positions(&GameRules::a_wythoff(a).unwrap(), 500).unwrap());
        assert_eq!(solved, (ra, rb), "a = {a}");
    }
}

#[test]
fn every_splythoff_move_keeps_a_pile_or_the_shape() {
    assert_eq!(shape_keeping_violation(60), None);
}

#[test]
fn move_index_equals_first_intersecting_column() {
    let r = np_characterization_check(300).unwrap();
    assert!(r.holds(), "{:?}", r.first_mismatch);
    assert_eq!(r.positions_checked, 300 * 299 / 2);

    let mut sweep = PositionSweep::new(GameRules::splythoff());
    sweep.run_to_sum(10);
    assert_eq!(sweep.is_p_position(Position::new(1, 2)), Some(true));
    assert_eq!(sweep.is_p_position(Position::new(1, 5)), Some(false));
}

#[test]
fn splythoff_diagonals_miss_small_values() {
    let g = sprague_grundy_grid(&GameRules::splythoff(), 512).unwrap();
    let d3 = sg_permutation_check(&g, LineAxis::Diagonal, 3, 1).unwrap();
    assert_eq!(d3.counts[0], 0);
    let d4 = sg_permutation_check(&g, LineAxis::Diagonal, 4, 1).unwrap();
    assert_eq!(d4.counts[1], 0);
    let row = sg_permutation_check(&g, LineAxis::Row, 0, 511).unwrap();
    assert!(row.is_permutation_prefix());
}

#[test]
fn step_codes_of_a_splythoff() {
    let two = step_code(&GameRules::a_splythoff(2).unwrap(), 30).unwrap();
    assert_eq!(two.step_alphabet, [(1, 5), (2, 4), (1, 3)]);
    let three = step_code(&GameRules::a_splythoff(3).unwrap(), 30).unwrap();
    assert_eq!(three.step_alphabet, [(1, 6), (1, 4), (2, 6)]);
}
