//! Solve a two-player zero-sum game exactly.

use shapley_rank::matrix_game::{pure_maximin, solve_zero_sum, PayoffMatrix};
use shapley_rank::rational::{int, to_exact_string};

fn main() {
    // Coalition {a, c} against {b, d, e} in the 45-voter election.
    let rows = vec![vec![20, 30, 22], vec![29, 17, 24]];
    let game = PayoffMatrix::new(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
        .expect("rectangular matrix");
    let solution = solve_zero_sum(&game);
    let show = |xs: &[_]| xs.iter().map(to_exact_string).collect::<Vec<_>>().join(", ");
    println!("pure guarantee: {}", pure_maximin(&game));
    println!("value:          {}", solution.value);
    println!("row player:     ({})", show(&solution.row_strategy));
    println!("column player:  ({})", show(&solution.col_strategy));
    assert!(solution.certifies(&game));
}
