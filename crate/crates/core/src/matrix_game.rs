//! Exact solution of two-player constant-sum matrix games.
//!
//! The row player maximizes. Values and optimal mixed strategies are found by
//! the simplex method over exact rationals with Bland's pivot rule, applied to
//! the standard LP of a game whose entries were shifted to be positive:
//!
//! ```text
//! maximize  sum(y)   subject to  A y <= 1,  y >= 0
//! ```
//!
//! The optimal `y` rescaled is the column strategy; the slack reduced costs
//! rescaled are the row strategy; `1 / sum(y)` is the value of `A`.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("payoff matrix must have at least one row and one column")]
    Empty,
    #[error("payoff matrix rows have different lengths")]
    Ragged,
}

/// Dense `rows x cols` payoff matrix for the maximizing row player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PayoffMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl PayoffMatrix {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, GameError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.is_empty() || cols == 0 {
            return Err(GameError::Empty);
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(GameError::Ragged);
        }
        let r = rows.len();
        Ok(Self { rows: r, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Builds a matrix from an entry function. Panics if a dimension is zero.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(rows > 0 && cols > 0, "empty payoff matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl FnMut(&Rational) -> Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn min_entry(&self) -> &Rational {
        self.data.iter().min().expect("nonempty")
    }

    pub fn max_entry(&self) -> &Rational {
        self.data.iter().max().expect("nonempty")
    }
}

/// Game value with certifying optimal strategies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameSolution {
    pub value: Rational,
    pub row_strategy: Vec<Rational>,
    pub col_strategy: Vec<Rational>,
}

impl GameSolution {
    /// Checks that both strategies are distributions and that they certify
    /// `value`: the row strategy earns at least `value` against every column
    /// and the column strategy concedes at most `value` to every row.
    pub fn certifies(&self, game: &PayoffMatrix) -> bool {
        let distribution = |s: &[Rational], len: usize| {
            s.len() == len && s.iter().all(|x| !x.is_negative()) && s.iter().sum::<Rational>().is_one()
        };
        if !distribution(&self.row_strategy, game.rows()) || !distribution(&self.col_strategy, game.cols()) {
            return false;
        }
        let row_ok = (0..game.cols()).all(|j| {
            let payoff: Rational = (0..game.rows()).map(|i| &self.row_strategy[i] * game.get(i, j)).sum();
            payoff >= self.value
        });
        let col_ok = (0..game.rows()).all(|i| {
            let payoff: Rational = (0..game.cols()).map(|j| &self.col_strategy[j] * game.get(i, j)).sum();
            payoff <= self.value
        });
        row_ok && col_ok
    }
}

/// `max_i min_j M[i][j]`: the best payoff the row player can guarantee with a
/// pure strategy.
pub fn pure_maximin(game: &PayoffMatrix) -> Rational {
    (0..game.rows())
        .map(|i| (0..game.cols()).map(|j| game.get(i, j)).min().expect("nonempty").clone())
        .max()
        .expect("nonempty")
}

/// Exact value and optimal mixed strategies of a constant-sum game.
pub fn solve_zero_sum(game: &PayoffMatrix) -> GameSolution {
    let (r, c) = (game.rows(), game.cols());
    let min = game.min_entry();
    let shift = if min.is_positive() { Rational::zero() } else { Rational::one() - min };

    // Tableau rows: r constraints [A | I | 1], then the objective row.
    let width = c + r + 1;
    let rhs = width - 1;
    let mut tab: Vec<Vec<Rational>> = (0..r)
        .map(|i| {
            let mut row = vec![Rational::zero(); width];
            for j in 0..c {
                row[j] = game.get(i, j) + &shift;
            }
            row[c + i] = Rational::one();
            row[rhs] = Rational::one();
            row
        })
        .collect();
    let mut objective = vec![Rational::zero(); width];
    for cell in objective.iter_mut().take(c) {
        *cell = -Rational::one();
    }
    let mut basis: Vec<usize> = (c..c + r).collect();

    // Bland's rule: lowest-index improving column, lowest-index leaving variable.
    while let Some(enter) = (0..c + r).find(|&j| objective[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..r {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][rhs] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (pivot_row, _) = leave.expect("game LP is bounded because every entry is positive");
        pivot(&mut tab, &mut objective, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    let total = objective[rhs].clone();
    debug_assert!(total.is_positive());
    let mut col_strategy = vec![Rational::zero(); c];
    for (i, &var) in basis.iter().enumerate() {
        if var < c {
            col_strategy[var] = &tab[i][rhs] / &total;
        }
    }
    let row_strategy: Vec<Rational> = (0..r).map(|i| &objective[c + i] / &total).collect();
    let solution = GameSolution { value: total.recip() - shift, row_strategy, col_strategy };
    assert!(solution.certifies(game), "simplex produced an uncertified game solution");
    solution
}

fn pivot(tab: &mut [Vec<Rational>], objective: &mut [Rational], row: usize, col: usize) {
    let inv = tab[row][col].recip();
    for cell in tab[row].iter_mut() {
        *cell *= &inv;
    }
    let pivot_row = tab[row].clone();
    let eliminate = |target: &mut [Rational]| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for (cell, p) in target.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *cell -= &factor * p;
            }
        }
    };
    for (i, target) in tab.iter_mut().enumerate() {
        if i != row {
            eliminate(target);
        }
    }
    eliminate(objective);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn matrix(rows: &[&[i64]]) -> PayoffMatrix {
        PayoffMatrix::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn majority_game_of_ac_against_bde() {
        let g = matrix(&[&[0, 1, 0], &[1, 0, 1]]);
        let s = solve_zero_sum(&g);
        assert_eq!(s.value, frac(1, 2));
        assert!(s.certifies(&g));
        assert_eq!(pure_maximin(&g), int(0));
    }

    #[test]
    fn vote_game_of_ac_against_bde() {
        let g = matrix(&[&[20, 30, 22], &[29, 17, 24]]);
        let s = solve_zero_sum(&g);
        assert_eq!(s.value, frac(346, 15));
        // The published strategies are one optimal pair; check that they certify too.
        let published = GameSolution {
            value: frac(346, 15),
            row_strategy: vec![frac(7, 15), frac(8, 15)],
            col_strategy: vec![int(0), frac(2, 15), frac(13, 15)],
        };
        assert!(published.certifies(&g));
        assert_eq!(pure_maximin(&g), int(20));
    }

    #[test]
    fn one_by_one() {
        let g = matrix(&[&[-7]]);
        let s = solve_zero_sum(&g);
        assert_eq!(s.value, int(-7));
        assert_eq!(s.row_strategy, vec![int(1)]);
        assert_eq!(s.col_strategy, vec![int(1)]);
    }

    #[test]
    fn degenerate_shapes() {
        let row = matrix(&[&[20, 26, 30, 22]]);
        assert_eq!(solve_zero_sum(&row).value, int(20));
        assert_eq!(pure_maximin(&row), int(20));
        let col = matrix(&[&[3], &[9], &[4]]);
        assert_eq!(solve_zero_sum(&col).value, int(9));
        let same = matrix(&[&[1, 2, 3], &[1, 2, 3]]);
        assert_eq!(solve_zero_sum(&same).value, int(1));
        let zeros = matrix(&[&[0, 0], &[0, 0]]);
        assert_eq!(solve_zero_sum(&zeros).value, int(0));
    }

    #[test]
    fn matching_pennies() {
        let g = matrix(&[&[1, -1], &[-1, 1]]);
        let s = solve_zero_sum(&g);
        assert_eq!(s.value, int(0));
        assert_eq!(s.row_strategy, vec![frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(PayoffMatrix::new(vec![]), Err(GameError::Empty));
        assert_eq!(PayoffMatrix::new(vec![vec![]]), Err(GameError::Empty));
        assert_eq!(PayoffMatrix::new(vec![vec![int(1)], vec![int(1), int(2)]]), Err(GameError::Ragged));
    }
}
