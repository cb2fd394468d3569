//! Classical ranking rules used as baselines: Borda, Copeland, maximin,
//! Schulze (winning votes) and generic positional scoring.

use thiserror::Error;

use crate::ballots::{BallotProfile, TournamentMatrix};
use crate::rational::{int, Rational};
use crate::shapley::{RankingResult, ScoreVector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassicError {
    #[error("score system `{name}` has {len} positions but there are {m} candidates")]
    LengthMismatch { name: String, len: usize, m: usize },
}

/// Points per rank position, best first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreSystem {
    pub name: String,
    pub points: Vec<Rational>,
}

impl ScoreSystem {
    pub fn new(name: impl Into<String>, points: Vec<Rational>) -> Self {
        Self { name: name.into(), points }
    }

    /// A published system cut or zero-padded to `m` positions.
    pub fn fitted(name: &str, published: &[u64], m: usize) -> Self {
        let points = (0..m).map(|i| int(published.get(i).copied().unwrap_or(0))).collect();
        Self::new(name, points)
    }

    /// `m-1, m-2, ..., 0`.
    pub fn borda(m: usize) -> Self {
        Self::new("borda", (0..m).rev().map(|p| int(p as u64)).collect())
    }

    /// Formula One points since 2010.
    pub fn ps1(m: usize) -> Self {
        Self::fitted("PS1", &[25, 18, 15, 12, 10, 8, 6, 4, 2, 1], m)
    }

    /// Formula One points 2003-2009.
    pub fn ps2(m: usize) -> Self {
        Self::fitted("PS2", &[10, 8, 6, 5, 4, 3, 2, 1], m)
    }

    /// Formula One points 1991-2002.
    pub fn ps3(m: usize) -> Self {
        Self::fitted("PS3", &[10, 6, 4, 3, 2, 1], m)
    }
}

/// `Σ_{j≠i} h(i, j)`.
pub fn borda(t: &TournamentMatrix) -> ScoreVector {
    let m = t.m();
    let values = (0..m).map(|i| int((0..m).map(|j| t.get(i, j)).sum::<u64>())).collect();
    ScoreVector::new("borda", values)
}

/// `Σ_{j≠i} H(i, j)`: one point per pairwise win, a half per tie.
pub fn copeland(t: &TournamentMatrix) -> ScoreVector {
    let m = t.m();
    let values = (0..m)
        .map(|i| (0..m).filter(|&j| j != i).map(|j| t.outcome(i, j).value()).sum())
        .collect();
    ScoreVector::new("copeland", values)
}

/// `min_{j≠i} h(i, j)`.
pub fn maximin_rule(t: &TournamentMatrix) -> ScoreVector {
    let m = t.m();
    let values = (0..m)
        .map(|i| int((0..m).filter(|&j| j != i).map(|j| t.get(i, j)).min().unwrap_or(0)))
        .collect();
    ScoreVector::new("maximin", values)
}

/// Strongest-path strengths `P(i, j)` over the winning-votes graph (edge
/// `i → j` of weight `h(i,j)` iff `h(i,j) > h(j,i)`).
pub fn schulze_strengths(t: &TournamentMatrix) -> Vec<Vec<u64>> {
    let m = t.m();
    let mut p = vec![vec![0u64; m]; m];
    for i in 0..m {
        for j in 0..m {
            if i != j && t.get(i, j) > t.get(j, i) {
                p[i][j] = t.get(i, j);
            }
        }
    }
    for k in 0..m {
        for i in 0..m {
            if i == k {
                continue;
            }
            for j in 0..m {
                if j != i && j != k {
                    p[i][j] = p[i][j].max(p[i][k].min(p[k][j]));
                }
            }
        }
    }
    p
}

/// Schulze ranking, scored by the number of candidates each one beats
/// (`P(i,j) > P(j,i)`). This reproduces the beat relation whenever it is a
/// weak order; otherwise candidates it leaves incomparable are still ordered
/// by their counts.
pub fn schulze(t: &TournamentMatrix) -> RankingResult {
    let m = t.m();
    let p = schulze_strengths(t);
    let wins = (0..m).map(|i| int((0..m).filter(|&j| p[i][j] > p[j][i]).count() as u64)).collect();
    crate::shapley::rank_by_scores(&ScoreVector::new("schulze", wins))
}

/// Whether the Schulze beat relation is a strict weak order, so that
/// [`schulze`] loses no information.
pub fn schulze_is_weak_order(t: &TournamentMatrix) -> bool {
    let m = t.m();
    let p = schulze_strengths(t);
    let beats = |i: usize, j: usize| p[i][j] > p[j][i];
    let wins: Vec<usize> = (0..m).map(|i| (0..m).filter(|&j| beats(i, j)).count()).collect();
    (0..m).all(|i| (0..m).all(|j| i == j || beats(i, j) == (wins[i] > wins[j])))
}

/// `Σ_ballots points[rank of i]`.
pub fn positional(profile: &BallotProfile, system: &ScoreSystem) -> Result<ScoreVector, ClassicError> {
    let m = profile.m();
    if system.points.len() != m {
        return Err(ClassicError::LengthMismatch { name: system.name.clone(), len: system.points.len(), m });
    }
    let mut values = vec![int(0); m];
    for g in profile.groups() {
        let count = int(g.count);
        for (pos, &cand) in g.order.iter().enumerate() {
            values[cand] += &system.points[pos] * &count;
        }
    }
    Ok(ScoreVector::new(system.name.clone(), values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapley::rank_by_scores;

    fn ints(xs: &[u64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn ex4() -> BallotProfile {
        BallotProfile::build(&["a", "b", "c", "d", "e"], &[(4, "a>b>c>d>e"), (3, "e>a>b>c>d")]).unwrap()
    }

    #[test]
    fn two_candidates() {
        let p = BallotProfile::build(&["a", "b"], &[(1, "a>b")]).unwrap();
        let t = p.tournament_matrix();
        assert_eq!(borda(&t).values, ints(&[1, 0]));
        assert_eq!(maximin_rule(&t).values, ints(&[1, 0]));
        assert_eq!(copeland(&t).values, ints(&[1, 0]));
    }

    #[test]
    fn example_4_copeland_and_schulze() {
        let p = ex4();
        let t = p.tournament_matrix();
        assert_eq!(copeland(&t).values, ints(&[4, 3, 2, 1, 0]));
        assert!(schulze(&t).matches("a>b>c>d>e", p.candidates()));
        assert_eq!(borda(&t).values, ints(&[25, 18, 11, 4, 12]));
        assert_eq!(positional(&p, &ScoreSystem::borda(5)).unwrap().values, borda(&t).values);
    }

    #[test]
    fn copeland_counts_ties_as_half() {
        let p = BallotProfile::build(&["a", "b", "c"], &[(1, "a>b>c"), (1, "b>a>c")]).unwrap();
        let s = copeland(&p.tournament_matrix());
        assert_eq!(s.values, vec![crate::rational::frac(3, 2), crate::rational::frac(3, 2), int(0)]);
        let r = rank_by_scores(&s);
        assert_eq!(r.groups, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn positional_length_mismatch() {
        let err = positional(&ex4(), &ScoreSystem::new("x", ints(&[1, 0]))).unwrap_err();
        assert_eq!(err, ClassicError::LengthMismatch { name: "x".into(), len: 2, m: 5 });
    }

    #[test]
    fn fitted_systems_pad_and_truncate() {
        assert_eq!(ScoreSystem::ps1(5).points, ints(&[25, 18, 15, 12, 10]));
        assert_eq!(ScoreSystem::ps3(8).points, ints(&[10, 6, 4, 3, 2, 1, 0, 0]));
    }

    #[test]
    fn schulze_cycle_is_resolved() {
        // a>b 5:4, b>c 7:2, c>a 6:3 — the weakest link (a>b) breaks the cycle.
        let p = BallotProfile::build(
            &["a", "b", "c"],
            &[(3, "a>b>c"), (2, "b>c>a"), (2, "c>a>b"), (2, "b>c>a")],
        )
        .unwrap();
        let t = p.tournament_matrix();
        let r = schulze(&t);
        assert!(schulze_is_weak_order(&t));
        assert!(r.is_strict());
        assert_eq!(r.groups.len(), 3);
    }

    #[test]
    fn schulze_partial_order_falls_back_to_counts() {
        // d beats everyone and a beats c, while b ties a and c.
        let p = BallotProfile::build(&["a", "b", "c", "d"], &[(5, "d>b>a>c"), (5, "d>a>c>b")]).unwrap();
        let t = p.tournament_matrix();
        assert!(!schulze_is_weak_order(&t));
        assert_eq!(schulze(&t).render(p.candidates()), "d>a>b=c");
    }
}
