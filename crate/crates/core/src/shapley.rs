//! Shapley values of coalition tables and weak-order rankings of score
//! vectors.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::ballots::Candidate;
use crate::charfun::{Coalition, CoalitionTable};
use crate::rational::{int, Rational};

/// Largest player count for which the permutation oracle is run.
pub const ORACLE_MAX_PLAYERS: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapleyError {
    #[error("permutation enumeration supports at most {ORACLE_MAX_PLAYERS} players, got {0}")]
    TooManyPlayers(usize),
}

/// Exact per-candidate scores in candidate-header order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector {
    pub label: String,
    pub values: Vec<Rational>,
}

impl ScoreVector {
    pub fn new(label: impl Into<String>, values: Vec<Rational>) -> Self {
        Self { label: label.into(), values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Shapley values by the subset formula
/// `φ_x = Σ_{K ∌ x} k!(m-k-1)!/m! · (f(K ∪ x) - f(K))`.
pub fn shapley(table: &CoalitionTable) -> ScoreVector {
    let m = table.m();
    let weights = subset_weights(m);
    let values = (0..m)
        .map(|x| {
            let mut phi = Rational::zero();
            for k in Coalition::all(m).filter(|k| !k.contains(x)) {
                let marginal = table.value(k.with(x)) - table.value(k);
                if !marginal.is_zero() {
                    phi += &weights[k.len()] * marginal;
                }
            }
            phi
        })
        .collect();
    ScoreVector::new(label_of(table), values)
}

/// `k!(m-k-1)!/m!` for `k = 0..m`.
fn subset_weights(m: usize) -> Vec<Rational> {
    let fact: Vec<Rational> = (0..=m)
        .scan(int(1), |acc, i| {
            if i > 0 {
                *acc *= int(i as u64);
            }
            Some(acc.clone())
        })
        .collect();
    (0..m).map(|k| &fact[k] * &fact[m - k - 1] / &fact[m]).collect()
}

/// Shapley values as the average marginal contribution over all `m!` arrival
/// orders. Independent of [`shapley`]; used to cross-check it.
pub fn shapley_oracle(table: &CoalitionTable) -> Result<ScoreVector, ShapleyError> {
    let m = table.m();
    if m > ORACLE_MAX_PLAYERS {
        return Err(ShapleyError::TooManyPlayers(m));
    }
    let mut totals = vec![Rational::zero(); m];
    let mut perm: Vec<usize> = (0..m).collect();
    let mut orders = 0u64;
    // Heap's algorithm, iterative form.
    let mut c = vec![0usize; m];
    let mut visit = |perm: &[usize]| {
        let mut coalition = Coalition::EMPTY;
        for &x in perm {
            let next = coalition.with(x);
            totals[x] += table.value(next) - table.value(coalition);
            coalition = next;
        }
        orders += 1;
    };
    visit(&perm);
    let mut i = 1;
    while i < m {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    let count = int(orders);
    Ok(ScoreVector::new(label_of(table), totals.into_iter().map(|t| t / &count).collect()))
}

fn label_of(table: &CoalitionTable) -> String {
    table.method().map_or_else(|| "custom".to_string(), |m| m.tag().to_string())
}

/// A weak order of candidates: tie-groups from best to worst.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankingResult {
    pub groups: Vec<Vec<usize>>,
    pub scores: ScoreVector,
}

impl RankingResult {
    /// Index of the tie-group holding `candidate` (0 = top).
    pub fn group_of(&self, candidate: usize) -> usize {
        self.groups
            .iter()
            .position(|g| g.contains(&candidate))
            .expect("candidate missing from ranking")
    }

    /// `1 +` the number of candidates ranked strictly above `candidate`.
    pub fn competition_rank(&self, candidate: usize) -> usize {
        1 + self.groups[..self.group_of(candidate)].iter().map(Vec::len).sum::<usize>()
    }

    /// Whether `x` is ranked at least as high as `y`.
    pub fn weakly_above(&self, x: usize, y: usize) -> bool {
        self.group_of(x) <= self.group_of(y)
    }

    pub fn is_strict(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }

    /// Renders `e=c>a>b=d`; ties listed in header order.
    pub fn render(&self, candidates: &[Candidate]) -> String {
        render_groups(&self.groups, candidates)
    }

    /// Compares with a weak order written as `e=c>a>b=d`, ignoring the order
    /// of candidates inside a tie.
    pub fn matches(&self, expected: &str, candidates: &[Candidate]) -> bool {
        parse_weak_order(expected, candidates).is_some_and(|g| normalize(&g) == normalize(&self.groups))
    }
}

fn normalize(groups: &[Vec<usize>]) -> Vec<Vec<usize>> {
    groups
        .iter()
        .map(|g| {
            let mut g = g.clone();
            g.sort_unstable();
            g
        })
        .collect()
}

pub fn render_groups(groups: &[Vec<usize>], candidates: &[Candidate]) -> String {
    groups
        .iter()
        .map(|g| g.iter().map(|&i| candidates[i].as_str()).collect::<Vec<_>>().join("="))
        .collect::<Vec<_>>()
        .join(">")
}

/// Parses `e=c>a>b=d`; `None` unless it is a weak order over all candidates.
pub fn parse_weak_order(text: &str, candidates: &[Candidate]) -> Option<Vec<Vec<usize>>> {
    let mut seen = vec![false; candidates.len()];
    let mut groups = Vec::new();
    for part in text.split('>') {
        let mut group = Vec::new();
        for id in part.split('=') {
            let idx = candidates.iter().position(|c| c.as_str() == id.trim())?;
            if std::mem::replace(&mut seen[idx], true) {
                return None;
            }
            group.push(idx);
        }
        groups.push(group);
    }
    seen.iter().all(|&s| s).then_some(groups)
}

/// Sorts candidates by descending score; exactly equal scores share a group.
pub fn rank_by_scores(scores: &ScoreVector) -> RankingResult {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores.values[b].cmp(&scores.values[a]));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if scores.values[g[0]] == scores.values[i] => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    RankingResult { groups, scores: scores.clone() }
}

impl fmt::Display for ScoreVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(crate::rational::to_exact_string).collect();
        write!(f, "{}: ({})", self.label, parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn cands(ids: &[&str]) -> Vec<Candidate> {
        ids.iter().map(|s| Candidate::new(*s).unwrap()).collect()
    }

    #[test]
    fn dummy_player() {
        let t = CoalitionTable::from_values(2, vec![int(0), int(1), int(0), int(1)]);
        let s = shapley(&t);
        assert_eq!(s.values, vec![int(1), int(0)]);
        assert_eq!(shapley_oracle(&t).unwrap(), s);
    }

    #[test]
    fn symmetric_pair() {
        let t = CoalitionTable::from_values(2, vec![int(0), frac(1, 2), frac(1, 2), int(1)]);
        assert_eq!(shapley_oracle(&t).unwrap().values, vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(shapley(&t).values, vec![frac(1, 2), frac(1, 2)]);
    }

    #[test]
    fn oracle_refuses_large_games() {
        let t = CoalitionTable::from_values(9, vec![int(0); 512]);
        assert_eq!(shapley_oracle(&t), Err(ShapleyError::TooManyPlayers(9)));
    }

    #[test]
    fn weights_sum_to_one_per_player() {
        // Each player appears in C(m-1, k) coalitions of size k.
        let w = subset_weights(5);
        let binom = [1u64, 4, 6, 4, 1];
        let total: Rational = w.iter().zip(binom).map(|(w, b)| w * int(b)).sum();
        assert_eq!(total, int(1));
    }

    #[test]
    fn ranking_groups_ties() {
        let c = cands(&["a", "b", "c", "d", "e"]);
        let s = ScoreVector::new("v", vec![frac(1, 6), frac(1, 12), frac(1, 3), frac(1, 12), frac(1, 3)]);
        let r = rank_by_scores(&s);
        assert_eq!(r.render(&c), "c=e>a>b=d");
        assert!(r.matches("e=c>a>b=d", &c));
        assert!(!r.matches("e>c>a>b=d", &c));
        assert_eq!(r.competition_rank(0), 3);
        assert_eq!(r.competition_rank(3), 4);
        assert_eq!(r.group_of(3), 2);

        let flat = rank_by_scores(&ScoreVector::new("x", vec![int(2); 4]));
        assert_eq!(flat.groups, vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn parse_weak_order_requires_all_candidates() {
        let c = cands(&["a", "b", "c"]);
        assert_eq!(parse_weak_order("b>a=c", &c), Some(vec![vec![1], vec![0, 2]]));
        assert_eq!(parse_weak_order("b>a", &c), None);
        assert_eq!(parse_weak_order("b>a>a", &c), None);
        assert_eq!(parse_weak_order("b>a>x", &c), None);
    }
}
