//! Characteristic functions over candidate coalitions.
//!
//! Every function is materialized as a dense table of `2^m` exact values
//! indexed by coalition bitmask. Two of them (`v` and `u`) are values of the
//! constant-sum game in which a coalition and its complement each nominate a
//! common candidate; the rest are closed-form max/min/sum expressions over the
//! tournament and majority matrices.
//!
//! When the complement is empty, a `min` over it is taken to be `n` for
//! vote-count terms and `1` for majority terms, which gives `v(A) = 1`,
//! `u(A) = v1(A) = n`, `v2(A) = m` and `v3(A) = v4(A) = n m`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::ballots::{Candidate, TournamentMatrix};
use crate::matrix_game::{pure_maximin, solve_zero_sum, PayoffMatrix};
use crate::rational::{int, Rational};

/// Largest candidate count accepted by the table builders.
pub const MAX_CANDIDATES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharFn {
    /// Mixed value of the majority game.
    V,
    /// Pure-strategy maximin of the majority game.
    VPure,
    /// Mixed value of the vote-count game.
    U,
    /// Pure-strategy maximin of the vote-count game.
    V1,
    /// Sum of members' worst majority outcomes.
    V2,
    /// Sum of members' worst vote counts among contests they win.
    V3,
    /// Sum of members' worst vote counts.
    V4,
}

impl CharFn {
    pub const ALL: [CharFn; 7] =
        [CharFn::V, CharFn::VPure, CharFn::U, CharFn::V1, CharFn::V2, CharFn::V3, CharFn::V4];

    pub fn tag(self) -> &'static str {
        match self {
            CharFn::V => "v",
            CharFn::VPure => "v_pure",
            CharFn::U => "u",
            CharFn::V1 => "v1",
            CharFn::V2 => "v2",
            CharFn::V3 => "v3",
            CharFn::V4 => "v4",
        }
    }

    /// Value of the grand coalition.
    pub fn grand_value(self, m: usize, n: u64) -> Rational {
        match self {
            CharFn::V | CharFn::VPure => Rational::one(),
            CharFn::U | CharFn::V1 => int(n),
            CharFn::V2 => int(m as u64),
            CharFn::V3 | CharFn::V4 => int(n * m as u64),
        }
    }
}

impl fmt::Display for CharFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for CharFn {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CharFn::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| format!("unknown characteristic function `{s}`"))
    }
}

/// A set of candidate indices as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    pub fn full(m: usize) -> Self {
        Coalition(((1u64 << m) - 1) as u32)
    }

    pub fn singleton(i: usize) -> Self {
        Coalition(1 << i)
    }

    pub fn from_members(members: &[usize]) -> Self {
        Coalition(members.iter().fold(0, |acc, &i| acc | 1 << i))
    }

    /// All `2^m` coalitions in mask order.
    pub fn all(m: usize) -> impl Iterator<Item = Coalition> {
        (0..1u32 << m).map(Coalition)
    }

    /// Coalitions ordered by size, then lexicographically by members.
    pub fn by_size(m: usize) -> Vec<Coalition> {
        let mut all: Vec<Coalition> = Coalition::all(m).collect();
        all.sort_by_key(|c| (c.len(), c.members().collect::<Vec<_>>()));
        all
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        Coalition(self.0 | 1 << i)
    }

    pub fn without(self, i: usize) -> Self {
        Coalition(self.0 & !(1 << i))
    }

    pub fn union(self, other: Self) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, m: usize) -> Self {
        Coalition(!self.0 & Coalition::full(m).0)
    }

    pub fn members(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// `ac` when every id is one character, `{alice,carol}` otherwise; `∅`
    /// for the empty coalition.
    pub fn label(self, candidates: &[Candidate]) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        let ids: Vec<&str> = self.members().map(|i| candidates[i].as_str()).collect();
        if candidates.iter().all(|c| c.as_str().chars().count() == 1) {
            ids.concat()
        } else {
            format!("{{{}}}", ids.join(","))
        }
    }
}

/// A characteristic function materialized over all coalitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalitionTable {
    method: Option<CharFn>,
    m: usize,
    n: u64,
    values: Vec<Rational>,
}

impl CoalitionTable {
    /// A table not tied to a ballot profile (`method` is `None`, `n` is 0).
    /// Panics unless `values.len() == 2^m`.
    pub fn from_values(m: usize, values: Vec<Rational>) -> Self {
        assert_eq!(values.len(), 1 << m, "a table over {m} players needs 2^{m} values");
        Self { method: None, m, n: 0, values }
    }

    pub fn method(&self) -> Option<CharFn> {
        self.method
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn value(&self, k: Coalition) -> &Rational {
        &self.values[k.0 as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn grand_value(&self) -> &Rational {
        self.value(Coalition::full(self.m))
    }

    /// A pair `K ⊂ K ∪ {i}` with `value(K) > value(K ∪ {i})`, if any.
    pub fn monotonicity_violation(&self) -> Option<(Coalition, Coalition)> {
        Coalition::all(self.m).find_map(|k| {
            (0..self.m)
                .filter(|&i| !k.contains(i))
                .find(|&i| self.value(k) > self.value(k.with(i)))
                .map(|i| (k, k.with(i)))
        })
    }

    /// A coalition with `value(K) + value(A \ K) != total`, if any.
    pub fn constant_sum_violation(&self, total: &Rational) -> Option<Coalition> {
        Coalition::all(self.m).find(|&k| &(self.value(k) + self.value(k.complement(self.m))) != total)
    }

    /// Disjoint nonempty `K, L` with `value(K ∪ L) < value(K) + value(L)`, if any.
    pub fn superadditivity_violation(&self) -> Option<(Coalition, Coalition)> {
        for k in Coalition::all(self.m).filter(|k| !k.is_empty()) {
            let rest = k.complement(self.m).bits();
            // Enumerate nonempty subsets of the complement with a larger mask.
            let mut sub = rest;
            while sub != 0 {
                let l = Coalition(sub);
                if l.0 > k.0 && self.value(k.union(l)) < &(self.value(k) + self.value(l)) {
                    return Some((k, l));
                }
                sub = (sub - 1) & rest;
            }
        }
        None
    }
}

/// Whether the mixed-game tables solve each coalition once and derive its
/// complement from the constant-sum identity, or solve both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolveMode {
    #[default]
    Paired,
    Independent,
}

pub fn build(method: CharFn, t: &TournamentMatrix) -> CoalitionTable {
    match method {
        CharFn::V => build_v(t),
        CharFn::VPure => build_v_pure(t),
        CharFn::U => build_u(t),
        CharFn::V1 => build_v1(t),
        CharFn::V2 => build_v2(t),
        CharFn::V3 => build_v3(t),
        CharFn::V4 => build_v4(t),
    }
}

pub fn build_v(t: &TournamentMatrix) -> CoalitionTable {
    build_mixed(CharFn::V, t, SolveMode::Paired)
}

pub fn build_u(t: &TournamentMatrix) -> CoalitionTable {
    build_mixed(CharFn::U, t, SolveMode::Paired)
}

/// `v` or `u` as exact constant-sum game values.
pub fn build_mixed(method: CharFn, t: &TournamentMatrix, mode: SolveMode) -> CoalitionTable {
    assert!(matches!(method, CharFn::V | CharFn::U), "{method} is not a mixed-game table");
    let m = check_size(t);
    let total = method.grand_value(m, t.n());
    let mut values = vec![Rational::zero(); 1 << m];
    values[Coalition::full(m).0 as usize] = total.clone();
    for k in Coalition::all(m).filter(|k| !k.is_empty() && k.len() < m) {
        let paired = mode == SolveMode::Paired;
        if paired && !k.contains(0) {
            continue;
        }
        let game = coalition_game(method, t, k);
        let value = solve_zero_sum(&game).value;
        if paired {
            values[k.complement(m).0 as usize] = &total - &value;
        }
        values[k.0 as usize] = value;
    }
    CoalitionTable { method: Some(method), m, n: t.n(), values }
}

/// The payoff matrix of coalition `k` (rows) against its complement (columns):
/// majority outcomes for `v`/`v_pure`, vote counts otherwise.
pub fn coalition_game(method: CharFn, t: &TournamentMatrix, k: Coalition) -> PayoffMatrix {
    let m = t.m();
    let rows: Vec<usize> = k.members().collect();
    let cols: Vec<usize> = k.complement(m).members().collect();
    let majority = matches!(method, CharFn::V | CharFn::VPure);
    PayoffMatrix::from_fn(rows.len(), cols.len(), |a, b| {
        let (i, j) = (rows[a], cols[b]);
        if majority {
            t.outcome(i, j).value()
        } else {
            int(t.get(i, j))
        }
    })
}

pub fn build_v_pure(t: &TournamentMatrix) -> CoalitionTable {
    build_pure(CharFn::VPure, t)
}

pub fn build_v1(t: &TournamentMatrix) -> CoalitionTable {
    build_pure(CharFn::V1, t)
}

fn build_pure(method: CharFn, t: &TournamentMatrix) -> CoalitionTable {
    let m = check_size(t);
    let full = Coalition::full(m);
    let values = Coalition::all(m)
        .map(|k| {
            if k.is_empty() {
                Rational::zero()
            } else if k == full {
                method.grand_value(m, t.n())
            } else {
                pure_maximin(&coalition_game(method, t, k))
            }
        })
        .collect();
    CoalitionTable { method: Some(method), m, n: t.n(), values }
}

pub fn build_v2(t: &TournamentMatrix) -> CoalitionTable {
    build_additive(CharFn::V2, t, |i, j| t.outcome(i, j).value(), Rational::one())
}

pub fn build_v3(t: &TournamentMatrix) -> CoalitionTable {
    build_additive(CharFn::V3, t, |i, j| int(t.get(i, j)) * t.outcome(i, j).value(), int(t.n()))
}

pub fn build_v4(t: &TournamentMatrix) -> CoalitionTable {
    build_additive(CharFn::V4, t, |i, j| int(t.get(i, j)), int(t.n()))
}

/// `f(K) = Σ_{i∈K} min_{j∉K} term(i, j)`, with `empty_min` for `K = A`.
fn build_additive(
    method: CharFn,
    t: &TournamentMatrix,
    term: impl Fn(usize, usize) -> Rational,
    empty_min: Rational,
) -> CoalitionTable {
    let m = check_size(t);
    let values = Coalition::all(m)
        .map(|k| {
            let outside = k.complement(m);
            k.members()
                .map(|i| {
                    outside
                        .members()
                        .map(|j| term(i, j))
                        .min()
                        .unwrap_or_else(|| empty_min.clone())
                })
                .sum()
        })
        .collect();
    CoalitionTable { method: Some(method), m, n: t.n(), values }
}

fn check_size(t: &TournamentMatrix) -> usize {
    let m = t.m();
    assert!((2..=MAX_CANDIDATES).contains(&m), "coalition tables need 2..={MAX_CANDIDATES} candidates, got {m}");
    m
}
