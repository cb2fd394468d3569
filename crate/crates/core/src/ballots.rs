//! Ranked-ballot profiles, their pairwise tallies and the perturbations
//! used by the axiom checks.
//!
//! Two text formats are understood:
//!
//! * the native format
//!   ```text
//!   # comment
//!   candidates: a,b,c
//!   2: a>b>c
//!   1: c > a > b
//!   ```
//! * PrefLib "strict order, complete" (`soc`) files, where
//!   `# ALTERNATIVE NAME k: name` lines name the alternatives and body lines
//!   read `count: i1,i2,...` with 1-based alternative numbers.
//!
//! Only complete strict rankings are accepted.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::rational::{frac, int, Rational};

/// A candidate id: nonempty, no whitespace, none of `, > : # { }`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Candidate(String);

impl Candidate {
    pub fn new(id: impl Into<String>) -> Result<Self, ParseErrorKind> {
        let id = id.into();
        if id.is_empty() || id.chars().any(|c| c.is_whitespace() || ",>:#{}".contains(c)) {
            return Err(ParseErrorKind::InvalidCandidateId(id));
        }
        Ok(Candidate(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `count` identical ballots ranking candidates by `order` (indices into the
/// profile's candidate list, most preferred first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BallotGroup {
    pub count: u64,
    pub order: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing `candidates:` header")]
    MissingHeader,
    #[error("empty candidate set")]
    EmptyCandidateSet,
    #[error("at least two candidates are required, found {0}")]
    TooFewCandidates(usize),
    #[error("invalid candidate id `{0}`")]
    InvalidCandidateId(String),
    #[error("duplicate candidate `{0}`")]
    DuplicateCandidate(String),
    #[error("unknown candidate `{0}`")]
    UnknownCandidate(String),
    #[error("invalid ballot count `{0}`")]
    InvalidCount(String),
    #[error("ranking is not a permutation of the candidates: {0}")]
    NotAPermutation(String),
    #[error("ties and partial rankings are not supported")]
    WeakOrder,
    #[error("unsupported PrefLib data type `{0}` (only soc)")]
    UnsupportedDataType(String),
    #[error("malformed line `{0}`")]
    Malformed(String),
    #[error("profile has no voters")]
    NoVoters,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Errors of profile constructors and perturbations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProfileError {
    #[error(transparent)]
    Invalid(#[from] ParseErrorKind),
    #[error("ballot group {0} does not exist")]
    InvalidGroup(usize),
    #[error("position {position} is outside 1..{max}")]
    InvalidPosition { position: usize, max: usize },
    #[error("ballot group {0} has no ballots to modify")]
    EmptyGroup(usize),
    #[error("the number of added ballots must be positive")]
    ZeroBallots,
}

/// Candidates plus weighted strict rankings.
///
/// Invariants: `m >= 2`, every order is a permutation of `0..m`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotProfile {
    candidates: Vec<Candidate>,
    groups: Vec<BallotGroup>,
}

impl BallotProfile {
    pub fn new(candidates: Vec<Candidate>, groups: Vec<BallotGroup>) -> Result<Self, ParseErrorKind> {
        validate_candidates(&candidates)?;
        let m = candidates.len();
        for group in &groups {
            check_permutation(&group.order, m).map_err(ParseErrorKind::NotAPermutation)?;
        }
        if groups.iter().map(|g| g.count).sum::<u64>() == 0 {
            return Err(ParseErrorKind::NoVoters);
        }
        Ok(Self { candidates, groups })
    }

    /// Convenience constructor: `build(&["a", "b"], &[(2, "a>b"), (1, "b>a")])`.
    pub fn build(candidates: &[&str], groups: &[(u64, &str)]) -> Result<Self, ParseErrorKind> {
        let candidates = candidates
            .iter()
            .map(|c| Candidate::new(*c))
            .collect::<Result<Vec<_>, _>>()?;
        validate_candidates(&candidates)?;
        let groups = groups
            .iter()
            .map(|(count, order)| {
                Ok(BallotGroup {
                    count: *count,
                    order: resolve_order(&candidates, order.split('>'))?,
                })
            })
            .collect::<Result<Vec<_>, ParseErrorKind>>()?;
        Self::new(candidates, groups)
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn groups(&self) -> &[BallotGroup] {
        &self.groups
    }

    pub fn m(&self) -> usize {
        self.candidates.len()
    }

    /// Total number of voters.
    pub fn n(&self) -> u64 {
        self.groups.iter().map(|g| g.count).sum()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.candidates.iter().position(|c| c.as_str() == id)
    }

    /// Parses `a>b>c` (whitespace allowed) into candidate indices.
    pub fn parse_order(&self, text: &str) -> Result<Vec<usize>, ParseErrorKind> {
        resolve_order(&self.candidates, text.split('>'))
    }

    pub fn render_order(&self, order: &[usize]) -> String {
        order
            .iter()
            .map(|&i| self.candidates[i].as_str())
            .collect::<Vec<_>>()
            .join(">")
    }

    /// Same profile with identical orders merged, zero groups dropped and
    /// groups sorted; two profiles are equivalent iff their canonical forms
    /// are equal.
    pub fn canonical(&self) -> Self {
        let mut merged: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for g in &self.groups {
            if g.count > 0 {
                *merged.entry(g.order.clone()).or_default() += g.count;
            }
        }
        Self {
            candidates: self.candidates.clone(),
            groups: merged
                .into_iter()
                .map(|(order, count)| BallotGroup { count, order })
                .collect(),
        }
    }

    pub fn equivalent(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Moves one ballot of `group` out of that group with the candidates at
    /// 1-based positions `position` and `position + 1` exchanged. The group
    /// keeps `count - 1` ballots (possibly 0); the modified ballot is merged
    /// into an identical group or appended.
    pub fn swap_adjacent(&self, group: usize, position: usize) -> Result<Self, ProfileError> {
        let m = self.m();
        let source = self.groups.get(group).ok_or(ProfileError::InvalidGroup(group))?;
        if position == 0 || position >= m {
            return Err(ProfileError::InvalidPosition { position, max: m - 1 });
        }
        if source.count == 0 {
            return Err(ProfileError::EmptyGroup(group));
        }
        let mut order = source.order.clone();
        order.swap(position - 1, position);
        let mut groups = self.groups.clone();
        groups[group].count -= 1;
        merge_group(&mut groups, order, 1);
        Ok(Self { candidates: self.candidates.clone(), groups })
    }

    /// Adds `k >= 1` ballots with the given order.
    pub fn add_ballots(&self, order: &[usize], k: u64) -> Result<Self, ProfileError> {
        if k == 0 {
            return Err(ProfileError::ZeroBallots);
        }
        check_permutation(order, self.m()).map_err(ParseErrorKind::NotAPermutation)?;
        let mut groups = self.groups.clone();
        merge_group(&mut groups, order.to_vec(), k);
        Ok(Self { candidates: self.candidates.clone(), groups })
    }

    /// Profile with `group` removed; `None` if that would leave no voters.
    pub fn without_group(&self, group: usize) -> Option<Self> {
        let mut groups = self.groups.clone();
        if group >= groups.len() {
            return None;
        }
        groups.remove(group);
        Self::new(self.candidates.clone(), groups).ok()
    }

    /// Profile with the count of `group` replaced.
    pub fn with_count(&self, group: usize, count: u64) -> Option<Self> {
        let mut groups = self.groups.clone();
        groups.get_mut(group)?.count = count;
        Self::new(self.candidates.clone(), groups).ok()
    }

    /// Native text format.
    pub fn to_native_string(&self) -> String {
        let mut out = String::new();
        let ids: Vec<&str> = self.candidates.iter().map(|c| c.as_str()).collect();
        out.push_str(&format!("candidates: {}\n", ids.join(",")));
        for g in &self.groups {
            out.push_str(&format!("{}: {}\n", g.count, self.render_order(&g.order)));
        }
        out
    }

    /// PrefLib `soc` text.
    pub fn to_soc_string(&self) -> String {
        let mut out = String::new();
        out.push_str("# FILE NAME: profile.soc\n");
        out.push_str("# DATA TYPE: soc\n");
        out.push_str(&format!("# NUMBER ALTERNATIVES: {}\n", self.m()));
        out.push_str(&format!("# NUMBER VOTERS: {}\n", self.n()));
        out.push_str(&format!("# NUMBER UNIQUE ORDERS: {}\n", self.groups.len()));
        for (i, c) in self.candidates.iter().enumerate() {
            out.push_str(&format!("# ALTERNATIVE NAME {}: {}\n", i + 1, c));
        }
        for g in &self.groups {
            let order: Vec<String> = g.order.iter().map(|i| (i + 1).to_string()).collect();
            out.push_str(&format!("{}: {}\n", g.count, order.join(",")));
        }
        out
    }

    /// Pairwise tallies `h(i, j)`.
    pub fn tournament_matrix(&self) -> TournamentMatrix {
        let m = self.m();
        let mut counts = vec![0u64; m * m];
        for g in self.groups.iter().filter(|g| g.count > 0) {
            for (pos, &i) in g.order.iter().enumerate() {
                for &j in &g.order[pos + 1..] {
                    counts[i * m + j] += g.count;
                }
            }
        }
        TournamentMatrix { candidates: self.candidates.clone(), n: self.n(), counts }
    }
}

impl fmt::Display for BallotProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_native_string())
    }
}

fn merge_group(groups: &mut Vec<BallotGroup>, order: Vec<usize>, count: u64) {
    match groups.iter_mut().find(|g| g.order == order) {
        Some(g) => g.count += count,
        None => groups.push(BallotGroup { count, order }),
    }
}

fn validate_candidates(candidates: &[Candidate]) -> Result<(), ParseErrorKind> {
    match candidates.len() {
        0 => return Err(ParseErrorKind::EmptyCandidateSet),
        1 => return Err(ParseErrorKind::TooFewCandidates(1)),
        _ => {}
    }
    for (i, c) in candidates.iter().enumerate() {
        if candidates[..i].contains(c) {
            return Err(ParseErrorKind::DuplicateCandidate(c.0.clone()));
        }
    }
    Ok(())
}

fn check_permutation(order: &[usize], m: usize) -> Result<(), String> {
    if order.len() != m {
        return Err(format!("ranks {} of {} candidates", order.len(), m));
    }
    let mut seen = vec![false; m];
    for &i in order {
        if i >= m {
            return Err(format!("candidate index {i} out of range"));
        }
        if std::mem::replace(&mut seen[i], true) {
            return Err(format!("candidate index {i} ranked twice"));
        }
    }
    Ok(())
}

fn resolve_order<'a>(
    candidates: &[Candidate],
    tokens: impl Iterator<Item = &'a str>,
) -> Result<Vec<usize>, ParseErrorKind> {
    let mut order = Vec::with_capacity(candidates.len());
    for token in tokens {
        let token = token.trim();
        if token.is_empty() {
            return Err(ParseErrorKind::NotAPermutation("empty rank position".into()));
        }
        let idx = candidates
            .iter()
            .position(|c| c.as_str() == token)
            .ok_or_else(|| ParseErrorKind::UnknownCandidate(token.to_string()))?;
        if order.contains(&idx) {
            return Err(ParseErrorKind::NotAPermutation(format!("`{token}` ranked twice")));
        }
        order.push(idx);
    }
    if order.len() != candidates.len() {
        return Err(ParseErrorKind::NotAPermutation(format!(
            "ranks {} of {} candidates",
            order.len(),
            candidates.len()
        )));
    }
    Ok(order)
}

fn parse_count(text: &str) -> Result<u64, ParseErrorKind> {
    let t = text.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseErrorKind::InvalidCount(t.to_string()));
    }
    t.parse().map_err(|_| ParseErrorKind::InvalidCount(t.to_string()))
}

/// Parses a profile in the native or PrefLib `soc` format.
pub fn parse_profile(text: &str) -> Result<BallotProfile, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    let is_native = first.is_some_and(|l| {
        l.split_once(':').is_some_and(|(k, _)| k.trim() == "candidates")
    });
    let looks_soc = text.lines().any(|l| {
        let l = l.trim_start();
        l.starts_with("# ALTERNATIVE NAME") || l.starts_with("# DATA TYPE") || l.starts_with("# NUMBER ALTERNATIVES")
    });
    if !is_native && looks_soc {
        parse_soc(text)
    } else {
        parse_native(text)
    }
}

fn parse_native(text: &str) -> Result<BallotProfile, ParseError> {
    let mut candidates: Option<Vec<Candidate>> = None;
    let mut groups = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let at = |kind| ParseError { line: line_no, kind };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return Err(at(ParseErrorKind::Malformed(line.to_string())));
        };
        match &candidates {
            None => {
                if key.trim() != "candidates" {
                    return Err(at(ParseErrorKind::MissingHeader));
                }
                let ids: Vec<&str> = rest.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
                let parsed = ids
                    .iter()
                    .map(|id| Candidate::new(*id))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(at)?;
                validate_candidates(&parsed).map_err(at)?;
                candidates = Some(parsed);
            }
            Some(cands) => {
                let count = parse_count(key).map_err(at)?;
                let order = resolve_order(cands, rest.split('>')).map_err(at)?;
                groups.push(BallotGroup { count, order });
            }
        }
    }
    let candidates = candidates.ok_or(ParseError { line: last_line.max(1), kind: ParseErrorKind::MissingHeader })?;
    BallotProfile::new(candidates, groups).map_err(|kind| ParseError { line: last_line, kind })
}

fn parse_soc(text: &str) -> Result<BallotProfile, ParseError> {
    let mut declared: Option<usize> = None;
    let mut names: BTreeMap<usize, (usize, String)> = BTreeMap::new();
    let mut body: Vec<(usize, &str)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let at = |kind| ParseError { line: line_no, kind };
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(meta) = line.strip_prefix('#') {
            let Some((key, value)) = meta.split_once(':') else { continue };
            let key = key.trim();
            let value = value.trim();
            if key == "DATA TYPE" && value != "soc" {
                return Err(at(ParseErrorKind::UnsupportedDataType(value.to_string())));
            } else if key == "NUMBER ALTERNATIVES" {
                declared = Some(parse_count(value).map_err(at)? as usize);
            } else if let Some(num) = key.strip_prefix("ALTERNATIVE NAME") {
                let num = parse_count(num).map_err(at)? as usize;
                names.insert(num, (line_no, value.to_string()));
            }
            continue;
        }
        body.push((line_no, line));
    }
    let m = declared.unwrap_or(names.len());
    if m == 0 {
        return Err(ParseError { line: last_line.max(1), kind: ParseErrorKind::EmptyCandidateSet });
    }
    let mut candidates = Vec::with_capacity(m);
    for k in 1..=m {
        let (line, id) = match names.get(&k) {
            Some((line, name)) => {
                let sanitized: String = name
                    .chars()
                    .map(|c| if c.is_whitespace() || ",>:#{}".contains(c) { '_' } else { c })
                    .collect();
                (*line, sanitized)
            }
            None => (0, k.to_string()),
        };
        candidates.push(Candidate::new(id).map_err(|kind| ParseError { line: line.max(1), kind })?);
    }
    validate_candidates(&candidates).map_err(|kind| ParseError { line: 1, kind })?;
    let mut groups = Vec::new();
    for (line_no, line) in body {
        let at = |kind| ParseError { line: line_no, kind };
        if line.contains('{') || line.contains('}') {
            return Err(at(ParseErrorKind::WeakOrder));
        }
        let Some((count, rest)) = line.split_once(':') else {
            return Err(at(ParseErrorKind::Malformed(line.to_string())));
        };
        let count = parse_count(count).map_err(at)?;
        let mut order = Vec::with_capacity(m);
        for token in rest.split(',') {
            let token = token.trim();
            let k: usize = token
                .parse()
                .ok()
                .filter(|k| (1..=m).contains(k))
                .ok_or_else(|| at(ParseErrorKind::UnknownCandidate(token.to_string())))?;
            order.push(k - 1);
        }
        check_permutation(&order, m).map_err(|msg| at(ParseErrorKind::NotAPermutation(msg)))?;
        groups.push(BallotGroup { count, order });
    }
    BallotProfile::new(candidates, groups).map_err(|kind| ParseError { line: last_line, kind })
}

/// Pairwise tallies: `h(i, j)` ballots rank `i` above `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TournamentMatrix {
    candidates: Vec<Candidate>,
    n: u64,
    counts: Vec<u64>,
}

impl TournamentMatrix {
    /// Builds a matrix from explicit rows; the diagonal is ignored.
    /// Fails unless `h(i,j) + h(j,i) == n` off the diagonal.
    pub fn from_rows(candidates: Vec<Candidate>, n: u64, rows: &[Vec<u64>]) -> Result<Self, ParseErrorKind> {
        validate_candidates(&candidates)?;
        let m = candidates.len();
        if rows.len() != m || rows.iter().any(|r| r.len() != m) {
            return Err(ParseErrorKind::Malformed(format!("tournament matrix must be {m}x{m}")));
        }
        let mut counts = vec![0u64; m * m];
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    if rows[i][j] + rows[j][i] != n {
                        return Err(ParseErrorKind::Malformed(format!(
                            "h({0},{1}) + h({1},{0}) != {n}",
                            candidates[i], candidates[j]
                        )));
                    }
                    counts[i * m + j] = rows[i][j];
                }
            }
        }
        Ok(Self { candidates, n, counts })
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn m(&self) -> usize {
        self.candidates.len()
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `h(i, j)`; zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.m() + j]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        let m = self.m();
        (0..m).map(|i| (0..m).map(|j| self.get(i, j)).collect()).collect()
    }

    /// Pairwise outcome of `i` against `j`, decided by exact comparison of
    /// `2 h(i,j)` with `n`.
    pub fn outcome(&self, i: usize, j: usize) -> Outcome {
        match (2 * self.get(i, j)).cmp(&self.n) {
            std::cmp::Ordering::Greater => Outcome::Win,
            std::cmp::Ordering::Equal => Outcome::Tie,
            std::cmp::Ordering::Less => Outcome::Loss,
        }
    }

    pub fn majority_matrix(&self) -> MajorityMatrix {
        let m = self.m();
        let mut outcomes = vec![Outcome::Tie; m * m];
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    outcomes[i * m + j] = self.outcome(i, j);
                }
            }
        }
        MajorityMatrix { m, outcomes }
    }

    /// Index of the candidate beating every other one by a strict majority.
    pub fn condorcet_winner(&self) -> Option<usize> {
        (0..self.m()).find(|&x| (0..self.m()).all(|y| y == x || self.outcome(x, y) == Outcome::Win))
    }
}

/// A pairwise contest result: `I(h(i,j) - n/2)` is 1, 1/2 or 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Loss,
    Tie,
    Win,
}

impl Outcome {
    pub fn value(self) -> Rational {
        match self {
            Outcome::Loss => int(0),
            Outcome::Tie => frac(1, 2),
            Outcome::Win => int(1),
        }
    }
}

/// `H(i, j)` in {0, 1/2, 1}; the diagonal is unused (stored as a tie).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajorityMatrix {
    m: usize,
    outcomes: Vec<Outcome>,
}

impl MajorityMatrix {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn outcome(&self, i: usize, j: usize) -> Outcome {
        self.outcomes[i * self.m + j]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.outcome(i, j).value()
    }
}
