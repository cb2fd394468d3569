//! Executable social-choice axioms.
//!
//! Each `check_*` function evaluates one axiom for one ranking method on one
//! profile and returns an [`AxiomVerdict`]; a failing verdict carries a
//! [`Witness`] that can be re-checked independently. [`fuzz`] searches seeded
//! random profiles for a violation and shrinks the first one it finds.
//!
//! Positions in a collective ranking are compared through tie-groups when two
//! candidates are compared within one ranking, and through competition ranks
//! (`1 +` number of candidates strictly above) when one candidate is compared
//! across two rankings.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ballots::{BallotGroup, BallotProfile, Candidate, Outcome, TournamentMatrix};
use crate::charfun::{self, CharFn, Coalition};
use crate::classic;
use crate::shapley::{rank_by_scores, shapley, RankingResult};

/// Every ranking method the checks can drive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MethodId {
    Shapley(CharFn),
    Borda,
    Copeland,
    Maximin,
    Schulze,
}

impl MethodId {
    pub const ALL: [MethodId; 11] = [
        MethodId::Shapley(CharFn::V),
        MethodId::Shapley(CharFn::VPure),
        MethodId::Shapley(CharFn::U),
        MethodId::Shapley(CharFn::V1),
        MethodId::Shapley(CharFn::V2),
        MethodId::Shapley(CharFn::V3),
        MethodId::Shapley(CharFn::V4),
        MethodId::Borda,
        MethodId::Copeland,
        MethodId::Maximin,
        MethodId::Schulze,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            MethodId::Shapley(f) => f.tag(),
            MethodId::Borda => "borda",
            MethodId::Copeland => "copeland",
            MethodId::Maximin => "maximin",
            MethodId::Schulze => "schulze",
        }
    }

    /// Collective ranking of `profile` under this method.
    pub fn rank(self, profile: &BallotProfile) -> RankingResult {
        self.rank_tournament(&profile.tournament_matrix())
    }

    /// Every method here depends on the profile only through its tournament.
    pub fn rank_tournament(self, t: &TournamentMatrix) -> RankingResult {
        match self {
            MethodId::Shapley(f) => rank_by_scores(&shapley(&charfun::build(f, t))),
            MethodId::Borda => rank_by_scores(&classic::borda(t)),
            MethodId::Copeland => rank_by_scores(&classic::copeland(t)),
            MethodId::Maximin => rank_by_scores(&classic::maximin_rule(t)),
            MethodId::Schulze => classic::schulze(t),
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for MethodId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MethodId::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Unanimity,
    Monotonicity,
    Majority,
    Condorcet,
    StrongCondorcet,
}

impl Axiom {
    pub const ALL: [Axiom; 5] =
        [Axiom::Unanimity, Axiom::Monotonicity, Axiom::Majority, Axiom::Condorcet, Axiom::StrongCondorcet];

    pub fn tag(self) -> &'static str {
        match self {
            Axiom::Unanimity => "unanimity",
            Axiom::Monotonicity => "monotonicity",
            Axiom::Majority => "majority",
            Axiom::Condorcet => "condorcet",
            Axiom::StrongCondorcet => "strong-condorcet",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Axiom {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| format!("unknown axiom `{s}`"))
    }
}

/// `w(x)`: candidates `x` beats by strict majority; `l(x)`: candidates
/// beating `x`. Pairwise ties belong to neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairwiseRecord {
    pub candidate: usize,
    pub wins: Coalition,
    pub losses: Coalition,
}

pub fn pairwise_records(t: &TournamentMatrix) -> Vec<PairwiseRecord> {
    let m = t.m();
    (0..m)
        .map(|x| {
            let mut wins = Coalition::EMPTY;
            let mut losses = Coalition::EMPTY;
            for y in (0..m).filter(|&y| y != x) {
                match t.outcome(x, y) {
                    Outcome::Win => wins = wins.with(y),
                    Outcome::Loss => losses = losses.with(y),
                    Outcome::Tie => {}
                }
            }
            PairwiseRecord { candidate: x, wins, losses }
        })
        .collect()
}

/// How the collective ranking must relate to the flooded order for the
/// majority rule to be met.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MajorityCriterion {
    /// The ranking equals the order exactly, with no ties.
    #[default]
    Strict,
    /// The ranking never puts a later candidate of the order strictly above
    /// an earlier one; ties are allowed.
    Coarsening,
}

impl MajorityCriterion {
    fn accepts(self, ranking: &RankingResult, order: &[usize]) -> bool {
        match self {
            MajorityCriterion::Strict => {
                ranking.groups.len() == order.len() && ranking.groups.iter().zip(order).all(|(g, &c)| g == &[c])
            }
            MajorityCriterion::Coarsening => {
                order.windows(2).all(|w| ranking.group_of(w[0]) <= ranking.group_of(w[1]))
            }
        }
    }
}

/// The concrete failure an [`AxiomVerdict`] reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Every ballot ranks `above` over `below`, yet `below` ranks higher.
    Unanimity { above: usize, below: usize },
    /// The Condorcet winner is not alone at the top.
    Condorcet { winner: usize },
    /// Premises hold for `(x, y)` but `y` ranks above `x`.
    StrongCondorcet { x: usize, y: usize },
    /// Promoting one candidate by one position in one ballot of `group`
    /// worsened its competition rank or improved the demoted candidate's.
    Monotonicity {
        group: usize,
        position: usize,
        promoted: usize,
        demoted: usize,
        ranks_before: (usize, usize),
        ranks_after: (usize, usize),
    },
    /// No number of added `order` ballots up to `cap` produced an accepted
    /// ranking. `trajectory[i]` is the ranking after `i + 1` added ballots.
    Majority { order: Vec<usize>, cap: u64, criterion: MajorityCriterion, trajectory: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub profile: BallotProfile,
    pub violation: Violation,
}

impl Witness {
    /// Re-derives the violation from scratch on the stored profile.
    pub fn recheck(&self, method: MethodId) -> bool {
        let p = &self.profile;
        match &self.violation {
            Violation::Unanimity { above, below } => {
                p.tournament_matrix().get(*above, *below) == p.n()
                    && !method.rank(p).weakly_above(*above, *below)
            }
            Violation::Condorcet { winner } => {
                p.tournament_matrix().condorcet_winner() == Some(*winner) && method.rank(p).groups[0] != [*winner]
            }
            Violation::StrongCondorcet { x, y } => {
                strong_condorcet_premise(&p.tournament_matrix(), *x, *y) && !method.rank(p).weakly_above(*x, *y)
            }
            Violation::Monotonicity { group, position, .. } => {
                let before = method.rank(p);
                p.swap_adjacent(*group, *position)
                    .map(|q| monotonicity_failure(p, &before, &method.rank(&q), *group, *position).is_some())
                    .unwrap_or(false)
            }
            Violation::Majority { order, cap, criterion, .. } => {
                !check_majority_with(p, order, method, *cap, *criterion).holds
            }
        }
    }

    pub fn describe(&self, candidates: &[Candidate]) -> String {
        let name = |i: &usize| candidates[*i].as_str().to_string();
        match &self.violation {
            Violation::Unanimity { above, below } => {
                format!("every ballot ranks {} above {}, but the collective ranking does not", name(above), name(below))
            }
            Violation::Condorcet { winner } => format!("Condorcet winner {} is not ranked alone first", name(winner)),
            Violation::StrongCondorcet { x, y } => {
                format!("{} dominates {} pairwise but is ranked below it", name(x), name(y))
            }
            Violation::Monotonicity { group, position, promoted, demoted, ranks_before, ranks_after } => format!(
                "raising {} over {} in one ballot of group {} (position {}) moves ranks {:?} -> {:?}",
                name(promoted),
                name(demoted),
                group,
                position,
                ranks_before,
                ranks_after
            ),
            Violation::Majority { order, cap, .. } => format!(
                "adding up to {} ballots {} never yields that collective ranking",
                cap,
                order.iter().map(name).collect::<Vec<_>>().join(">")
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub method: MethodId,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Least number of added ballots that worked (majority rule only).
    pub minimal_n: Option<u64>,
}

impl AxiomVerdict {
    fn pass(axiom: Axiom, method: MethodId) -> Self {
        Self { axiom, method, holds: true, witness: None, minimal_n: None }
    }

    fn fail(axiom: Axiom, method: MethodId, profile: &BallotProfile, violation: Violation) -> Self {
        Self {
            axiom,
            method,
            holds: false,
            witness: Some(Witness { profile: profile.clone(), violation }),
            minimal_n: None,
        }
    }
}

pub fn check_unanimity(profile: &BallotProfile, method: MethodId) -> AxiomVerdict {
    let t = profile.tournament_matrix();
    let ranking = method.rank_tournament(&t);
    let m = profile.m();
    for above in 0..m {
        for below in (0..m).filter(|&y| y != above) {
            if t.get(above, below) == t.n() && !ranking.weakly_above(above, below) {
                return AxiomVerdict::fail(Axiom::Unanimity, method, profile, Violation::Unanimity { above, below });
            }
        }
    }
    AxiomVerdict::pass(Axiom::Unanimity, method)
}

pub fn check_condorcet(profile: &BallotProfile, method: MethodId) -> AxiomVerdict {
    let t = profile.tournament_matrix();
    match t.condorcet_winner() {
        Some(winner) if method.rank_tournament(&t).groups[0] != [winner] => {
            AxiomVerdict::fail(Axiom::Condorcet, method, profile, Violation::Condorcet { winner })
        }
        _ => AxiomVerdict::pass(Axiom::Condorcet, method),
    }
}

fn strong_condorcet_premise(t: &TournamentMatrix, x: usize, y: usize) -> bool {
    let records = pairwise_records(t);
    let (rx, ry) = (records[x], records[y]);
    ry.wins.is_subset(rx.wins) && rx.losses.is_subset(ry.losses) && t.outcome(x, y) == Outcome::Win
}

pub fn check_strong_condorcet(profile: &BallotProfile, method: MethodId) -> AxiomVerdict {
    let t = profile.tournament_matrix();
    let records = pairwise_records(&t);
    let mut ranking: Option<RankingResult> = None;
    for rx in &records {
        for ry in records.iter().filter(|r| r.candidate != rx.candidate) {
            let (x, y) = (rx.candidate, ry.candidate);
            if !(ry.wins.is_subset(rx.wins) && rx.losses.is_subset(ry.losses) && t.outcome(x, y) == Outcome::Win) {
                continue;
            }
            let r = ranking.get_or_insert_with(|| method.rank_tournament(&t));
            if !r.weakly_above(x, y) {
                return AxiomVerdict::fail(Axiom::StrongCondorcet, method, profile, Violation::StrongCondorcet { x, y });
            }
        }
    }
    AxiomVerdict::pass(Axiom::StrongCondorcet, method)
}

fn monotonicity_failure(
    profile: &BallotProfile,
    before: &RankingResult,
    after: &RankingResult,
    group: usize,
    position: usize,
) -> Option<Violation> {
    let order = &profile.groups()[group].order;
    let (demoted, promoted) = (order[position - 1], order[position]);
    let ranks_before = (before.competition_rank(promoted), before.competition_rank(demoted));
    let ranks_after = (after.competition_rank(promoted), after.competition_rank(demoted));
    (ranks_after.0 > ranks_before.0 || ranks_after.1 < ranks_before.1).then_some(Violation::Monotonicity {
        group,
        position,
        promoted,
        demoted,
        ranks_before,
        ranks_after,
    })
}

/// Tries every single-ballot adjacent transposition of every nonempty group.
pub fn check_monotonicity(profile: &BallotProfile, method: MethodId) -> AxiomVerdict {
    let before = method.rank(profile);
    for (group, g) in profile.groups().iter().enumerate() {
        if g.count == 0 {
            continue;
        }
        for position in 1..profile.m() {
            let perturbed = profile.swap_adjacent(group, position).expect("valid perturbation");
            let after = method.rank(&perturbed);
            if let Some(v) = monotonicity_failure(profile, &before, &after, group, position) {
                return AxiomVerdict::fail(Axiom::Monotonicity, method, profile, v);
            }
        }
    }
    AxiomVerdict::pass(Axiom::Monotonicity, method)
}

/// Searches the least `N <= cap` such that adding `N` ballots of `order`
/// makes the collective ranking equal `order`.
pub fn check_majority(profile: &BallotProfile, order: &[usize], method: MethodId, cap: u64) -> AxiomVerdict {
    check_majority_with(profile, order, method, cap, MajorityCriterion::Strict)
}

pub fn check_majority_with(
    profile: &BallotProfile,
    order: &[usize],
    method: MethodId,
    cap: u64,
    criterion: MajorityCriterion,
) -> AxiomVerdict {
    let mut trajectory = Vec::new();
    for added in 1..=cap {
        let flooded = profile.add_ballots(order, added).expect("order must be a permutation");
        let ranking = method.rank(&flooded);
        if criterion.accepts(&ranking, order) {
            return AxiomVerdict { minimal_n: Some(added), ..AxiomVerdict::pass(Axiom::Majority, method) };
        }
        trajectory.push(ranking.render(profile.candidates()));
    }
    AxiomVerdict::fail(
        Axiom::Majority,
        method,
        profile,
        Violation::Majority { order: order.to_vec(), cap, criterion, trajectory },
    )
}

/// Dispatches the four profile-only axioms. Panics for [`Axiom::Majority`],
/// which also needs an order and a cap.
pub fn check(axiom: Axiom, profile: &BallotProfile, method: MethodId) -> AxiomVerdict {
    match axiom {
        Axiom::Unanimity => check_unanimity(profile, method),
        Axiom::Monotonicity => check_monotonicity(profile, method),
        Axiom::Condorcet => check_condorcet(profile, method),
        Axiom::StrongCondorcet => check_strong_condorcet(profile, method),
        Axiom::Majority => panic!("the majority rule needs an order and a cap; use check_majority"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzConfig {
    pub trials: u64,
    pub seed: u64,
    pub candidates: RangeInclusive<usize>,
    pub voters: RangeInclusive<u64>,
    /// Majority-rule search bound; `None` uses `4 n m + 4`.
    pub cap: Option<u64>,
    pub criterion: MajorityCriterion,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            trials: 1000,
            seed: 42,
            candidates: 3..=5,
            voters: 1..=15,
            cap: None,
            criterion: MajorityCriterion::Strict,
        }
    }
}

/// Outcome of a fuzz run: how many trials ran and the first violation, if
/// any, after shrinking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub trials_run: u64,
    pub finding: Option<FuzzFinding>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzFinding {
    pub trial: u64,
    pub original: BallotProfile,
    pub verdict: AxiomVerdict,
}

/// A random profile of `m` candidates named `a, b, ...` (or `c1, c2, ...`
/// beyond 26) and `n` voters with uniform random strict rankings.
pub fn random_profile(rng: &mut impl Rng, m: usize, n: u64) -> BallotProfile {
    let ids: Vec<String> = (0..m)
        .map(|i| if m <= 26 { ((b'a' + i as u8) as char).to_string() } else { format!("c{}", i + 1) })
        .collect();
    let candidates: Vec<Candidate> = ids.iter().map(|s| Candidate::new(s.as_str()).expect("valid id")).collect();
    let mut groups: Vec<BallotGroup> = Vec::new();
    for _ in 0..n {
        let mut order: Vec<usize> = (0..m).collect();
        order.shuffle(rng);
        match groups.iter_mut().find(|g| g.order == order) {
            Some(g) => g.count += 1,
            None => groups.push(BallotGroup { count: 1, order }),
        }
    }
    BallotProfile::new(candidates, groups).expect("random profile is valid")
}

/// The deterministic random stream of one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

struct TrialCase {
    profile: BallotProfile,
    order: Vec<usize>,
}

fn trial_case(config: &FuzzConfig, trial: u64) -> TrialCase {
    let mut rng = trial_rng(config.seed, trial);
    let m = rng.gen_range(config.candidates.clone());
    let n = rng.gen_range(config.voters.clone()).max(1);
    let profile = random_profile(&mut rng, m, n);
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    TrialCase { profile, order }
}

fn run_check(axiom: Axiom, method: MethodId, profile: &BallotProfile, order: &[usize], config: &FuzzConfig) -> AxiomVerdict {
    match axiom {
        Axiom::Majority => {
            let cap = config.cap.unwrap_or(4 * profile.n() * profile.m() as u64 + 4);
            check_majority_with(profile, order, method, cap, config.criterion)
        }
        _ => check(axiom, profile, method),
    }
}

/// Seeded counterexample search. Trial `i` draws its profile from its own
/// ChaCha stream, so results do not depend on evaluation order.
pub fn fuzz(method: MethodId, axiom: Axiom, config: &FuzzConfig) -> FuzzReport {
    assert!(*config.candidates.start() >= 2 && *config.candidates.end() <= charfun::MAX_CANDIDATES);
    for trial in 0..config.trials {
        let case = trial_case(config, trial);
        let verdict = run_check(axiom, method, &case.profile, &case.order, config);
        if !verdict.holds {
            let verdict = shrink(axiom, method, &case.order, verdict, config);
            return FuzzReport {
                trials_run: trial + 1,
                finding: Some(FuzzFinding { trial, original: case.profile, verdict }),
            };
        }
    }
    FuzzReport { trials_run: config.trials, finding: None }
}

/// Greedy witness minimization: drop whole ballot groups, then lower counts,
/// keeping each step only if the axiom still fails.
fn shrink(axiom: Axiom, method: MethodId, order: &[usize], mut verdict: AxiomVerdict, config: &FuzzConfig) -> AxiomVerdict {
    let profile_of = |v: &AxiomVerdict| v.witness.as_ref().expect("failing verdict").profile.clone();
    let try_candidate = |candidate: Option<BallotProfile>, verdict: &mut AxiomVerdict| -> bool {
        let Some(candidate) = candidate else { return false };
        let next = run_check(axiom, method, &candidate, order, config);
        if next.holds {
            false
        } else {
            *verdict = next;
            true
        }
    };
    let mut progress = true;
    while progress {
        progress = false;
        let current = profile_of(&verdict);
        for g in (0..current.groups().len()).rev() {
            if try_candidate(profile_of(&verdict).without_group(g), &mut verdict) {
                progress = true;
            }
        }
        let current = profile_of(&verdict);
        for g in 0..current.groups().len() {
            let mut count = profile_of(&verdict).groups()[g].count;
            while count > 1 {
                let lower = count / 2;
                if try_candidate(profile_of(&verdict).with_count(g, lower), &mut verdict) {
                    count = lower;
                    progress = true;
                } else if try_candidate(profile_of(&verdict).with_count(g, count - 1), &mut verdict) {
                    count -= 1;
                    progress = true;
                } else {
                    break;
                }
            }
        }
    }
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn ex2(k: u64) -> BallotProfile {
        BallotProfile::build(&["a", "b", "c"], &[(k + 1, "a>b>c"), (k, "b>c>a")]).unwrap()
    }

    fn ex3(k: u64) -> BallotProfile {
        BallotProfile::build(&["a", "b", "c"], &[(k, "a>b>c"), (1, "c>a>b")]).unwrap()
    }

    fn ex4() -> BallotProfile {
        BallotProfile::build(&["a", "b", "c", "d", "e"], &[(4, "a>b>c>d>e"), (3, "e>a>b>c>d")]).unwrap()
    }

    const V: MethodId = MethodId::Shapley(CharFn::V);
    const U: MethodId = MethodId::Shapley(CharFn::U);
    const V2: MethodId = MethodId::Shapley(CharFn::V2);
    const V3: MethodId = MethodId::Shapley(CharFn::V3);
    const V4: MethodId = MethodId::Shapley(CharFn::V4);

    #[test]
    fn pairwise_records_are_consistent() {
        let t = ex4().tournament_matrix();
        let r = pairwise_records(&t);
        assert_eq!(r[0].wins, Coalition::from_members(&[1, 2, 3, 4]));
        assert_eq!(r[4].losses, Coalition::from_members(&[0, 1, 2, 3]));
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(r[x].wins.contains(y), r[y].losses.contains(x));
            }
        }
    }

    #[test]
    fn unanimity_example_2() {
        let p = ex2(1);
        let v = check_unanimity(&p, V2);
        assert!(v.holds);
        let scores = V2.rank(&p).scores.values;
        assert_eq!(scores, vec![frac(11, 6), frac(5, 6), frac(1, 3)]);
        let single = BallotProfile::build(&["a", "b", "c"], &[(1, "b>c>a")]).unwrap();
        for m in MethodId::ALL {
            assert!(check_unanimity(&single, m).holds, "{m}");
        }
    }

    #[test]
    fn condorcet_examples() {
        let verdict = check_condorcet(&ex2(3), V4);
        assert!(!verdict.holds);
        let w = verdict.witness.unwrap();
        assert_eq!(w.violation, Violation::Condorcet { winner: 0 });
        assert!(w.recheck(V4));
        assert_eq!(V4.rank(&ex2(3)).scores.values[..2], [frac(50, 6), frac(53, 6)]);

        let ex1 = crate::ballots::parse_profile(include_str!("../data/example1.txt")).unwrap();
        assert_eq!(ex1.tournament_matrix().condorcet_winner(), None);
        assert!(check_condorcet(&ex1, U).holds);

        let r = V.rank(&ex3(2));
        assert_eq!(r.scores.values, vec![int(1), int(0), int(0)]);
        assert!(check_condorcet(&ex3(2), V).holds);
    }

    #[test]
    fn strong_condorcet_example_4() {
        let verdict = check_strong_condorcet(&ex4(), U);
        assert!(!verdict.holds);
        assert!(verdict.witness.unwrap().recheck(U));
        assert!(check_strong_condorcet(&ex4(), V2).holds);
        let tied = BallotProfile::build(&["a", "b"], &[(1, "a>b"), (1, "b>a")]).unwrap();
        for m in MethodId::ALL {
            assert!(check_strong_condorcet(&tied, m).holds);
        }
    }

    #[test]
    fn monotonicity_examples() {
        assert!(check_monotonicity(&ex4(), V3).holds);
        let single = BallotProfile::build(&["a", "b"], &[(1, "a>b")]).unwrap();
        let swapped = single.swap_adjacent(0, 1).unwrap();
        for m in MethodId::ALL {
            assert_eq!(m.rank(&swapped).groups[0], vec![1], "{m}");
            assert!(check_monotonicity(&single, m).holds, "{m}");
        }
    }

    #[test]
    fn majority_examples() {
        let p = ex3(2);
        let abc = p.parse_order("a>b>c").unwrap();
        let u = check_majority(&p, &abc, U, 100);
        assert!(!u.holds);
        let w = u.witness.unwrap();
        match &w.violation {
            Violation::Majority { trajectory, .. } => {
                assert_eq!(trajectory.len(), 100);
                assert!(trajectory.iter().all(|r| r == "a>c>b"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(w.recheck(U));

        let v2 = check_majority(&p, &abc, V2, 100);
        assert!(v2.holds);
        assert_eq!(v2.minimal_n, Some(1));
    }

    #[test]
    fn flooding_with_v_gives_a_coarsening() {
        let p = ex1_profile();
        let order = p.parse_order("d>b>a>e>c").unwrap();
        let flooded = p.add_ballots(&order, p.n() + 1).unwrap();
        let r = V.rank(&flooded);
        assert_eq!(r.scores.values[3], int(1));
        assert!(MajorityCriterion::Coarsening.accepts(&r, &order));
        assert!(!MajorityCriterion::Strict.accepts(&r, &order));

        let two = BallotProfile::build(&["a", "b"], &[(3, "a>b")]).unwrap();
        let ba = two.parse_order("b>a").unwrap();
        let verdict = check_majority(&two, &ba, V, 10);
        assert_eq!(verdict.minimal_n, Some(4));
    }

    fn ex1_profile() -> BallotProfile {
        crate::ballots::parse_profile(include_str!("../data/example1.txt")).unwrap()
    }

    #[test]
    fn fuzz_is_deterministic_and_finds_v4_condorcet_failure() {
        let config = FuzzConfig { trials: 10_000, seed: 7, ..FuzzConfig::default() };
        let a = fuzz(V4, Axiom::Condorcet, &config);
        let b = fuzz(V4, Axiom::Condorcet, &config);
        assert_eq!(a, b);
        let finding = a.finding.expect("v4 violates the Condorcet property");
        let w = finding.verdict.witness.as_ref().unwrap();
        assert!(w.recheck(V4));
        assert!(w.profile.n() <= finding.original.n());
    }

    #[test]
    fn trial_streams_are_independent_of_order() {
        let config = FuzzConfig::default();
        let a = trial_case(&config, 17).profile;
        let _ = trial_case(&config, 3);
        assert_eq!(trial_case(&config, 17).profile, a);
    }

    #[test]
    fn names_round_trip() {
        for m in MethodId::ALL {
            assert_eq!(m.tag().parse::<MethodId>(), Ok(m));
        }
        for a in Axiom::ALL {
            assert_eq!(a.tag().parse::<Axiom>(), Ok(a));
        }
        assert!("kemeny".parse::<MethodId>().is_err());
    }
}
