use num_traits::{Signed, Zero};
use proptest::prelude::*;

use shapley_rank::ballots::{parse_profile, BallotGroup, BallotProfile, Candidate, Outcome};
use shapley_rank::charfun::{self, build_mixed, CharFn, Coalition, CoalitionTable, SolveMode};
use shapley_rank::classic::{self, ScoreSystem};
use shapley_rank::matrix_game::{pure_maximin, solve_zero_sum, PayoffMatrix};
use shapley_rank::rational::{frac, int, Rational};
use shapley_rank::shapley::{rank_by_scores, shapley, shapley_oracle, ScoreVector};

fn candidates(m: usize) -> Vec<Candidate> {
    (0..m).map(|i| Candidate::new(((b'a' + i as u8) as char).to_string()).unwrap()).collect()
}

fn groups(m: usize, max_groups: usize) -> impl Strategy<Value = Vec<BallotGroup>> {
    let order = Just((0..m).collect::<Vec<usize>>()).prop_shuffle();
    prop::collection::vec((1u64..=5, order), 1..=max_groups)
        .prop_map(|gs| gs.into_iter().map(|(count, order)| BallotGroup { count, order }).collect())
}

fn profile_with(m: std::ops::RangeInclusive<usize>, max_groups: usize) -> impl Strategy<Value = BallotProfile> {
    m.prop_flat_map(move |m| groups(m, max_groups))
        .prop_map(|gs| BallotProfile::new(candidates(gs[0].order.len()), gs).unwrap())
}

fn profile() -> impl Strategy<Value = BallotProfile> {
    profile_with(2..=5, 6)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=6).prop_map(|(p, q)| frac(p, q))
}

fn matrix() -> impl Strategy<Value = PayoffMatrix> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(rational(), c), r))
        .prop_map(|rows| PayoffMatrix::new(rows).unwrap())
}

fn table(m: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = CoalitionTable> {
    m.prop_flat_map(|m| (Just(m), prop::collection::vec(-40i64..=40, 1 << m)))
        .prop_map(|(m, vals)| CoalitionTable::from_values(m, vals.into_iter().map(int).collect()))
}

fn with_values(t: &CoalitionTable, f: impl Fn(Coalition, &Rational) -> Rational) -> CoalitionTable {
    let values = Coalition::all(t.m()).map(|k| f(k, t.value(k))).collect();
    CoalitionTable::from_values(t.m(), values)
}

/// Widest winning-votes path, by trying every simple path.
fn widest_path(h: &[Vec<u64>], from: usize, to: usize, seen: &mut Vec<bool>, width: u64) -> u64 {
    if from == to {
        return width;
    }
    let mut best = 0;
    for next in 0..h.len() {
        if !seen[next] && h[from][next] > h[next][from] {
            seen[next] = true;
            best = best.max(widest_path(h, next, to, seen, width.min(h[from][next])));
            seen[next] = false;
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pairwise_counts_are_complementary(p in profile()) {
        let t = p.tournament_matrix();
        let maj = t.majority_matrix();
        for i in 0..p.m() {
            for j in (0..p.m()).filter(|&j| j != i) {
                prop_assert_eq!(t.get(i, j) + t.get(j, i), p.n());
                prop_assert_eq!(maj.get(i, j) + maj.get(j, i), int(1));
            }
        }
    }

    #[test]
    fn tallies_add_over_groups(a in groups(4, 4), b in groups(4, 4)) {
        let pa = BallotProfile::new(candidates(4), a.clone()).unwrap();
        let pb = BallotProfile::new(candidates(4), b.clone()).unwrap();
        let merged = BallotProfile::new(candidates(4), a.into_iter().chain(b).collect()).unwrap();
        let (ta, tb, tm) = (pa.tournament_matrix(), pb.tournament_matrix(), merged.tournament_matrix());
        for i in 0..4 {
            for j in 0..4 {
                prop_assert_eq!(tm.get(i, j), ta.get(i, j) + tb.get(i, j));
            }
        }
    }

    #[test]
    fn adjacent_swap_moves_one_pair(p in profile(), g in any::<prop::sample::Index>(), pos in any::<prop::sample::Index>()) {
        let group = g.index(p.groups().len());
        let position = 1 + pos.index(p.m() - 1);
        let order = &p.groups()[group].order;
        let (x, y) = (order[position - 1], order[position]);
        let before = p.tournament_matrix();
        let after = p.swap_adjacent(group, position).unwrap().tournament_matrix();
        prop_assert_eq!(after.n(), before.n());
        for i in 0..p.m() {
            for j in (0..p.m()).filter(|&j| j != i) {
                let expected = if (i, j) == (x, y) {
                    before.get(i, j) - 1
                } else if (i, j) == (y, x) {
                    before.get(i, j) + 1
                } else {
                    before.get(i, j)
                };
                prop_assert_eq!(after.get(i, j), expected);
            }
        }
    }

    #[test]
    fn native_and_soc_round_trip(p in profile()) {
        let native = parse_profile(&p.to_native_string()).unwrap();
        prop_assert!(native.equivalent(&p));
        let soc = parse_profile(&p.to_soc_string()).unwrap();
        prop_assert!(soc.equivalent(&p));
        prop_assert_eq!(parse_profile(&native.to_native_string()).unwrap(), native);
    }

    #[test]
    fn scores_ignore_group_order(p in profile()) {
        let mut reversed = p.groups().to_vec();
        reversed.reverse();
        let q = BallotProfile::new(p.candidates().to_vec(), reversed).unwrap();
        let (tp, tq) = (p.tournament_matrix(), q.tournament_matrix());
        prop_assert_eq!(classic::borda(&tp), classic::borda(&tq));
        prop_assert_eq!(classic::copeland(&tp), classic::copeland(&tq));
        prop_assert_eq!(classic::maximin_rule(&tp), classic::maximin_rule(&tq));
        prop_assert_eq!(
            classic::positional(&p, &ScoreSystem::ps1(p.m())).unwrap(),
            classic::positional(&q, &ScoreSystem::ps1(q.m())).unwrap()
        );
    }

    #[test]
    fn positional_borda_matches_tournament_borda(p in profile()) {
        let via_ballots = classic::positional(&p, &ScoreSystem::borda(p.m())).unwrap();
        prop_assert_eq!(via_ballots.values, classic::borda(&p.tournament_matrix()).values);
    }

    #[test]
    fn condorcet_winner_and_loser_scores(p in profile()) {
        let t = p.tournament_matrix();
        let m = p.m();
        let copeland = classic::copeland(&t);
        if let Some(w) = t.condorcet_winner() {
            prop_assert_eq!(&copeland.values[w], &int(m as u64 - 1));
            prop_assert_eq!(&classic::schulze(&t).groups[0], &vec![w]);
        }
        for l in 0..m {
            if (0..m).filter(|&j| j != l).all(|j| t.outcome(l, j) == Outcome::Loss) {
                prop_assert!(copeland.values[l].is_zero());
            }
        }
    }

    #[test]
    fn schulze_strengths_are_widest_paths(p in profile()) {
        let t = p.tournament_matrix();
        let h = t.rows();
        let strengths = classic::schulze_strengths(&t);
        for i in 0..p.m() {
            for j in (0..p.m()).filter(|&j| j != i) {
                let mut seen = vec![false; p.m()];
                seen[i] = true;
                prop_assert_eq!(strengths[i][j], widest_path(&h, i, j, &mut seen, u64::MAX));
            }
        }
    }

    #[test]
    fn value_of_negated_transpose(g in matrix()) {
        let dual = g.transpose().map(|x| -x);
        prop_assert_eq!(solve_zero_sum(&g).value, -solve_zero_sum(&dual).value);
    }

    #[test]
    fn value_is_bounded(g in matrix()) {
        let value = solve_zero_sum(&g).value;
        let pure = pure_maximin(&g);
        prop_assert!(g.min_entry() <= &pure);
        prop_assert!(pure <= value);
        prop_assert!(&value <= g.max_entry());
    }

    #[test]
    fn raising_payoffs_never_lowers_value(g in matrix(), bumps in prop::collection::vec(0i64..=5, 16)) {
        let mut k = 0;
        let higher = g.map(|x| {
            k += 1;
            x + int(bumps[(k - 1) % bumps.len()])
        });
        prop_assert!(solve_zero_sum(&higher).value >= solve_zero_sum(&g).value);
    }

    #[test]
    fn affine_maps_carry_value(g in matrix(), a in (1i64..=5, 1i64..=3), b in rational()) {
        let alpha = frac(a.0, a.1);
        let moved = g.map(|x| &alpha * x + &b);
        prop_assert_eq!(solve_zero_sum(&moved).value, alpha * solve_zero_sum(&g).value + b);
    }

    #[test]
    fn subset_formula_matches_permutations(t in table(1..=6)) {
        prop_assert_eq!(shapley(&t), shapley_oracle(&t).unwrap());
    }

    #[test]
    fn shapley_is_efficient(t in table(1..=6)) {
        let total: Rational = shapley(&t).values.iter().sum();
        prop_assert_eq!(total, t.grand_value() - t.value(Coalition::EMPTY));
    }

    #[test]
    fn interchangeable_players_get_equal_shares(t in table(2..=5)) {
        // Averaging over the swap of players 0 and 1 makes them interchangeable.
        let swap = |k: Coalition| match (k.contains(0), k.contains(1)) {
            (true, false) => k.without(0).with(1),
            (false, true) => k.without(1).with(0),
            _ => k,
        };
        let sym = with_values(&t, |k, v| v + t.value(swap(k)));
        let s = shapley(&sym);
        prop_assert_eq!(&s.values[0], &s.values[1]);
    }

    #[test]
    fn dummy_player_gets_nothing(t in table(2..=5)) {
        let dummy = with_values(&t, |k, _| t.value(k.without(0)).clone());
        prop_assert!(shapley(&dummy).values[0].is_zero());
    }

    #[test]
    fn favouring_one_player_over_another(
        t in table(2..=5),
        pair in any::<(prop::sample::Index, prop::sample::Index)>(),
        shifts in prop::collection::vec((0i64..=6, 0i64..=6), 32),
    ) {
        let m = t.m();
        let x = pair.0.index(m);
        let y = (x + 1 + pair.1.index(m - 1)) % m;
        let hat = with_values(&t, |k, v| {
            let shift = &shifts[k.bits() as usize % shifts.len()];
            match (k.contains(x), k.contains(y)) {
                (true, false) => v + int(shift.0),
                (false, true) => v - int(shift.1),
                _ => v.clone(),
            }
        });
        let (before, after) = (shapley(&t), shapley(&hat));
        let delta: Vec<Rational> = after.values.iter().zip(&before.values).map(|(a, b)| a - b).collect();
        prop_assert!(!delta[x].is_negative());
        prop_assert!(!delta[y].is_positive());
        for z in (0..m).filter(|&z| z != x && z != y) {
            prop_assert!(delta[y] <= delta[z] && delta[z] <= delta[x]);
        }
    }

    #[test]
    fn ranking_survives_positive_affine_maps(
        raw in prop::collection::vec(-20i64..=20, 1..=8),
        a in (1i64..=9, 1i64..=4),
        b in rational(),
    ) {
        let alpha = frac(a.0, a.1);
        let scores = ScoreVector::new("x", raw.iter().map(|&r| int(r)).collect());
        let moved = ScoreVector::new("x", scores.values.iter().map(|v| &alpha * v + &b).collect());
        prop_assert_eq!(rank_by_scores(&scores).groups, rank_by_scores(&moved).groups);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn coalition_tables_are_monotone_and_constant_sum(p in profile()) {
        let t = p.tournament_matrix();
        for f in CharFn::ALL {
            let table = charfun::build(f, &t);
            prop_assert_eq!(table.monotonicity_violation(), None, "{} not monotone", f.tag());
            prop_assert_eq!(table.grand_value(), &f.grand_value(p.m(), p.n()));
        }
        let v = build_mixed(CharFn::V, &t, SolveMode::Independent);
        let u = build_mixed(CharFn::U, &t, SolveMode::Independent);
        prop_assert_eq!(v.constant_sum_violation(&int(1)), None);
        prop_assert_eq!(u.constant_sum_violation(&int(p.n())), None);
        prop_assert_eq!(&v, &charfun::build(CharFn::V, &t));
        prop_assert_eq!(&u, &charfun::build(CharFn::U, &t));
    }

    #[test]
    fn additive_tables_are_superadditive(p in profile()) {
        let t = p.tournament_matrix();
        for f in [CharFn::V2, CharFn::V3, CharFn::V4] {
            prop_assert_eq!(charfun::build(f, &t).superadditivity_violation(), None, "{}", f.tag());
        }
        if p.n() % 2 == 1 {
            prop_assert_eq!(charfun::build(CharFn::V, &t).superadditivity_violation(), None);
        }
    }

    #[test]
    fn condorcet_winner_takes_all_of_v(p in profile()) {
        let t = p.tournament_matrix();
        if let Some(w) = t.condorcet_winner() {
            let v = charfun::build(CharFn::V, &t);
            for k in Coalition::all(p.m()).filter(|k| !k.is_empty()) {
                prop_assert_eq!(v.value(k), &int(u64::from(k.contains(w))));
            }
            let expected: Vec<Rational> = (0..p.m()).map(|i| int(u64::from(i == w))).collect();
            prop_assert_eq!(shapley(&v).values, expected);
        }
    }
}
