//! Borda, Copeland, maximin, Schulze and a custom positional system.

use shapley_rank::ballots::parse_profile;
use shapley_rank::classic::{self, ScoreSystem};
use shapley_rank::rational::int;
use shapley_rank::shapley::rank_by_scores;

fn main() {
    let profile = parse_profile(include_str!("../data/example1.txt")).expect("bundled profile parses");
    let t = profile.tournament_matrix();
    let ids = profile.candidates();
    for scores in [classic::borda(&t), classic::copeland(&t), classic::maximin_rule(&t)] {
        println!("{:<9} {}", scores.label, rank_by_scores(&scores).render(ids));
    }
    println!("{:<9} {}", "schulze", classic::schulze(&t).render(ids));

    let plurality = ScoreSystem::new("plurality", [1, 0, 0, 0, 0].into_iter().map(int).collect());
    let scores = classic::positional(&profile, &plurality).expect("five positions");
    println!("{:<9} {}  ({scores})", "plurality", rank_by_scores(&scores).render(ids));
}
