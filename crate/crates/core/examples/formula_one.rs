//! The five title contenders of the 2010 Formula One season, ranked by race
//! points systems and by every method in the library.

use shapley_rank::ballots::parse_profile;
use shapley_rank::classic::{positional, ScoreSystem};
use shapley_rank::report::Report;
use shapley_rank::shapley::rank_by_scores;

fn main() {
    let profile = parse_profile(include_str!("../data/f1_2010.txt")).expect("bundled race data parses");
    let m = profile.m();
    for system in [ScoreSystem::ps1(m), ScoreSystem::ps2(m), ScoreSystem::ps3(m)] {
        let scores = positional(&profile, &system).expect("fitted to m positions");
        println!("{}  {}", scores, rank_by_scores(&scores).render(profile.candidates()));
    }
    println!();
    print!("{}", Report::build(&profile).to_table(3));
}
