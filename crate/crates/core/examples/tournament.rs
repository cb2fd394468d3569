//! Parse a ballot profile and print its pairwise tallies and majority outcomes.
//!
//! `cargo run --example tournament -- path/to/profile.txt` (defaults to the
//! bundled 45-voter election).

use shapley_rank::ballots::{parse_profile, Outcome};

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).expect("readable profile"),
        None => include_str!("../data/example1.txt").to_string(),
    };
    let profile = parse_profile(&text).unwrap_or_else(|e| panic!("{e}"));
    let t = profile.tournament_matrix();
    let ids = profile.candidates();
    println!("{} voters, {} candidates", profile.n(), profile.m());
    for i in 0..t.m() {
        for j in (i + 1)..t.m() {
            let verdict = match t.outcome(i, j) {
                Outcome::Win => "beats",
                Outcome::Tie => "ties",
                Outcome::Loss => "loses to",
            };
            println!("{} {} {} ({}:{})", ids[i], verdict, ids[j], t.get(i, j), t.get(j, i));
        }
    }
    match t.condorcet_winner() {
        Some(w) => println!("Condorcet winner: {}", ids[w]),
        None => println!("no Condorcet winner"),
    }
}
