//! Shapley values and the rankings they induce, for each characteristic
//! function.

use shapley_rank::ballots::parse_profile;
use shapley_rank::charfun::{build, CharFn};
use shapley_rank::rational::to_decimal_string;
use shapley_rank::shapley::{rank_by_scores, shapley, shapley_oracle};

fn main() {
    let profile = parse_profile(include_str!("../data/example1.txt")).expect("bundled profile parses");
    let t = profile.tournament_matrix();
    for f in CharFn::ALL {
        let table = build(f, &t);
        let scores = shapley(&table);
        assert_eq!(shapley_oracle(&table).expect("five players"), scores);
        let shown: String = scores.values.iter().map(|v| format!("{:>9}", to_decimal_string(v, 3))).collect();
        println!("{:<7}{shown}   {}", f.tag(), rank_by_scores(&scores).render(profile.candidates()));
    }
}
