//! Print every characteristic function over every coalition.

use shapley_rank::ballots::parse_profile;
use shapley_rank::charfun::{build, CharFn, Coalition};
use shapley_rank::rational::to_exact_string;

fn main() {
    let profile = parse_profile(include_str!("../data/example1.txt")).expect("bundled profile parses");
    let t = profile.tournament_matrix();
    let tables: Vec<_> = CharFn::ALL.iter().map(|&f| build(f, &t)).collect();
    print!("{:<8}", "K");
    for f in CharFn::ALL {
        print!("{:>9}", f.tag());
    }
    println!();
    for k in Coalition::by_size(profile.m()) {
        print!("{:<8}", k.label(profile.candidates()));
        for table in &tables {
            print!("{:>9}", to_exact_string(table.value(k)));
        }
        println!();
    }
    for (f, table) in CharFn::ALL.iter().zip(&tables) {
        if let Some((k, l)) = table.superadditivity_violation() {
            let c = profile.candidates();
            println!("{} is not superadditive: {} and {}", f.tag(), k.label(c), l.label(c));
        }
    }
}
