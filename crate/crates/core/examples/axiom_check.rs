//! Check each axiom on one profile for every method, including the majority
//! rule by flooding with a fixed order.

use shapley_rank::axioms::{check, check_majority, Axiom, MethodId};
use shapley_rank::ballots::BallotProfile;

fn main() {
    let profile = BallotProfile::build(&["a", "b", "c", "d", "e"], &[(4, "a>b>c>d>e"), (3, "e>a>b>c>d")])
        .expect("valid profile");
    let order = profile.parse_order("e>d>c>b>a").expect("valid order");
    for method in MethodId::ALL {
        let mut line = format!("{:<9}", method.tag());
        for axiom in Axiom::ALL {
            let verdict = match axiom {
                Axiom::Majority => check_majority(&profile, &order, method, 60),
                _ => check(axiom, &profile, method),
            };
            line.push_str(&format!(" {}={}", axiom.tag(), if verdict.holds { "yes" } else { "no" }));
            if let Some(w) = verdict.witness.filter(|_| axiom == Axiom::StrongCondorcet) {
                line.push_str(&format!(" [{}]", w.describe(profile.candidates())));
            }
        }
        println!("{line}");
    }
}
