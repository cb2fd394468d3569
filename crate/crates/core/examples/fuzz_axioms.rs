//! Seeded counterexample search for every axiom under one method.
//!
//! `cargo run --release --example fuzz_axioms -- u 500`

use std::time::Instant;

use shapley_rank::axioms::{fuzz, Axiom, FuzzConfig, MethodId};

fn main() {
    let mut args = std::env::args().skip(1);
    let method: MethodId = args.next().as_deref().unwrap_or("v2").parse().expect("method");
    let trials = args.next().map_or(200, |t| t.parse().expect("trial count"));
    let config = FuzzConfig { trials, ..FuzzConfig::default() };
    for axiom in Axiom::ALL {
        let start = Instant::now();
        let report = fuzz(method, axiom, &config);
        let outcome = match &report.finding {
            None => "no violation".to_string(),
            Some(f) => {
                let w = f.verdict.witness.as_ref().expect("failing verdict has a witness");
                format!("violation at trial {}: {}\n{}", f.trial, w.describe(w.profile.candidates()), w.profile)
            }
        };
        println!(
            "{} / {}: {} trials, {} ({:.2?})",
            method.tag(),
            axiom.tag(),
            report.trials_run,
            outcome,
            start.elapsed()
        );
    }
}
