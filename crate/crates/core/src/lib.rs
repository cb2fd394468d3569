//! Ranking candidates of a ranked-ballot election by the Shapley values of
//! cooperative games built from the pairwise tournament, alongside classical
//! rules and checks of the usual social-choice axioms.
//!
//! All arithmetic is exact ([`rational::Rational`]).

pub mod axioms;
pub mod ballots;
pub mod charfun;
pub mod classic;
pub mod cli;
pub mod matrix_game;
pub mod rational;
pub mod report;
pub mod shapley;

pub use axioms::{Axiom, AxiomVerdict, MethodId};
pub use ballots::{parse_profile, BallotProfile, Candidate, TournamentMatrix};
pub use charfun::{CharFn, Coalition, CoalitionTable};
pub use matrix_game::{solve_zero_sum, GameSolution, PayoffMatrix};
pub use rational::Rational;
pub use shapley::{shapley, RankingResult, ScoreVector};
