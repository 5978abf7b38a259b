//! Exact solvers for singleton congestion games in which an adversary,
//! after seeing where the players went, spends a fixed budget attacking the
//! most crowded resources.
//!
//! * [`game`]: instances, load vectors, the attack and all player costs.
//! * [`constant`]: the universal threshold `K ≈ 1.1974` as exact brackets.
//! * [`kapprox`]: incremental solver producing `K`-approximate equilibria.
//! * [`opt`]: the best approximation factor of a given instance.
//! * [`oracle`]: brute-force reference answers for small instances.
//!
//! All arithmetic is exact; see [`rational`].

pub mod constant;
pub mod game;
pub mod kapprox;
pub mod opt;
pub mod oracle;
pub mod rational;

pub use constant::{compute_k, k_lower, k_upper, KConstant, Rounding};
pub use game::{
    attack, binding_deviation, deviation_cost, is_alpha_pne, needed_alpha, resource_cost,
    AttackVector, CostView, Deviation, GameError, Instance, LoadVector, Resource,
};
pub use kapprox::{
    best_response, select_deviator, solve, unhappy_set, EventKind, GuardMode, SolveError,
    SolveTrace, SolverConfig, TraceEvent,
};
pub use opt::{
    best_alpha, candidate_alphas, feasible_load_vector, OptError, OptResult, Shape, ShapeConfig,
};
pub use oracle::{
    enumerate_profiles, oracle_best_additive_epsilon, oracle_best_alpha, oracle_has_exact_pne,
};
pub use rational::{ExtendedRational, Rational};
