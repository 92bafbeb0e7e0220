//! The random hypergraph model H^(r)(n, p): seeded sampling, degree-
//! collision statistics, expectation formulas, and Monte Carlo experiments.

pub mod experiment;
pub mod formulas;
pub mod sample;
pub mod stats;

pub use experiment::{run_experiment, ExperimentReport, StatSummary, Statistic, TrialValues};
pub use formulas::{
    asymptotic_orders, central_binomial, central_binomial_asymptote, expected_x2_asymptotic,
    expected_x2_exact, poisson_reference, sum_binomial_powers, sum_binomial_powers_asymptote,
    AsymptoticOrders,
};
pub use sample::{sample_hypergraph, trial_rng};
pub use stats::{collision_stats, collision_stats_of_degrees, CollisionClass, CollisionStats};
