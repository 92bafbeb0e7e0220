//! Edge weightings of uniform hypergraphs.
//!
//! A weight function on the edges induces a vertex coloring by incident
//! weight sums. This crate decides and constructs *strong* weightings
//! (every edge rainbow) and *weak* weightings (no monochromatic edge):
//!
//! - core types and checkers ([`hypergraph`]);
//! - a pruned exact solver and brute-force reference oracles ([`solver`],
//!   [`oracle`]);
//! - pigeonhole infeasibility certificates for projective-plane blow-ups
//!   ([`certificate`]);
//! - deterministic constructions: finite fields, projective planes,
//!   blow-ups, transversal gadgets, and the strong-2-weighting reduction
//!   from graphs ([`constructions`]);
//! - the random model H^(r)(n, p) with degree-collision statistics and
//!   seeded Monte Carlo experiments ([`random`]);
//! - constructive weighting algorithms for random-like inputs
//!   ([`weighter`]).
//!
//! Parallelism: trials, enumerations and multi-seed harnesses distribute
//! over rayon when the `parallel` feature (default) is enabled; results are
//! collected by index, so output never depends on thread count.

pub mod certificate;
pub mod constructions;
pub mod error;
pub mod format;
pub mod hypergraph;
pub mod oracle;
pub mod parallel;
pub mod random;
pub mod solver;
pub mod weighter;

pub use error::{Error, Result};
pub use hypergraph::{CheckResult, Hypergraph, VertexColoring, Violation, WeightAssignment};
pub use solver::{solve, EdgeOrder, SearchConfig, SolveOutcome, SolveStatus, WeightingMode};
