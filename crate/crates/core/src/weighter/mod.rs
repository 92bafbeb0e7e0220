//! Constructive strong 2-weighting algorithms for random-like hypergraphs,
//! plus the collision classification and matching machinery they build on.

pub mod classes;
pub mod matching;
pub mod repair;
pub mod three;

pub use classes::{classify_collisions, CollisionClasses, PreconditionIssue};
pub use matching::{
    extract_disjoint_perfect_matchings, max_bipartite_matching, tripartite_matching_family,
    BipartiteGraph, MatchingFamily,
};
pub use repair::{repair_pairs, repair_pairs_triples, RepairFailure};
pub use three::{
    strong_weighting_three_uniform, AbortCause, AttemptDiagnostics, ThreeUniformConfig,
    ThreeUniformFailure, ThreeUniformOutcome,
};
