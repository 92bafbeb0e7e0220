//! Classification of equal-degree collision classes against the
//! preconditions of the pair/triple repair algorithms.

use serde::Serialize;

use crate::hypergraph::Hypergraph;
use crate::random::stats::{collision_stats_of_degrees, CollisionStats};

/// Informational precondition findings; the repairs make their own
/// (stricter) go/no-go decisions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PreconditionIssue {
    /// Some equal-degree class has four or more vertices.
    QuadPresent,
    /// A (d, d, d, d+1) pattern exists: an equal-degree triple together
    /// with a vertex one degree above it.
    OffsetQuadPresent,
    /// An equal-degree triple exists (disqualifies the pairs-only repair).
    TriplePresent,
    /// More pairs than the high-probability bound log n... sqrt(n) log n.
    PairCountAboveBound,
    /// More triples than the high-probability bound log n.
    TripleCountAboveBound,
}

/// Equal-degree classes split into pairs and triples, with the flags the
/// repair algorithms key on. Classes are maximal, hence automatically
/// vertex-disjoint.
#[derive(Clone, Debug, Serialize)]
pub struct CollisionClasses {
    /// Classes of size exactly 2, as (u, v) with u < v, ascending by degree.
    pub pairs: Vec<(u32, u32)>,
    /// Classes of size exactly 3, ascending by degree.
    pub triples: Vec<(u32, u32, u32)>,
    /// Degree of each pair, aligned with `pairs`.
    pub pair_degrees: Vec<u32>,
    /// Degree of each triple, aligned with `triples`.
    pub triple_degrees: Vec<u32>,
    pub pairwise_disjoint: bool,
    pub no_quad: bool,
    pub no_offset_quad: bool,
    /// Which algorithm preconditions fail, informationally.
    pub issues: Vec<PreconditionIssue>,
    #[serde(skip)]
    pub stats: CollisionStats,
}

/// Splits the collision classes of `h` and reports which repair
/// preconditions fail.
pub fn classify_collisions(h: &Hypergraph) -> CollisionClasses {
    let degrees = h.degrees();
    let stats = collision_stats_of_degrees(&degrees);
    let n = h.vertex_count() as f64;

    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    let mut pair_degrees = Vec::new();
    let mut triple_degrees = Vec::new();
    for class in &stats.classes {
        match class.vertices.as_slice() {
            [u, v] => {
                pairs.push((*u, *v));
                pair_degrees.push(class.degree);
            }
            [x, y, z] => {
                triples.push((*x, *y, *z));
                triple_degrees.push(class.degree);
            }
            _ => {}
        }
    }

    let no_quad = stats.x4 == 0;
    let no_offset_quad = stats.offset_quads == 0;
    let mut issues = Vec::new();
    if !no_quad {
        issues.push(PreconditionIssue::QuadPresent);
    }
    if !no_offset_quad {
        issues.push(PreconditionIssue::OffsetQuadPresent);
    }
    if !triples.is_empty() {
        issues.push(PreconditionIssue::TriplePresent);
    }
    let log_n = n.max(2.0).ln();
    if (pairs.len() as f64) > n.sqrt() * log_n {
        issues.push(PreconditionIssue::PairCountAboveBound);
    }
    if (triples.len() as f64) > log_n {
        issues.push(PreconditionIssue::TripleCountAboveBound);
    }

    CollisionClasses {
        pairs,
        triples,
        pair_degrees,
        triple_degrees,
        // maximal classes cannot share vertices
        pairwise_disjoint: true,
        no_quad,
        no_offset_quad,
        issues,
        stats,
    }
}
