//! Flip repairs for random-like hypergraphs whose degree collisions are
//! small: start from the all-2 weighting (all colors even, collisions exactly
//! at the equal-degree classes) and flip a few disjoint edges to weight 1.
//!
//! A flipped edge lowers each member color by 1. An anchor u in a pair
//! class drops to an odd color; the first member x of a triple class sits
//! on two flipped edges and drops by 2, the second drops by 1, the third
//! stays. Maximality of the classes keeps the odd side collision-free; the
//! even side is safe unless some vertex sits one degree below a triple,
//! where x lands. Such vertices are either caught by the refusal rules or
//! "shielded" by routing a repair edge through them, which flips them to
//! the odd side. Degree-0 classes are ignored: isolated vertices lie in no
//! edge and cannot break a rainbow. Every produced weighting is verified
//! before it is returned.

use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, WeightAssignment};
use crate::weighter::classes::{classify_collisions, CollisionClasses};

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum RepairFailure {
    #[error("repair expects uniformity {expected}, hypergraph has {found}")]
    WrongUniformity { expected: String, found: usize },
    #[error("triple present: an equal-degree class of size 3 disqualifies the pairs-only repair")]
    TriplePresent,
    #[error("quad present: an equal-degree class of size 4 or more")]
    QuadPresent,
    #[error("offset-quad present: a vertex adjacent in degree to an equal-degree triple blocks the flip-by-2")]
    OffsetQuadPresent,
    #[error("no eligible repair edge for vertex {vertex}")]
    NoEligibleEdge { vertex: u32 },
    #[error("repaired weighting failed the strong check")]
    VerificationFailed,
}

/// Pairs-only repair for uniformity >= 5: flip one edge through the first
/// member of every equal-degree pair.
pub fn repair_pairs(h: &Hypergraph) -> Result<WeightAssignment, RepairFailure> {
    if h.uniformity() < 5 {
        return Err(RepairFailure::WrongUniformity {
            expected: ">= 5".into(),
            found: h.uniformity(),
        });
    }
    let classes = classify_collisions(h);
    check_class_sizes(&classes, false)?;
    let mut plan = RepairPlan::new(h, &classes);
    for (i, &(u, _)) in classes.pairs.iter().enumerate() {
        if classes.pair_degrees[i] > 0 {
            plan.choose_edge(u)?;
        }
    }
    plan.finish(h)
}

/// Pair-and-triple repair for uniformity 4. Each pair anchor gets one
/// flipped edge; each triple (x, y, z) gets two flipped edges through x and
/// one through y. Vertices one degree below a triple would collide with x's
/// new color: class members there cause refusal, loose vertices are
/// shielded by routing repair edges through them.
pub fn repair_pairs_triples(h: &Hypergraph) -> Result<WeightAssignment, RepairFailure> {
    if h.uniformity() != 4 {
        return Err(RepairFailure::WrongUniformity {
            expected: "4".into(),
            found: h.uniformity(),
        });
    }
    let classes = classify_collisions(h);
    check_class_sizes(&classes, true)?;

    // degree-level census around each active triple
    let degrees = h.degrees();
    let mut hot: Vec<u32> = Vec::new(); // loose vertices one below a triple
    for &d in &classes.triple_degrees {
        if d <= 1 {
            // one below is degree 0: isolated vertices never share an edge
            continue;
        }
        let below = d - 1;
        if classes
            .pair_degrees
            .iter()
            .chain(&classes.triple_degrees)
            .any(|&cd| cd == below)
        {
            // a class member one below the triple keeps an even color there
            return Err(RepairFailure::OffsetQuadPresent);
        }
        for (v, &dv) in degrees.iter().enumerate() {
            if dv == below {
                hot.push(v as u32);
            }
        }
    }
    hot.sort_unstable();
    hot.dedup();

    let mut plan = RepairPlan::new(h, &classes);
    plan.hot = hot;
    for (i, &(u, _)) in classes.pairs.iter().enumerate() {
        if classes.pair_degrees[i] > 0 {
            plan.choose_edge(u)?;
        }
    }
    for (j, &(x, y, _)) in classes.triples.iter().enumerate() {
        if classes.triple_degrees[j] > 0 {
            plan.choose_edge(x)?;
            plan.choose_edge(x)?;
            plan.choose_edge(y)?;
        }
    }
    if !plan.hot.is_empty() {
        return Err(RepairFailure::OffsetQuadPresent);
    }
    plan.finish(h)
}

/// Rejects class shapes the algorithms cannot absorb. Degree-0 classes are
/// exempt throughout.
fn check_class_sizes(
    classes: &CollisionClasses,
    triples_allowed: bool,
) -> Result<(), RepairFailure> {
    for class in &classes.stats.classes {
        if class.degree == 0 {
            continue;
        }
        if class.vertices.len() >= 4 {
            return Err(RepairFailure::QuadPresent);
        }
        if class.vertices.len() == 3 && !triples_allowed {
            return Err(RepairFailure::TriplePresent);
        }
    }
    Ok(())
}

/// Shared greedy selection state: chosen edges must meet the class vertices
/// only in their anchor and their non-anchor parts must be pairwise
/// disjoint.
struct RepairPlan<'a> {
    h: &'a Hypergraph,
    incidence: Vec<Vec<u32>>,
    /// All class vertices.
    class_vertex: Vec<bool>,
    /// Non-anchor vertices already used by chosen edges.
    used: Vec<bool>,
    /// Unshielded vertices the plan prefers to route edges through.
    hot: Vec<u32>,
    chosen: Vec<usize>,
}

impl<'a> RepairPlan<'a> {
    fn new(h: &'a Hypergraph, classes: &CollisionClasses) -> Self {
        let mut class_vertex = vec![false; h.vertex_count()];
        for class in &classes.stats.classes {
            for &v in &class.vertices {
                class_vertex[v as usize] = true;
            }
        }
        Self {
            h,
            incidence: h.incidence(),
            class_vertex,
            used: vec![false; h.vertex_count()],
            hot: Vec::new(),
            chosen: Vec::new(),
        }
    }

    fn eligible(&self, e: usize, anchor: u32) -> bool {
        self.h.edge(e).iter().all(|&v| {
            if v == anchor {
                true
            } else {
                !self.class_vertex[v as usize] && !self.used[v as usize]
            }
        })
    }

    /// First eligible edge through `anchor` in canonical order, preferring
    /// edges that shield a hot vertex while any remain.
    fn choose_edge(&mut self, anchor: u32) -> Result<(), RepairFailure> {
        let candidates = &self.incidence[anchor as usize];
        let mut pick = None;
        if !self.hot.is_empty() {
            pick = candidates.iter().map(|&e| e as usize).find(|&e| {
                self.eligible(e, anchor)
                    && self
                        .h
                        .edge(e)
                        .iter()
                        .any(|v| self.hot.binary_search(v).is_ok())
            });
        }
        if pick.is_none() {
            pick = candidates
                .iter()
                .map(|&e| e as usize)
                .find(|&e| self.eligible(e, anchor));
        }
        let Some(e) = pick else {
            return Err(RepairFailure::NoEligibleEdge { vertex: anchor });
        };
        for &v in self.h.edge(e) {
            if v != anchor {
                self.used[v as usize] = true;
            }
            if let Ok(pos) = self.hot.binary_search(&v) {
                self.hot.remove(pos);
            }
        }
        self.chosen.push(e);
        Ok(())
    }

    /// Flips the chosen edges on the all-2 baseline and verifies.
    fn finish(self, h: &Hypergraph) -> Result<WeightAssignment, RepairFailure> {
        let mut weights = vec![2u32; h.edge_count()];
        for e in self.chosen {
            weights[e] = 1;
        }
        let weights = WeightAssignment::new(2, weights).expect("weights are in {1,2}");
        match h.check_strong(&weights) {
            Ok(Ok(())) => Ok(weights),
            _ => Err(RepairFailure::VerificationFailed),
        }
    }
}
