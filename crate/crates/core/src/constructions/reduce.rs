//! Reduction from strong 2-weighting of graphs to strong 2-weighting of
//! r-uniform hypergraphs.
//!
//! Each graph edge {x, y} becomes {x, y, v_1, ..., v_{r-2}} with fresh
//! padding vertices, and padding vertex v_i carries a fresh copy of the
//! gadget T(2*i*n) rooted at v_i, n the source vertex count. Gadget edges
//! weighted 1 push the root colors pairwise apart and far above any source
//! color, so the target is strongly 2-weighted exactly when the source is.

use serde::Serialize;

use crate::constructions::canonicalize_tagged;
use crate::constructions::gadget::gadget_tk;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, WeightAssignment};

/// One derived edge of the target, with its padding vertices.
#[derive(Clone, Debug, Serialize)]
pub struct DerivedEdge {
    pub source_edge: usize,
    pub target_edge: usize,
    pub padding: Vec<u32>,
}

/// One gadget copy, rooted at a padding vertex.
#[derive(Clone, Debug, Serialize)]
pub struct GadgetCopy {
    pub root: u32,
    pub copies: usize,
    pub edges: Vec<usize>,
}

/// The reduction with enough bookkeeping to lift and restrict weightings.
/// Derived and gadget edges partition the target's edge list.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionMap {
    #[serde(skip)]
    pub source: Hypergraph,
    #[serde(skip)]
    pub target: Hypergraph,
    pub uniformity: usize,
    pub derived: Vec<DerivedEdge>,
    pub gadgets: Vec<GadgetCopy>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum EdgeTag {
    Derived(usize),
    Gadget(usize),
}

/// Builds h(G) for a graph G (r = 2 hypergraph) and target uniformity r.
pub fn np_reduce(graph: &Hypergraph, r: usize) -> Result<ReductionMap> {
    if graph.uniformity() != 2 {
        return Err(Error::ReductionSourceNotGraph(graph.uniformity()));
    }
    if r < 3 {
        return Err(Error::ReductionUniformity(r));
    }
    let n = graph.vertex_count();
    let mut next_vertex = n as u32;
    let mut tagged: Vec<(Vec<u32>, EdgeTag)> = Vec::new();
    let mut derived_padding: Vec<Vec<u32>> = Vec::new();
    let mut gadget_meta: Vec<(u32, usize)> = Vec::new(); // (root, copies)
    let mut gadget_of_edge: Vec<usize> = Vec::new(); // parallel to tagged gadget tags

    for (source_edge, edge) in graph.edges().enumerate() {
        let mut padding = Vec::with_capacity(r - 2);
        let mut target_edge: Vec<u32> = edge.to_vec();
        for i in 1..=(r - 2) {
            let root = next_vertex;
            next_vertex += 1;
            padding.push(root);
            target_edge.push(root);

            let k = 2 * i * n;
            let (gadget, _) = gadget_tk(r, k);
            let gadget_index = gadget_meta.len();
            gadget_meta.push((root, k));
            // splice the gadget in: its vertex 0 is the root, the rest are
            // fresh vertices appended after it
            let offset = next_vertex;
            next_vertex += (gadget.vertex_count() - 1) as u32;
            for gedge in gadget.edges() {
                let spliced: Vec<u32> = gedge
                    .iter()
                    .map(|&v| if v == 0 { root } else { offset + v - 1 })
                    .collect();
                tagged.push((spliced, EdgeTag::Gadget(gadget_index)));
                gadget_of_edge.push(gadget_index);
            }
        }
        derived_padding.push(padding.clone());
        tagged.push((target_edge, EdgeTag::Derived(source_edge)));
    }

    let (target, tags) = canonicalize_tagged(next_vertex as usize, r, tagged)?;

    let mut derived: Vec<DerivedEdge> = derived_padding
        .into_iter()
        .enumerate()
        .map(|(source_edge, padding)| DerivedEdge {
            source_edge,
            target_edge: usize::MAX,
            padding,
        })
        .collect();
    let mut gadgets: Vec<GadgetCopy> = gadget_meta
        .into_iter()
        .map(|(root, copies)| GadgetCopy {
            root,
            copies,
            edges: Vec::new(),
        })
        .collect();
    for (index, tag) in tags.iter().enumerate() {
        match *tag {
            EdgeTag::Derived(s) => derived[s].target_edge = index,
            EdgeTag::Gadget(g) => gadgets[g].edges.push(index),
        }
    }
    Ok(ReductionMap {
        source: graph.clone(),
        target,
        uniformity: r,
        derived,
        gadgets,
    })
}

/// Lifts a proper 2-weighting of the source graph to the target: derived
/// edges inherit the source weight, gadget edges get weight 1. The input
/// must pass the strong check on the source; the output passes it on the
/// target.
pub fn lift_weighting(
    map: &ReductionMap,
    source_weights: &WeightAssignment,
) -> Result<WeightAssignment> {
    match map.source.check_strong(source_weights)? {
        Ok(()) => {}
        Err(violation) => {
            return Err(Error::StructureMismatch(format!(
                "source weighting is not strong: {violation:?}"
            )))
        }
    }
    let mut weights = vec![1u32; map.target.edge_count()];
    for d in &map.derived {
        weights[d.target_edge] = source_weights.weights[d.source_edge];
    }
    WeightAssignment::new(source_weights.w_max.max(1), weights)
}

/// Pulls back a target weighting to the source graph along the derived
/// edges.
pub fn restrict_weighting(
    map: &ReductionMap,
    target_weights: &WeightAssignment,
) -> Result<WeightAssignment> {
    if target_weights.weights.len() != map.target.edge_count() {
        return Err(Error::WeightLengthMismatch {
            found: target_weights.weights.len(),
            expected: map.target.edge_count(),
        });
    }
    let mut weights = vec![0u32; map.source.edge_count()];
    for d in &map.derived {
        weights[d.source_edge] = target_weights.weights[d.target_edge];
    }
    WeightAssignment::new(target_weights.w_max, weights)
}
