//! Deterministic constructions: finite fields, projective planes, the
//! plane blow-up and its extension, the weak-weighting counterexample,
//! the transversal gadgets, and the strong-2-weighting reduction.

pub mod blowup;
pub mod field;
pub mod gadget;
pub mod plane;
pub mod reduce;

pub use blowup::{blowup_hypergraph, extend_blowup, weak_counterexample, Blowup};
pub use field::{finite_field, FiniteFieldTable};
pub use gadget::{gadget_t, gadget_tk};
pub use plane::{projective_plane, IncidenceStructure};
pub use reduce::{lift_weighting, np_reduce, restrict_weighting, ReductionMap};

use crate::error::Result;
use crate::hypergraph::Hypergraph;

/// Sorts tagged edges into canonical order and builds the hypergraph,
/// returning the tags aligned with canonical edge indices.
pub(crate) fn canonicalize_tagged<T>(
    n: usize,
    r: usize,
    mut tagged: Vec<(Vec<u32>, T)>,
) -> Result<(Hypergraph, Vec<T>)> {
    for (edge, _) in &mut tagged {
        edge.sort_unstable();
    }
    tagged.sort_by(|a, b| a.0.cmp(&b.0));
    let mut flat = Vec::with_capacity(tagged.len() * r);
    let mut tags = Vec::with_capacity(tagged.len());
    for (edge, tag) in tagged {
        flat.extend_from_slice(&edge);
        tags.push(tag);
    }
    let h = Hypergraph::from_canonical(n, r, flat)?;
    Ok((h, tags))
}
