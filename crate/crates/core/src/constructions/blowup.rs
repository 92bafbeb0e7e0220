//! The point-line blow-up of a projective plane, its extension to larger
//! uniformity, and the six-edge hypergraph that defeats weak 2-weighting.

use serde::Serialize;

use crate::constructions::canonicalize_tagged;
use crate::constructions::plane::IncidenceStructure;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Which side of the blow-up an edge came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowupEdge {
    /// `e(p)`: the flags of one point.
    Point(u32),
    /// `f(l)`: the flags of one line.
    Line(u32),
    /// An extension edge inside the padding set U.
    Padding,
}

/// A blow-up hypergraph with its bookkeeping: one vertex per incidence flag
/// `(p, l)`, point-edges `E1` and line-edges `E2`, flags ordered by
/// `(point, line)`. Extension keeps the flag table and records the padded
/// edge images, so the pigeonhole certificate applies unchanged.
#[derive(Clone, Debug, Serialize)]
pub struct Blowup {
    #[serde(skip)]
    pub hypergraph: Hypergraph,
    pub q: u64,
    /// Vertex labels `(p, l)`, aligned with vertex indices.
    pub flags: Vec<(u32, u32)>,
    /// Labels of padding vertices appended by extension (empty before).
    pub padding_vertices: Vec<u32>,
    /// Canonical edge index of the (possibly padded) image of `e(p)`.
    pub e1: Vec<usize>,
    /// Canonical edge index of the (possibly padded) image of `f(l)`.
    pub e2: Vec<usize>,
}

impl Blowup {
    /// Vertex index of flag `(p, l)`; flags are sorted by `(p, l)`.
    pub fn flag_index(&self, p: u32, l: u32) -> Option<u32> {
        self.flags.binary_search(&(p, l)).ok().map(|i| i as u32)
    }

    /// Human-readable vertex labels for diagnostics.
    pub fn vertex_labels(&self) -> Vec<String> {
        let mut labels: Vec<String> = self
            .flags
            .iter()
            .map(|&(p, l)| format!("(p{p},l{l})"))
            .collect();
        labels.extend(self.padding_vertices.iter().map(|&u| format!("u{u}")));
        labels
    }
}

/// Blows up each point of the plane into its q+1 flags. The result is
/// (q+1)-uniform, 2-regular and nice, with edge set E1 ∪ E2.
pub fn blowup_hypergraph(plane: &IncidenceStructure) -> Blowup {
    let mut flags = Vec::new();
    for p in 0..plane.point_count() as u32 {
        for l in plane.lines_through(p as usize) {
            flags.push((p, l));
        }
    }
    flags.sort_unstable();
    let index_of = |p: u32, l: u32| flags.binary_search(&(p, l)).unwrap() as u32;

    let mut tagged: Vec<(Vec<u32>, BlowupEdge)> = Vec::new();
    for p in 0..plane.point_count() as u32 {
        let edge: Vec<u32> = plane
            .lines_through(p as usize)
            .into_iter()
            .map(|l| index_of(p, l))
            .collect();
        tagged.push((edge, BlowupEdge::Point(p)));
    }
    for (l, line) in plane.lines().enumerate() {
        let edge: Vec<u32> = line.iter().map(|&p| index_of(p, l as u32)).collect();
        tagged.push((edge, BlowupEdge::Line(l as u32)));
    }

    let (hypergraph, tags) = canonicalize_tagged(flags.len(), plane.order() as usize + 1, tagged)
        .expect("blow-up edges are valid by construction");
    let (e1, e2) = split_indices(&tags, plane.point_count(), plane.line_count());
    Blowup {
        hypergraph,
        q: plane.order(),
        flags,
        padding_vertices: Vec::new(),
        e1,
        e2,
    }
}

fn split_indices(tags: &[BlowupEdge], points: usize, lines: usize) -> (Vec<usize>, Vec<usize>) {
    let mut e1 = vec![usize::MAX; points];
    let mut e2 = vec![usize::MAX; lines];
    for (index, tag) in tags.iter().enumerate() {
        match *tag {
            BlowupEdge::Point(p) => e1[p as usize] = index,
            BlowupEdge::Line(l) => e2[l as usize] = index,
            BlowupEdge::Padding => {}
        }
    }
    (e1, e2)
}

/// Extends a (q+1)-uniform blow-up to uniformity r by adding a padding set
/// U of r+1 fresh vertices: every existing edge gains r-(q+1) vertices of U
/// chosen round-robin by edge index, and the r+1 possible r-subsets of U are
/// appended as new edges. For r = q+1 this is the identity.
pub fn extend_blowup(blowup: &Blowup, r: usize) -> Result<Blowup> {
    let q1 = blowup.q as usize + 1;
    if r < q1 {
        return Err(Error::ExtensionTooSmall {
            uniformity: q1,
            target: r,
        });
    }
    if r == q1 {
        return Ok(blowup.clone());
    }
    let n = blowup.hypergraph.vertex_count();
    let u_count = r + 1;
    let pad_per_edge = r - q1;

    let mut tagged: Vec<(Vec<u32>, BlowupEdge)> = Vec::new();
    let mut cursor = 0usize;
    for (index, edge) in blowup.hypergraph.edges().enumerate() {
        let mut padded: Vec<u32> = edge.to_vec();
        for j in 0..pad_per_edge {
            padded.push((n + (cursor + j) % u_count) as u32);
        }
        cursor += pad_per_edge;
        let tag = if blowup.e1.contains(&index) {
            BlowupEdge::Point(blowup.e1.iter().position(|&e| e == index).unwrap() as u32)
        } else {
            BlowupEdge::Line(blowup.e2.iter().position(|&e| e == index).unwrap() as u32)
        };
        tagged.push((padded, tag));
    }
    for skip in 0..u_count {
        let edge: Vec<u32> = (0..u_count)
            .filter(|&j| j != skip)
            .map(|j| (n + j) as u32)
            .collect();
        tagged.push((edge, BlowupEdge::Padding));
    }

    let (hypergraph, tags) = canonicalize_tagged(n + u_count, r, tagged)?;
    let (e1, e2) = split_indices(&tags, blowup.e1.len(), blowup.e2.len());
    Ok(Blowup {
        hypergraph,
        q: blowup.q,
        flags: blowup.flags.clone(),
        padding_vertices: (n as u32..(n + u_count) as u32).collect(),
        e1,
        e2,
    })
}

/// The 3r-vertex, six-edge r-uniform hypergraph that is not weakly
/// 2-weighted: three disjoint edges on the x, y, z blocks and three
/// "shifted" edges, each inside the union of two of them.
pub fn weak_counterexample(r: usize) -> Hypergraph {
    assert!(r >= 2, "uniformity must be at least 2");
    let r = r as u32;
    let x = |i: u32| i; // x_1..x_r -> 0..r
    let y = |i: u32| r + i;
    let z = |i: u32| 2 * r + i;
    let e1: Vec<u32> = (0..r).map(x).collect();
    let e2: Vec<u32> = (0..r).map(y).collect();
    let e3: Vec<u32> = (0..r).map(z).collect();
    let f1: Vec<u32> = (1..r).map(x).chain([y(0)]).collect();
    let f2: Vec<u32> = (1..r).map(y).chain([z(0)]).collect();
    let f3: Vec<u32> = (1..r).map(z).chain([x(0)]).collect();
    Hypergraph::new(3 * r as usize, r as usize, vec![e1, e2, e3, f1, f2, f3])
        .expect("counterexample edges are valid by construction")
}
