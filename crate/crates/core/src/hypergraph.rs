//! Uniform hypergraphs, edge weightings, induced colorings, and the
//! strong/weak/nice predicates everything else is verified against.

use serde::Serialize;

use crate::error::{Error, Result};

/// An `r`-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored flat, `r` vertices each, every edge strictly increasing,
/// and the edge list sorted lexicographically. That canonical order is what
/// weight vectors and edge indices refer to throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<u32>,
}

impl Hypergraph {
    /// Builds a hypergraph from a list of edges, normalizing each edge and
    /// the edge list into canonical order. Duplicate edges (as sets) are
    /// rejected.
    pub fn new(n: usize, r: usize, mut edges: Vec<Vec<u32>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::UniformityTooSmall(r));
        }
        for (index, edge) in edges.iter_mut().enumerate() {
            if edge.len() != r {
                return Err(Error::WrongEdgeSize {
                    index,
                    found: edge.len(),
                    expected: r,
                });
            }
            edge.sort_unstable();
            for pair in edge.windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::RepeatedVertex {
                        index,
                        vertex: pair[0],
                    });
                }
            }
            if let Some(&last) = edge.last() {
                if last as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        index,
                        vertex: last,
                        n,
                    });
                }
            }
        }
        edges.sort_unstable();
        for (i, pair) in edges.windows(2).enumerate() {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateEdge {
                    first: i,
                    second: i + 1,
                });
            }
        }
        let flat = edges.into_iter().flatten().collect();
        Ok(Self { n, r, edges: flat })
    }

    /// Builds a hypergraph from an already-canonical flat edge list.
    /// The canonical-order and distinctness invariants are still verified;
    /// this is the cheap path for generators that emit edges in order.
    pub fn from_canonical(n: usize, r: usize, edges: Vec<u32>) -> Result<Self> {
        if r < 2 {
            return Err(Error::UniformityTooSmall(r));
        }
        assert_eq!(
            edges.len() % r,
            0,
            "flat edge list length must be a multiple of r"
        );
        let mut prev: Option<&[u32]> = None;
        for (index, edge) in edges.chunks_exact(r).enumerate() {
            for pair in edge.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(Error::RepeatedVertex {
                        index,
                        vertex: pair[1],
                    });
                }
            }
            if edge[r - 1] as usize >= n {
                return Err(Error::VertexOutOfRange {
                    index,
                    vertex: edge[r - 1],
                    n,
                });
            }
            if let Some(p) = prev {
                if p >= edge {
                    return Err(Error::NotCanonical { position: index });
                }
            }
            prev = Some(edge);
        }
        Ok(Self { n, r, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len() / self.r
    }

    pub fn edge(&self, index: usize) -> &[u32] {
        &self.edges[index * self.r..(index + 1) * self.r]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[u32]> {
        self.edges.chunks_exact(self.r)
    }

    /// Canonical index of an edge given as a sorted vertex slice.
    pub fn edge_index(&self, edge: &[u32]) -> Option<usize> {
        let r = self.r;
        let m = self.edge_count();
        let mut lo = 0usize;
        let mut hi = m;
        while lo < hi {
            let mid = (lo + hi) / 2;
            if &self.edges[mid * r..(mid + 1) * r] < edge {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        (lo < m && self.edge(lo) == edge).then_some(lo)
    }

    /// Vertex degrees; entry `v` counts the edges containing `v`.
    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.n];
        for &v in &self.edges {
            deg[v as usize] += 1;
        }
        deg
    }

    /// Edge indices incident to each vertex, in canonical edge order.
    pub fn incidence(&self) -> Vec<Vec<u32>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, edge) in self.edges().enumerate() {
            for &v in edge {
                inc[v as usize].push(i as u32);
            }
        }
        inc
    }

    /// The coloring induced by a weight assignment:
    /// `c(v) = sum of w(e) over edges e containing v`.
    pub fn induced_coloring(&self, weights: &WeightAssignment) -> Result<VertexColoring> {
        self.check_alignment(weights)?;
        let mut colors = vec![0u64; self.n];
        for (edge, &w) in self.edges().zip(&weights.weights) {
            for &v in edge {
                colors[v as usize] += w as u64;
            }
        }
        Ok(VertexColoring { colors })
    }

    /// Strong check: every edge must be rainbow (all colors pairwise
    /// distinct). Returns the lexicographically first offense.
    pub fn check_strong(&self, weights: &WeightAssignment) -> Result<CheckResult> {
        let colors = self.induced_coloring(weights)?;
        Ok(self.check_strong_colored(&colors))
    }

    /// Strong check against a precomputed coloring.
    pub fn check_strong_colored(&self, colors: &VertexColoring) -> CheckResult {
        for (index, edge) in self.edges().enumerate() {
            for i in 0..self.r {
                for j in (i + 1)..self.r {
                    if colors.colors[edge[i] as usize] == colors.colors[edge[j] as usize] {
                        return Err(Violation::NotRainbow {
                            edge: index,
                            u: edge[i],
                            v: edge[j],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Weak check: no edge may be monochromatic. The witness pair is the
    /// first two vertices of the first offending edge.
    pub fn check_weak(&self, weights: &WeightAssignment) -> Result<CheckResult> {
        let colors = self.induced_coloring(weights)?;
        Ok(self.check_weak_colored(&colors))
    }

    /// Weak check against a precomputed coloring.
    pub fn check_weak_colored(&self, colors: &VertexColoring) -> CheckResult {
        for (index, edge) in self.edges().enumerate() {
            let c0 = colors.colors[edge[0] as usize];
            if edge[1..].iter().all(|&v| colors.colors[v as usize] == c0) {
                return Err(Violation::Monochromatic {
                    edge: index,
                    u: edge[0],
                    v: edge[1],
                });
            }
        }
        Ok(())
    }

    /// A hypergraph is nice when no two vertices lie in exactly the same set
    /// of edges. Twins make strong weighting impossible. Two isolated
    /// vertices are twins (both incident edge sets are empty).
    pub fn is_nice(&self) -> CheckResult {
        let inc = self.incidence();
        let mut order: Vec<u32> = (0..self.n as u32).collect();
        order.sort_by(|&a, &b| inc[a as usize].cmp(&inc[b as usize]).then(a.cmp(&b)));
        // Lexicographically first twin pair: the group whose smallest member
        // is minimal, paired with its next member.
        let mut best: Option<(u32, u32)> = None;
        for w in order.windows(2) {
            let (a, b) = (w[0], w[1]);
            if inc[a as usize] == inc[b as usize] {
                let (u, v) = if a < b { (a, b) } else { (b, a) };
                if best.is_none_or(|(bu, bv)| (u, v) < (bu, bv)) {
                    best = Some((u, v));
                }
            }
        }
        match best {
            Some((u, v)) => Err(Violation::TwinVertices { u, v }),
            None => Ok(()),
        }
    }

    /// Strong 1-weightedness: within every edge the vertex degrees must be
    /// pairwise distinct. Agrees with `check_strong` under all-ones weights.
    pub fn is_strongly_1_weighted(&self) -> CheckResult {
        let colors = VertexColoring {
            colors: self.degrees().iter().map(|&d| d as u64).collect(),
        };
        self.check_strong_colored(&colors)
    }

    /// Weak 1-weightedness: no edge with all degrees equal.
    pub fn is_weakly_1_weighted(&self) -> CheckResult {
        let colors = VertexColoring {
            colors: self.degrees().iter().map(|&d| d as u64).collect(),
        };
        self.check_weak_colored(&colors)
    }

    fn check_alignment(&self, weights: &WeightAssignment) -> Result<()> {
        if weights.weights.len() != self.edge_count() {
            return Err(Error::WeightLengthMismatch {
                found: weights.weights.len(),
                expected: self.edge_count(),
            });
        }
        Ok(())
    }
}

/// A weight function on the edge list, values in `1..=w_max`, aligned with
/// the canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightAssignment {
    pub w_max: u32,
    pub weights: Vec<u32>,
}

impl WeightAssignment {
    pub fn new(w_max: u32, weights: Vec<u32>) -> Result<Self> {
        if w_max == 0 {
            return Err(Error::ZeroWeightBound);
        }
        for (index, &weight) in weights.iter().enumerate() {
            if weight == 0 || weight > w_max {
                return Err(Error::WeightOutOfRange {
                    index,
                    weight,
                    w_max,
                });
            }
        }
        Ok(Self { w_max, weights })
    }

    /// The constant assignment `weight` on `m` edges.
    pub fn uniform(m: usize, weight: u32, w_max: u32) -> Self {
        debug_assert!(weight >= 1 && weight <= w_max);
        Self {
            w_max,
            weights: vec![weight; m],
        }
    }

    pub fn all_ones(m: usize) -> Self {
        Self::uniform(m, 1, 1)
    }
}

/// Vertex colors induced by a weighting; entry `v` is `c(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    pub colors: Vec<u64>,
}

/// A checkable witness that a weighting (or the hypergraph itself) fails
/// a predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Edge `edge` contains vertices `u`, `v` with equal colors.
    NotRainbow { edge: usize, u: u32, v: u32 },
    /// All vertices of `edge` share one color; `u`, `v` are its first two.
    Monochromatic { edge: usize, u: u32, v: u32 },
    /// `u` and `v` lie in exactly the same edges.
    TwinVertices { u: u32, v: u32 },
}

impl Violation {
    /// Re-verifies the witness against the structures it was produced from.
    pub fn verify(&self, h: &Hypergraph, colors: Option<&VertexColoring>) -> bool {
        match *self {
            Violation::NotRainbow { edge, u, v } | Violation::Monochromatic { edge, u, v } => {
                let Some(colors) = colors else { return false };
                let e = h.edge(edge);
                e.contains(&u)
                    && e.contains(&v)
                    && u != v
                    && colors.colors[u as usize] == colors.colors[v as usize]
            }
            Violation::TwinVertices { u, v } => {
                let inc = h.incidence();
                u != v && inc[u as usize] == inc[v as usize]
            }
        }
    }
}

/// `Ok(())` when the predicate holds, otherwise the first violation.
pub type CheckResult = std::result::Result<(), Violation>;
