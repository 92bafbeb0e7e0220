//! Bipartite matching machinery: Hopcroft-Karp maximum matching,
//! edge-disjoint perfect matching extraction, and the tripartite matching
//! families used by the 3-uniform weighting algorithm.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A bipartite graph on `left` x `right` index sets.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    /// Sorted neighbor lists per left vertex.
    adjacency: Vec<Vec<u32>>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize) -> Self {
        Self {
            left,
            right,
            adjacency: vec![Vec::new(); left],
        }
    }

    pub fn add_edge(&mut self, l: u32, r: u32) {
        debug_assert!((l as usize) < self.left && (r as usize) < self.right);
        self.adjacency[l as usize].push(r);
    }

    pub fn left_size(&self) -> usize {
        self.left
    }

    pub fn right_size(&self) -> usize {
        self.right
    }

    pub fn normalize(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
            list.dedup();
        }
    }

    fn remove_matching(&mut self, matching: &[(u32, u32)]) {
        for &(l, r) in matching {
            let list = &mut self.adjacency[l as usize];
            if let Ok(pos) = list.binary_search(&r) {
                list.remove(pos);
            }
        }
    }
}

/// Hopcroft-Karp maximum matching. Returns (left, right) pairs sorted by
/// left vertex; deterministic for a fixed adjacency order.
pub fn max_bipartite_matching(g: &BipartiteGraph) -> Vec<(u32, u32)> {
    const NIL: u32 = u32::MAX;
    let (left, right) = (g.left, g.right);
    let mut match_left = vec![NIL; left];
    let mut match_right = vec![NIL; right];
    let mut dist = vec![u32::MAX; left];
    let mut queue = std::collections::VecDeque::new();

    loop {
        // BFS layers from free left vertices
        queue.clear();
        for l in 0..left {
            if match_left[l] == NIL {
                dist[l] = 0;
                queue.push_back(l as u32);
            } else {
                dist[l] = u32::MAX;
            }
        }
        let mut found_augmenting = false;
        while let Some(l) = queue.pop_front() {
            for &r in &g.adjacency[l as usize] {
                let next = match_right[r as usize];
                if next == NIL {
                    found_augmenting = true;
                } else if dist[next as usize] == u32::MAX {
                    dist[next as usize] = dist[l as usize] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found_augmenting {
            break;
        }
        // DFS along layered graph
        fn try_augment(
            g: &BipartiteGraph,
            l: u32,
            match_left: &mut [u32],
            match_right: &mut [u32],
            dist: &mut [u32],
        ) -> bool {
            for &r in &g.adjacency[l as usize] {
                let next = match_right[r as usize];
                if next == NIL
                    || (dist[next as usize] == dist[l as usize] + 1
                        && try_augment(g, next, match_left, match_right, dist))
                {
                    match_left[l as usize] = r;
                    match_right[r as usize] = l;
                    return true;
                }
            }
            dist[l as usize] = u32::MAX;
            false
        }
        for l in 0..left as u32 {
            if match_left[l as usize] == NIL && dist[l as usize] == 0 {
                try_augment(g, l, &mut match_left, &mut match_right, &mut dist);
            }
        }
    }

    (0..left as u32)
        .filter(|&l| match_left[l as usize] != NIL)
        .map(|l| (l, match_left[l as usize]))
        .collect()
}

/// Repeatedly extracts a matching saturating the left side and removes its
/// edges, until `cap` matchings are found or none remains. With equal sides
/// every returned matching is perfect.
pub fn extract_disjoint_perfect_matchings(g: &BipartiteGraph, cap: usize) -> Vec<Vec<(u32, u32)>> {
    let mut work = g.clone();
    work.normalize();
    let mut out = Vec::new();
    while out.len() < cap {
        let matching = max_bipartite_matching(&work);
        if matching.len() < work.left {
            break;
        }
        work.remove_matching(&matching);
        out.push(matching);
    }
    out
}

/// A family of pairwise edge-disjoint matchings of a 3-partite 3-uniform
/// hypergraph; each matching is a list of canonical edge indices, pairwise
/// vertex-disjoint, one vertex per part.
#[derive(Clone, Debug)]
pub struct MatchingFamily {
    pub matchings: Vec<Vec<usize>>,
    /// How many matchings cover each vertex.
    pub coverage: Vec<u32>,
}

impl MatchingFamily {
    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    /// Flat set of all edge indices, ascending; edge-disjointness makes the
    /// list duplicate-free.
    pub fn edge_indices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.matchings.iter().flatten().copied().collect();
        all.sort_unstable();
        all
    }
}

/// Decomposes V1 x V2 into "diagonal" pair matchings and, slice by slice,
/// extracts perfect matchings of pairs against V3 from the edges present in
/// `h`. Up to ceil(target / slices) matchings are taken per slice and at
/// most `target` in total.
///
/// Parts may differ in size by one (the near-perfect fallback); every
/// matching has size min(|V1|, |V2|, |V3|).
pub(crate) fn matching_family_general(
    h: &Hypergraph,
    parts: [&[u32]; 3],
    target: usize,
) -> MatchingFamily {
    let (v1, v2, v3) = (parts[0], parts[1], parts[2]);
    let s1 = v1.len();
    let s2 = v2.len();
    let s3 = v3.len();
    let m0 = s1.min(s2).min(s3);
    let mut matchings: Vec<Vec<usize>> = Vec::new();
    let mut coverage = vec![0u32; h.vertex_count()];
    if m0 == 0 || target == 0 {
        return MatchingFamily {
            matchings,
            coverage,
        };
    }
    let slices = s1.max(s2);
    let per_slice = target.div_ceil(slices);

    'slices: for d in 0..slices {
        // diagonal d: pair V1[(j + d) mod s1] with V2[j mod s2]
        let len = s1.min(s2);
        let pairs: Vec<(u32, u32)> = (0..len).map(|j| (v1[(j + d) % s1], v2[j % s2])).collect();
        // bipartite graph of pairs against V3 through present hyperedges
        let mut g = BipartiteGraph::new(pairs.len(), s3);
        let mut edge_of = vec![vec![usize::MAX; s3]; pairs.len()];
        for (pi, &(a, b)) in pairs.iter().enumerate() {
            for (wi, &w) in v3.iter().enumerate() {
                let mut edge = [a, b, w];
                edge.sort_unstable();
                if let Some(idx) = h.edge_index(&edge) {
                    g.add_edge(pi as u32, wi as u32);
                    edge_of[pi][wi] = idx;
                }
            }
        }
        g.normalize();
        for _ in 0..per_slice {
            let matching = max_bipartite_matching(&g);
            if matching.len() < m0 {
                continue 'slices;
            }
            let mut hyperedges: Vec<usize> = matching
                .iter()
                .take(m0)
                .map(|&(pi, wi)| edge_of[pi as usize][wi as usize])
                .collect();
            hyperedges.sort_unstable();
            for &(pi, wi) in matching.iter().take(m0) {
                let (a, b) = pairs[pi as usize];
                coverage[a as usize] += 1;
                coverage[b as usize] += 1;
                coverage[v3[wi as usize] as usize] += 1;
            }
            g.remove_matching(&matching);
            matchings.push(hyperedges);
            if matchings.len() == target {
                break 'slices;
            }
        }
    }
    MatchingFamily {
        matchings,
        coverage,
    }
}

/// Matching family for equal-size parts, the exact Lemma-style setting:
/// V1 x V2 decomposes into m round-robin matchings; each is matched into V3
/// through the present edges.
pub fn tripartite_matching_family(
    h: &Hypergraph,
    parts: [&[u32]; 3],
    target: usize,
) -> Result<MatchingFamily> {
    let sizes = [parts[0].len(), parts[1].len(), parts[2].len()];
    if sizes[0] != sizes[1] || sizes[1] != sizes[2] {
        return Err(Error::UnequalParts(sizes.to_vec()));
    }
    Ok(matching_family_general(h, parts, target))
}
