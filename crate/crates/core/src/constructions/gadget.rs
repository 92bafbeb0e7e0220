//! Transversal gadgets: the r-partite hypergraph T with parts of sizes
//! 1..r whose edges are all transversals, and T(k), k copies of T glued at
//! the part-of-size-1 vertex (the root). Both are strongly 1-weighted:
//! a vertex in the part of size i has degree r!/i, so degrees inside any
//! edge are pairwise distinct.

use crate::hypergraph::Hypergraph;

fn factorial(r: usize) -> usize {
    (1..=r).product()
}

/// Builds T for uniformity r: r(r+1)/2 vertices, r! edges.
/// Vertices are numbered part by part, the root is vertex 0.
pub fn gadget_t(r: usize) -> Hypergraph {
    let (h, _) = gadget_tk(r, 1);
    h
}

/// Builds T(k): k copies of T sharing the root. Returns the hypergraph and
/// the root index (always 0). Copies are numbered consecutively after the
/// root, each copy's parts in ascending size order.
pub fn gadget_tk(r: usize, k: usize) -> (Hypergraph, u32) {
    assert!(r >= 2, "uniformity must be at least 2");
    assert!(k >= 1, "at least one copy");
    let per_copy = r * (r + 1) / 2 - 1; // non-root vertices per copy
    let n = k * per_copy + 1;
    let mut edges: Vec<Vec<u32>> = Vec::with_capacity(k * factorial(r));
    for copy in 0..k {
        let base = 1 + copy * per_copy;
        // part i (sizes 2..=r) starts at offset sum of previous sizes
        let part_start: Vec<usize> = (2..=r)
            .scan(base, |acc, size| {
                let start = *acc;
                *acc += size;
                Some(start)
            })
            .collect();
        // odometer over one choice per part, last part fastest
        let sizes: Vec<usize> = (2..=r).collect();
        let mut choice = vec![0usize; r - 1];
        'transversals: loop {
            let mut edge = Vec::with_capacity(r);
            edge.push(0u32);
            for (idx, &c) in choice.iter().enumerate() {
                edge.push((part_start[idx] + c) as u32);
            }
            edges.push(edge);
            let mut i = choice.len();
            while i > 0 {
                i -= 1;
                choice[i] += 1;
                if choice[i] < sizes[i] {
                    continue 'transversals;
                }
                choice[i] = 0;
            }
            break;
        }
    }
    let h = Hypergraph::new(n, r, edges).expect("gadget edges are valid by construction");
    (h, 0)
}
