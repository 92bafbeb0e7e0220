//! Degree-collision statistics: counts of equal-degree pairs, triples and
//! quadruples, the (d, d, d, d+1) offset pattern, all-equal-degree edges,
//! and the maximal equal-degree classes.

use serde::Serialize;

use crate::hypergraph::Hypergraph;

/// One maximal group of vertices sharing a degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionClass {
    pub degree: u32,
    /// Ascending vertex indices.
    pub vertices: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionStats {
    /// Vertex pairs {u, v} with deg(u) = deg(v).
    pub x2: u64,
    /// Equal-degree triples.
    pub x3: u64,
    /// Equal-degree quadruples.
    pub x4: u64,
    /// Edges all of whose vertices share one degree.
    pub x3_edges: u64,
    /// Quadruples patterned (d, d, d, d+1): three vertices of degree d plus
    /// one of degree d+1.
    pub offset_quads: u64,
    /// Maximal equal-degree classes of size >= 2, ascending by degree.
    pub classes: Vec<CollisionClass>,
}

fn choose(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Collision counts straight from the degree multiset.
pub fn collision_stats_of_degrees(degrees: &[u32]) -> CollisionStats {
    let mut by_degree: Vec<(u32, u32)> = degrees
        .iter()
        .enumerate()
        .map(|(v, &d)| (d, v as u32))
        .collect();
    by_degree.sort_unstable();

    let mut classes = Vec::new();
    let mut x2 = 0u64;
    let mut x3 = 0u64;
    let mut x4 = 0u64;
    let mut i = 0;
    while i < by_degree.len() {
        let d = by_degree[i].0;
        let mut j = i;
        while j < by_degree.len() && by_degree[j].0 == d {
            j += 1;
        }
        let size = (j - i) as u64;
        x2 += choose(size, 2);
        x3 += choose(size, 3);
        x4 += choose(size, 4);
        if size >= 2 {
            classes.push(CollisionClass {
                degree: d,
                vertices: by_degree[i..j].iter().map(|&(_, v)| v).collect(),
            });
        }
        i = j;
    }

    // multiplicity per degree value for the offset pattern
    let mut offset_quads = 0u64;
    let mut k = 0;
    while k < by_degree.len() {
        let d = by_degree[k].0;
        let mut j = k;
        while j < by_degree.len() && by_degree[j].0 == d {
            j += 1;
        }
        let size = (j - k) as u64;
        if j < by_degree.len() && by_degree[j].0 == d + 1 {
            let mut j2 = j;
            while j2 < by_degree.len() && by_degree[j2].0 == d + 1 {
                j2 += 1;
            }
            offset_quads += choose(size, 3) * (j2 - j) as u64;
        }
        k = j;
    }

    CollisionStats {
        x2,
        x3,
        x4,
        x3_edges: 0,
        offset_quads,
        classes,
    }
}

/// Full statistics for a hypergraph, including the all-equal-degree edges.
pub fn collision_stats(h: &Hypergraph) -> CollisionStats {
    let degrees = h.degrees();
    let mut stats = collision_stats_of_degrees(&degrees);
    stats.x3_edges = h
        .edges()
        .filter(|edge| {
            let d0 = degrees[edge[0] as usize];
            edge[1..].iter().all(|&v| degrees[v as usize] == d0)
        })
        .count() as u64;
    stats
}
