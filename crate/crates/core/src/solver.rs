//! Pruned backtracking over `{1..w}^E` deciding strong or weak
//! `w`-weightedness.
//!
//! Edges are assigned one at a time. A vertex is *settled* once all of its
//! incident edges carry weights; from then on its color is final. A branch
//! is cut as soon as two settled vertices sharing an edge have equal colors
//! (strong mode), or all vertices of some edge are settled with one common
//! color (weak mode). Under a fixed configuration the search is fully
//! deterministic, including the node count.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, WeightAssignment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightingMode {
    Strong,
    Weak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeOrder {
    /// Orders edges so that low-degree vertices settle as early as possible:
    /// repeatedly complete the vertex with the fewest unassigned edges.
    GreedyVertexCompletion,
    /// Canonical edge order as-is.
    GivenOrder,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Maximum search-tree nodes; 0 means unlimited.
    pub node_budget: u64,
    pub edge_order: EdgeOrder,
    pub mode: WeightingMode,
}

impl SearchConfig {
    pub fn new(mode: WeightingMode) -> Self {
        Self {
            node_budget: 0,
            edge_order: EdgeOrder::GreedyVertexCompletion,
            mode,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.node_budget = budget;
        self
    }

    pub fn with_order(mut self, order: EdgeOrder) -> Self {
        self.edge_order = order;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    /// A satisfying assignment, checker-valid by construction.
    Found(WeightAssignment),
    /// The whole tree was refuted: no assignment in `{1..w}^E` works.
    ExhaustedUnsat,
    /// The node budget ran out before a definitive answer.
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub nodes_visited: u64,
}

/// Decides whether `h` is strongly/weakly `w`-weighted.
pub fn solve(h: &Hypergraph, w: u32, cfg: &SearchConfig) -> Result<SolveOutcome> {
    if w == 0 {
        return Err(Error::ZeroWeightBound);
    }
    let m = h.edge_count();
    if m == 0 {
        // no edges, nothing to violate
        return Ok(SolveOutcome {
            status: SolveStatus::Found(WeightAssignment::uniform(0, 1, w)),
            nodes_visited: 0,
        });
    }

    let order = match cfg.edge_order {
        EdgeOrder::GivenOrder => (0..m).collect::<Vec<_>>(),
        EdgeOrder::GreedyVertexCompletion => greedy_vertex_completion(h),
    };

    // settle_pos[v]: position in `order` after which v's color is final
    let n = h.vertex_count();
    let mut pos_of_edge = vec![0usize; m];
    for (pos, &e) in order.iter().enumerate() {
        pos_of_edge[e] = pos;
    }
    let mut settle_pos = vec![usize::MAX; n];
    for (e, edge) in h.edges().enumerate() {
        for &v in edge {
            let s = &mut settle_pos[v as usize];
            *s = if *s == usize::MAX {
                pos_of_edge[e]
            } else {
                (*s).max(pos_of_edge[e])
            };
        }
    }
    let mut newly_settled: Vec<Vec<u32>> = vec![Vec::new(); m];
    for v in 0..n {
        if settle_pos[v] != usize::MAX {
            newly_settled[settle_pos[v]].push(v as u32);
        }
    }

    // vertices sharing at least one edge, for the strong-mode check
    let mut co_vertices: Vec<Vec<u32>> = vec![Vec::new(); n];
    if cfg.mode == WeightingMode::Strong {
        for edge in h.edges() {
            for &u in edge {
                for &v in edge {
                    if u != v {
                        co_vertices[u as usize].push(v);
                    }
                }
            }
        }
        for list in &mut co_vertices {
            list.sort_unstable();
            list.dedup();
        }
    }

    // edges fully settled at each position, for the weak-mode check
    let mut edges_settled_at: Vec<Vec<u32>> = vec![Vec::new(); m];
    if cfg.mode == WeightingMode::Weak {
        for (e, edge) in h.edges().enumerate() {
            let last = edge.iter().map(|&v| settle_pos[v as usize]).max().unwrap();
            edges_settled_at[last].push(e as u32);
        }
    }

    let mut search = Search {
        h,
        w,
        cfg,
        order: &order,
        settle_pos: &settle_pos,
        newly_settled: &newly_settled,
        co_vertices: &co_vertices,
        edges_settled_at: &edges_settled_at,
        colors: vec![0u64; n],
        assignment: vec![0u32; m],
        nodes: 0,
    };
    let status = match search.descend(0) {
        Descent::Found => {
            let weights = WeightAssignment::new(w, search.assignment.clone())?;
            debug_assert!(match cfg.mode {
                WeightingMode::Strong => h.check_strong(&weights).unwrap().is_ok(),
                WeightingMode::Weak => h.check_weak(&weights).unwrap().is_ok(),
            });
            SolveStatus::Found(weights)
        }
        Descent::Refuted => SolveStatus::ExhaustedUnsat,
        Descent::OutOfBudget => SolveStatus::BudgetExceeded,
    };
    Ok(SolveOutcome {
        status,
        nodes_visited: search.nodes,
    })
}

/// Edge order settling low-degree vertices earliest: repeatedly pick the
/// vertex with the fewest unassigned incident edges (ties to the lowest
/// index) and append all of its remaining edges in ascending index order.
fn greedy_vertex_completion(h: &Hypergraph) -> Vec<usize> {
    let m = h.edge_count();
    let inc = h.incidence();
    let mut remaining: Vec<u32> = inc.iter().map(|l| l.len() as u32).collect();
    let mut placed = vec![false; m];
    let mut order = Vec::with_capacity(m);
    loop {
        let mut best: Option<(u32, usize)> = None;
        for (v, &left) in remaining.iter().enumerate() {
            if left > 0 && best.is_none_or(|(r, _)| left < r) {
                best = Some((left, v));
            }
        }
        let Some((_, v)) = best else { break };
        for &e in &inc[v] {
            let e = e as usize;
            if !placed[e] {
                placed[e] = true;
                order.push(e);
                for &u in h.edge(e) {
                    remaining[u as usize] -= 1;
                }
            }
        }
        debug_assert_eq!(remaining[v], 0);
    }
    debug_assert_eq!(order.len(), m);
    order
}

enum Descent {
    Found,
    Refuted,
    OutOfBudget,
}

struct Search<'a> {
    h: &'a Hypergraph,
    w: u32,
    cfg: &'a SearchConfig,
    order: &'a [usize],
    settle_pos: &'a [usize],
    newly_settled: &'a [Vec<u32>],
    co_vertices: &'a [Vec<u32>],
    edges_settled_at: &'a [Vec<u32>],
    colors: Vec<u64>,
    assignment: Vec<u32>,
    nodes: u64,
}

impl Search<'_> {
    fn descend(&mut self, pos: usize) -> Descent {
        if pos == self.order.len() {
            return Descent::Found;
        }
        let e = self.order[pos];
        for weight in 1..=self.w {
            if self.cfg.node_budget > 0 && self.nodes >= self.cfg.node_budget {
                return Descent::OutOfBudget;
            }
            self.nodes += 1;
            for &v in self.h.edge(e) {
                self.colors[v as usize] += weight as u64;
            }
            self.assignment[e] = weight;
            if !self.prune(pos) {
                match self.descend(pos + 1) {
                    Descent::Refuted => {}
                    other => return other,
                }
            }
            for &v in self.h.edge(e) {
                self.colors[v as usize] -= weight as u64;
            }
        }
        Descent::Refuted
    }

    fn prune(&self, pos: usize) -> bool {
        match self.cfg.mode {
            WeightingMode::Strong => {
                for &v in &self.newly_settled[pos] {
                    let cv = self.colors[v as usize];
                    for &u in &self.co_vertices[v as usize] {
                        if self.settle_pos[u as usize] <= pos && self.colors[u as usize] == cv {
                            return true;
                        }
                    }
                }
                false
            }
            WeightingMode::Weak => {
                for &e in &self.edges_settled_at[pos] {
                    let edge = self.h.edge(e as usize);
                    let c0 = self.colors[edge[0] as usize];
                    if edge[1..].iter().all(|&v| self.colors[v as usize] == c0) {
                        return true;
                    }
                }
                false
            }
        }
    }
}
