//! Reference brute-force decision procedures.
//!
//! These enumerate the full weight space `{1..w}^E` and are used by the test
//! suites as independent ground truth for the pruned solver and for the
//! blow-up infeasibility arguments. They share only the core checkers with
//! the solver, never its search path.

use crate::hypergraph::{Hypergraph, VertexColoring, WeightAssignment};
use crate::parallel::{map_indexed, Jobs};
use crate::solver::WeightingMode;

/// Decodes assignment number `code` in base `w` (edge 0 is the most
/// significant digit, so increasing `code` is lexicographic order).
fn decode(code: u64, m: usize, w: u32) -> Vec<u32> {
    let mut weights = vec![1u32; m];
    let mut rest = code;
    for slot in weights.iter_mut().rev() {
        *slot = (rest % w as u64) as u32 + 1;
        rest /= w as u64;
    }
    weights
}

fn coloring_of(h: &Hypergraph, weights: &[u32]) -> VertexColoring {
    let mut colors = vec![0u64; h.vertex_count()];
    for (edge, &w) in h.edges().zip(weights) {
        for &v in edge {
            colors[v as usize] += w as u64;
        }
    }
    VertexColoring { colors }
}

fn satisfies(h: &Hypergraph, weights: &[u32], mode: WeightingMode) -> bool {
    let colors = coloring_of(h, weights);
    match mode {
        WeightingMode::Strong => h.check_strong_colored(&colors).is_ok(),
        WeightingMode::Weak => h.check_weak_colored(&colors).is_ok(),
    }
}

/// Exhaustively decides `w`-weightedness in the given mode. Returns the
/// lexicographically first satisfying assignment, or `None` after refuting
/// the entire space. Panics if the space exceeds `2^63` assignments; the
/// oracle is meant for desk-scale instances only.
pub fn decide(h: &Hypergraph, w: u32, mode: WeightingMode) -> Option<WeightAssignment> {
    decide_with_jobs(h, w, mode, Jobs::Count(1))
}

/// Same as [`decide`], with the enumeration split across threads. The
/// result is still the lexicographically first satisfying assignment.
pub fn decide_with_jobs(
    h: &Hypergraph,
    w: u32,
    mode: WeightingMode,
    jobs: Jobs,
) -> Option<WeightAssignment> {
    assert!(w >= 1);
    let m = h.edge_count();
    let total = (w as u64)
        .checked_pow(m as u32)
        .expect("assignment space too large for exhaustive enumeration");
    // Split on the leading digits so chunks are contiguous code ranges.
    let chunks = if total > 4096 { 1024u64 } else { 1 };
    let chunk_len = total.div_ceil(chunks);
    let found = map_indexed(chunks as usize, jobs, |chunk| {
        let lo = chunk as u64 * chunk_len;
        let hi = total.min(lo + chunk_len);
        (lo..hi).find(|&code| satisfies(h, &decode(code, m, w), mode))
    });
    let code = found.into_iter().flatten().next()?;
    Some(WeightAssignment::new(w, decode(code, m, w)).expect("decoded weights are in range"))
}

/// Counts satisfying assignments; handy for cross-checking counts in tests.
pub fn count_satisfying(h: &Hypergraph, w: u32, mode: WeightingMode) -> u64 {
    let m = h.edge_count();
    let total = (w as u64)
        .checked_pow(m as u32)
        .expect("assignment space too large for exhaustive enumeration");
    (0..total)
        .filter(|&code| satisfies(h, &decode(code, m, w), mode))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_graph_has_no_strong_2_weighting() {
        let k3 = Hypergraph::new(3, 2, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        assert!(decide(&k3, 2, WeightingMode::Strong).is_none());
        // weights {1,2,3} admit one: e.g. colors become pairwise distinct
        assert!(decide(&k3, 3, WeightingMode::Strong).is_some());
    }

    #[test]
    fn path_graph_strong_2_weighting_found_and_verified() {
        let p3 = Hypergraph::new(3, 2, vec![vec![0, 1], vec![1, 2]]).unwrap();
        let w = decide(&p3, 2, WeightingMode::Strong).unwrap();
        assert!(p3.check_strong(&w).unwrap().is_ok());
        // all-ones already works: colors 1, 2, 1 and the ends share no edge
        assert_eq!(w.weights, vec![1, 1]);
    }

    #[test]
    fn parallel_enumeration_matches_sequential() {
        let h = Hypergraph::new(
            6,
            3,
            vec![
                vec![0, 1, 2],
                vec![1, 2, 3],
                vec![2, 3, 4],
                vec![3, 4, 5],
                vec![0, 4, 5],
                vec![0, 1, 5],
            ],
        )
        .unwrap();
        for mode in [WeightingMode::Strong, WeightingMode::Weak] {
            let seq = decide(&h, 2, mode);
            let par = decide_with_jobs(&h, 2, mode, Jobs::Auto);
            assert_eq!(seq, par);
        }
    }
}
