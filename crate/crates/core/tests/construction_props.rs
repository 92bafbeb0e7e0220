//! Programmatic verification of the construction invariants: plane
//! incidence properties, blow-up shape, gadget degree structure, and the
//! reduction round trip on small graphs.

use hyperweight::certificate::{blowup_unsat_certificate, SpotCheck};
use hyperweight::constructions::{
    blowup_hypergraph, extend_blowup, finite_field, gadget_t, gadget_tk, lift_weighting, np_reduce,
    projective_plane, restrict_weighting, weak_counterexample,
};
use hyperweight::hypergraph::{Hypergraph, WeightAssignment};
use hyperweight::oracle;
use hyperweight::parallel::Jobs;
use hyperweight::solver::{solve, SearchConfig, SolveStatus, WeightingMode};

#[test]
fn field_laws_hold_for_all_supported_small_orders() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        assert!(finite_field(q).unwrap().verify_laws(), "q={q}");
    }
}

#[test]
fn plane_and_blowup_invariants_up_to_order_five() {
    for q in [2u64, 3, 4, 5] {
        let plane = projective_plane(q).unwrap();
        plane.verify_invariants().unwrap();
        let b = blowup_hypergraph(&plane);
        let h = &b.hypergraph;
        assert_eq!(h.uniformity(), q as usize + 1);
        assert_eq!(
            h.vertex_count(),
            (q as usize + 1) * (q * q + q + 1) as usize
        );
        assert_eq!(h.edge_count(), 2 * (q * q + q + 1) as usize);
        assert!(h.degrees().iter().all(|&d| d == 2), "q={q} not 2-regular");
        assert!(h.is_nice().is_ok(), "q={q} not nice");
    }
}

#[test]
fn extended_blowup_keeps_pigeonhole_structure() {
    let plane = projective_plane(2).unwrap();
    let base = blowup_hypergraph(&plane);
    for r in [4usize, 5] {
        let ext = extend_blowup(&base, r).unwrap();
        assert_eq!(ext.hypergraph.uniformity(), r);
        assert!(ext.hypergraph.is_nice().is_ok());
        // the padded E1 images still admit the certificate, including a
        // small full enumeration
        let cert =
            blowup_unsat_certificate(&plane, &ext, 2, SpotCheck::FullEnumeration, Jobs::Count(1))
                .unwrap();
        assert_eq!(cert.enumerated_assignments, Some(128));
    }
}

#[test]
fn weak_counterexample_is_monochromatic_under_all_two_weightings() {
    // every one of the 2^6 weightings leaves some monochromatic edge
    for r in [3usize, 4] {
        let h = weak_counterexample(r);
        assert_eq!(oracle::count_satisfying(&h, 2, WeightingMode::Weak), 0);
    }
}

#[test]
fn weak_counterexample_r3_admits_three_weights() {
    let h = weak_counterexample(3);
    let out = solve(&h, 3, &SearchConfig::new(WeightingMode::Weak)).unwrap();
    let SolveStatus::Found(w) = out.status else {
        panic!("expected a weak 3-weighting");
    };
    assert!(h.check_weak(&w).unwrap().is_ok());
}

#[test]
fn gadget_degree_structure() {
    for r in [3usize, 4, 5] {
        let t = gadget_t(r);
        let factorial: u32 = (1..=r as u32).product();
        assert_eq!(t.vertex_count(), r * (r + 1) / 2);
        assert_eq!(t.edge_count(), factorial as usize);
        assert!(t.is_strongly_1_weighted().is_ok());
        let (tk, root) = gadget_tk(r, 3);
        assert_eq!(tk.vertex_count(), 3 * (r * (r + 1) / 2 - 1) + 1);
        assert_eq!(tk.degrees()[root as usize], 3 * factorial);
        assert!(tk.is_strongly_1_weighted().is_ok());
    }
}

/// All graphs with at most `max_edges` edges, no isolated vertices and no
/// single-edge components, one representative per isomorphism class.
fn small_graphs(max_edges: usize) -> Vec<Hypergraph> {
    use std::collections::HashSet;
    let mut canon_seen = HashSet::new();
    let mut out = Vec::new();
    for n in 2..=6usize {
        let all_pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|a| ((a + 1)..n as u32).map(move |b| (a, b)))
            .collect();
        let mut perms: Vec<Vec<u32>> = Vec::new();
        permutations(n as u32, &mut perms);
        for mask in 1u32..(1 << all_pairs.len()) {
            if (mask.count_ones() as usize) > max_edges {
                continue;
            }
            let edges: Vec<Vec<u32>> = all_pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &(a, b))| vec![a, b])
                .collect();
            if !covers_all_vertices(&edges, n) || has_isolated_edge_component(&edges, n) {
                continue;
            }
            let canon = canonical_form(&edges, &perms);
            if canon_seen.insert(canon) {
                out.push(Hypergraph::new(n, 2, edges).unwrap());
            }
        }
    }
    out
}

fn permutations(n: u32, out: &mut Vec<Vec<u32>>) {
    fn rec(current: &mut Vec<u32>, remaining: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(current.clone());
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            current.push(v);
            rec(current, remaining, out);
            current.pop();
            remaining.insert(i, v);
        }
    }
    rec(&mut Vec::new(), &mut (0..n).collect(), out);
}

fn covers_all_vertices(edges: &[Vec<u32>], n: usize) -> bool {
    let mut seen = vec![false; n];
    for e in edges {
        for &v in e {
            seen[v as usize] = true;
        }
    }
    seen.iter().all(|&s| s)
}

fn has_isolated_edge_component(edges: &[Vec<u32>], n: usize) -> bool {
    // union-find over vertices, then count edges per component
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in edges {
        let (a, b) = (
            find(&mut parent, e[0] as usize),
            find(&mut parent, e[1] as usize),
        );
        parent[a] = b;
    }
    let mut count = vec![0usize; n];
    for e in edges {
        let root = find(&mut parent, e[0] as usize);
        count[root] += 1;
    }
    count.contains(&1)
}

fn canonical_form(edges: &[Vec<u32>], perms: &[Vec<u32>]) -> Vec<(u32, u32)> {
    perms
        .iter()
        .map(|perm| {
            let mut mapped: Vec<(u32, u32)> = edges
                .iter()
                .map(|e| {
                    let (a, b) = (perm[e[0] as usize], perm[e[1] as usize]);
                    (a.min(b), a.max(b))
                })
                .collect();
            mapped.sort_unstable();
            mapped
        })
        .min()
        .unwrap()
}

#[test]
fn reduction_round_trip_on_tiny_graphs() {
    // smaller sweep here; the acceptance suite runs the full <= 4 edge one
    let graphs = small_graphs(3);
    assert!(graphs.len() >= 4, "sweep produced too few graphs");
    for g in &graphs {
        let map = np_reduce(g, 3).unwrap();
        let source = solve(g, 2, &SearchConfig::new(WeightingMode::Strong)).unwrap();
        let target = solve(
            &map.target,
            2,
            &SearchConfig::new(WeightingMode::Strong).with_budget(10_000_000),
        )
        .unwrap();
        match (&source.status, &target.status) {
            (SolveStatus::Found(wg), SolveStatus::Found(wh)) => {
                let lifted = lift_weighting(&map, wg).unwrap();
                assert!(map.target.check_strong(&lifted).unwrap().is_ok());
                let back = restrict_weighting(&map, &lifted).unwrap();
                assert_eq!(back.weights, wg.weights);
                // a solver-found target weighting restricts to a proper
                // source weighting
                let restricted = restrict_weighting(&map, wh).unwrap();
                assert!(map.source.check_strong(&restricted).unwrap().is_ok());
            }
            (SolveStatus::ExhaustedUnsat, SolveStatus::ExhaustedUnsat) => {}
            other => panic!("status mismatch {other:?}"),
        }
    }
}

#[test]
fn lift_requires_a_proper_source_weighting() {
    let k3 = Hypergraph::new(3, 2, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
    let map = np_reduce(&k3, 3).unwrap();
    for weights in [[1, 1, 1], [1, 2, 2], [2, 1, 2]] {
        let wg = WeightAssignment::new(2, weights.to_vec()).unwrap();
        assert!(lift_weighting(&map, &wg).is_err());
    }
}
