//! Randomized strong 2-weighting for 3-uniform random-like hypergraphs.
//!
//! One attempt: equipartition the vertices by index, build a family of
//! edge-disjoint (near-)perfect tripartite matchings, draw vertex labels in
//! part-dependent subintervals of [0, 1/3], give each matching edge weight 2
//! with probability 1/2 and every other edge weight 2 with probability equal
//! to its label sum, then kill each equal-color pair by flipping one edge at
//! its first vertex. A pair is *dangerous* when its colors are within 4 of
//! each other (equivalently, both within 2 of a common integer) and *bad*
//! when they are equal.
//!
//! A flip moves all three member colors by +1 or -1 together, the sign
//! fixed by the edge's current weight. Repair edges meet no dangerous
//! vertex besides their anchor and are pairwise vertex-disjoint, and the
//! direction is chosen so the anchor lands on a color no stationary vertex
//! occupies and no other anchor targets; colors are then globally distinct
//! again. An attempt aborts when three vertices share one color (a single
//! flip cannot separate them) or no safe flip exists for some bad vertex.
//! Attempts retry with fresh randomness; every returned weighting passes
//! the strong check before it leaves.

use std::collections::{HashMap, HashSet};

use rand_chacha::rand_core::RngCore;
use serde::Serialize;
use thiserror::Error;

use crate::hypergraph::{Hypergraph, WeightAssignment};
use crate::random::sample::trial_rng;
use crate::weighter::matching::{matching_family_general, MatchingFamily};

#[derive(Clone, Copy, Debug)]
pub struct ThreeUniformConfig {
    /// Matching-family density target: the family aims at floor(gamma n^2)
    /// matchings; shortfalls are recorded, not fatal.
    pub gamma: f64,
    pub max_retries: u32,
}

impl Default for ThreeUniformConfig {
    fn default() -> Self {
        Self {
            gamma: 0.1,
            max_retries: 50,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "cause", rename_all = "snake_case")]
pub enum AbortCause {
    /// Three vertices share one color; single flips cannot separate them.
    DangerousTriple { u: u32, v: u32, witness: u32 },
    /// No eligible repair edge with a safe landing color for this bad
    /// vertex.
    NoEligibleRepairEdge { vertex: u32 },
    /// The repaired weighting failed the final strong check.
    VerificationFailed,
}

#[derive(Clone, Debug, Serialize)]
pub struct AttemptDiagnostics {
    pub attempt: u32,
    pub family_target: usize,
    pub family_size: usize,
    pub dangerous_pairs: u64,
    pub bad_pairs: u64,
    pub abort: Option<AbortCause>,
}

#[derive(Clone, Debug, Error, Serialize)]
#[error("no strong 2-weighting found in {} attempts", .attempts.len())]
pub struct ThreeUniformFailure {
    pub attempts: Vec<AttemptDiagnostics>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThreeUniformOutcome {
    pub weights: WeightAssignment,
    pub attempts: Vec<AttemptDiagnostics>,
}

/// Index-block equipartition; earlier parts take the remainder.
fn equipartition(n: usize) -> [Vec<u32>; 3] {
    let base = n / 3;
    let rem = n % 3;
    let s1 = base + usize::from(rem > 0);
    let s2 = base + usize::from(rem > 1);
    let mut parts: [Vec<u32>; 3] = Default::default();
    parts[0] = (0..s1 as u32).collect();
    parts[1] = (s1 as u32..(s1 + s2) as u32).collect();
    parts[2] = ((s1 + s2) as u32..n as u32).collect();
    parts
}

fn uniform_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Attempts a strong 2-weighting of a 3-uniform hypergraph.
pub fn strong_weighting_three_uniform(
    h: &Hypergraph,
    seed: u64,
    config: &ThreeUniformConfig,
) -> Result<ThreeUniformOutcome, ThreeUniformFailure> {
    assert_eq!(
        h.uniformity(),
        3,
        "algorithm is specific to 3-uniform input"
    );
    let n = h.vertex_count();
    let parts = equipartition(n);
    let family_target = ((config.gamma * (n as f64) * (n as f64)).floor() as usize).max(1);
    let family = matching_family_general(h, [&parts[0], &parts[1], &parts[2]], family_target);
    let mut in_matching = vec![false; h.edge_count()];
    for &e in &family.edge_indices() {
        in_matching[e] = true;
    }

    let mut attempts = Vec::new();
    for attempt in 0..config.max_retries.max(1) {
        let mut rng = trial_rng(seed, attempt as u64);
        let (diag, outcome) = run_attempt(
            h,
            &parts,
            &family,
            family_target,
            &in_matching,
            attempt,
            &mut rng,
        );
        attempts.push(diag);
        if let Some(weights) = outcome {
            return Ok(ThreeUniformOutcome { weights, attempts });
        }
    }
    Err(ThreeUniformFailure { attempts })
}

fn run_attempt(
    h: &Hypergraph,
    parts: &[Vec<u32>; 3],
    family: &MatchingFamily,
    family_target: usize,
    in_matching: &[bool],
    attempt: u32,
    rng: &mut impl RngCore,
) -> (AttemptDiagnostics, Option<WeightAssignment>) {
    let n = h.vertex_count();
    let mut diag = AttemptDiagnostics {
        attempt,
        family_target,
        family_size: family.len(),
        dangerous_pairs: 0,
        bad_pairs: 0,
        abort: None,
    };

    // labels in part-dependent subintervals of [0, 1/3]
    let mut labels = vec![0f64; n];
    for (part, vs) in parts.iter().enumerate() {
        let lo = part as f64 / 9.0;
        for &v in vs {
            labels[v as usize] = lo + uniform_f64(rng) / 9.0;
        }
    }

    // edge weights: matching edges fair coins, others by label sum
    let mut weights = Vec::with_capacity(h.edge_count());
    for (e, edge) in h.edges().enumerate() {
        let p2 = if in_matching[e] {
            0.5
        } else {
            labels[edge[0] as usize] + labels[edge[1] as usize] + labels[edge[2] as usize]
        };
        weights.push(if uniform_f64(rng) < p2 { 2u32 } else { 1u32 });
    }
    let mut assignment = WeightAssignment::new(2, weights).expect("weights are in {1,2}");
    let colors = h
        .induced_coloring(&assignment)
        .expect("assignment is aligned")
        .colors;

    // color census: dangerous pairs (gap <= 4) and bad pairs (equal)
    let mut by_color: Vec<(u64, u32)> = colors
        .iter()
        .enumerate()
        .map(|(v, &c)| (c, v as u32))
        .collect();
    by_color.sort_unstable();
    let mut dangerous = vec![false; n];
    for i in 0..by_color.len() {
        for j in (i + 1)..by_color.len() {
            if by_color[j].0 - by_color[i].0 > 4 {
                break;
            }
            diag.dangerous_pairs += 1;
            dangerous[by_color[i].1 as usize] = true;
            dangerous[by_color[j].1 as usize] = true;
        }
    }
    let mut bad_pairs: Vec<(u32, u32)> = Vec::new();
    let mut i = 0;
    while i < by_color.len() {
        let mut j = i;
        while j < by_color.len() && by_color[j].0 == by_color[i].0 {
            j += 1;
        }
        if j - i >= 2 {
            diag.bad_pairs += (((j - i) * (j - i - 1)) / 2) as u64;
        }
        if j - i >= 3 {
            diag.abort = Some(AbortCause::DangerousTriple {
                u: by_color[i].1.min(by_color[i + 1].1),
                v: by_color[i].1.max(by_color[i + 1].1),
                witness: by_color[i + 2].1,
            });
            return (diag, None);
        }
        if j - i == 2 {
            let (u, v) = (by_color[i].1, by_color[i + 1].1);
            bad_pairs.push((u.min(v), u.max(v)));
        }
        i = j;
    }

    // repair: one directed flip per bad pair. Occupancy tracks stationary
    // vertices only; members of chosen edges move and are discounted.
    let incidence = h.incidence();
    let mut stationary: HashMap<u64, u32> = HashMap::new();
    for &c in &colors {
        *stationary.entry(c).or_insert(0) += 1;
    }
    let mut targets: HashSet<u64> = HashSet::new();
    let mut used = vec![false; n];
    let mut flips = Vec::with_capacity(bad_pairs.len());
    for &(u, _) in &bad_pairs {
        let c = colors[u as usize];
        let mut chosen = None;
        for delta in [1i64, -1] {
            let Some(t) = c.checked_add_signed(delta) else {
                continue;
            };
            if targets.contains(&t) || stationary.get(&t).copied().unwrap_or(0) > 0 {
                continue;
            }
            // weight 1 flips to 2 (+1); weight 2 flips to 1 (-1)
            let needed = if delta == 1 { 1u32 } else { 2u32 };
            let edge = incidence[u as usize]
                .iter()
                .map(|&e| e as usize)
                .find(|&e| {
                    assignment.weights[e] == needed
                        && h.edge(e)
                            .iter()
                            .all(|&x| x == u || (!dangerous[x as usize] && !used[x as usize]))
                });
            if let Some(e) = edge {
                chosen = Some((e, t));
                break;
            }
        }
        let Some((e, t)) = chosen else {
            diag.abort = Some(AbortCause::NoEligibleRepairEdge { vertex: u });
            return (diag, None);
        };
        for &x in h.edge(e) {
            used[x as usize] = true;
            *stationary.get_mut(&colors[x as usize]).expect("counted") -= 1;
        }
        targets.insert(t);
        flips.push(e);
    }
    for e in flips {
        assignment.weights[e] = 3 - assignment.weights[e];
    }

    match h.check_strong(&assignment) {
        Ok(Ok(())) => (diag, Some(assignment)),
        _ => {
            diag.abort = Some(AbortCause::VerificationFailed);
            (diag, None)
        }
    }
}
