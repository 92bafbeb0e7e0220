//! Seeded sampling of the random hypergraph H^(r)(n, p): every r-subset of
//! the vertices is an edge independently with probability p.
//!
//! Draws are made in lexicographic subset order from a ChaCha stream keyed
//! by (seed, trial), so a trial is reproducible bit-for-bit and the edge
//! set can be re-walked without materializing it.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Derives the independent stream for one trial of one experiment.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Per-subset inclusion rule. Exact half consumes one bit per subset
/// (little-endian within each u64 of the stream); any other probability
/// compares a full u64 draw against a threshold.
#[derive(Clone, Copy, Debug)]
pub enum EdgeProbability {
    Never,
    Half,
    Always,
    Threshold(u64),
}

impl EdgeProbability {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) || p.is_nan() {
            return Err(Error::ProbabilityOutOfRange(p));
        }
        Ok(if p == 0.0 {
            Self::Never
        } else if p == 0.5 {
            Self::Half
        } else if p >= 1.0 {
            Self::Always
        } else {
            Self::Threshold((p * 2f64.powi(64)) as u64)
        })
    }
}

/// Streams all r-subsets of 0..n in lexicographic order, flipping one coin
/// each, and hands the present ones to `visit`.
pub fn for_each_present_edge<F>(
    n: usize,
    r: usize,
    p: EdgeProbability,
    rng: &mut ChaCha8Rng,
    visit: F,
) -> Result<()>
where
    F: FnMut(&[u32]),
{
    if r > n {
        return Err(Error::SampleUniformity { r, n });
    }
    if r < 2 {
        return Err(Error::UniformityTooSmall(r));
    }
    match p {
        EdgeProbability::Never => {
            // still a valid (empty) walk; no coins are consumed
        }
        EdgeProbability::Always => walk_subsets(n, r, || true, visit),
        EdgeProbability::Half => {
            let mut buf = 0u64;
            let mut bits_left = 0u32;
            walk_subsets(
                n,
                r,
                move || {
                    if bits_left == 0 {
                        buf = rng.next_u64();
                        bits_left = 64;
                    }
                    let bit = buf & 1 == 1;
                    buf >>= 1;
                    bits_left -= 1;
                    bit
                },
                visit,
            )
        }
        EdgeProbability::Threshold(t) => walk_subsets(n, r, move || rng.next_u64() < t, visit),
    }
    Ok(())
}

fn walk_subsets<C, F>(n: usize, r: usize, mut coin: C, mut visit: F)
where
    C: FnMut() -> bool,
    F: FnMut(&[u32]),
{
    let mut subset: Vec<u32> = (0..r as u32).collect();
    let maxes: Vec<u32> = (0..r).map(|i| (n - r + i) as u32).collect();
    let last = r - 1;
    let last_max = maxes[last];
    loop {
        if coin() {
            visit(&subset);
        }
        // almost always only the last coordinate moves
        if subset[last] < last_max {
            subset[last] += 1;
            continue;
        }
        let mut i = last;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if subset[i] < maxes[i] {
                subset[i] += 1;
                for j in (i + 1)..r {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Samples H^(r)(n, p) for the given (seed, trial) into a hypergraph.
/// Identical parameters reproduce an identical edge list.
pub fn sample_hypergraph(n: usize, r: usize, p: f64, seed: u64, trial: u64) -> Result<Hypergraph> {
    let prob = EdgeProbability::new(p)?;
    let mut rng = trial_rng(seed, trial);
    let mut flat: Vec<u32> = Vec::new();
    for_each_present_edge(n, r, prob, &mut rng, |edge| flat.extend_from_slice(edge))?;
    Hypergraph::from_canonical(n, r, flat)
}
