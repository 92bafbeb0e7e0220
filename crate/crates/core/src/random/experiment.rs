//! Seeded Monte Carlo experiments over H^(r)(n, p).
//!
//! A trial streams the subset coins twice: the first pass accumulates
//! degrees, the second (only when an edge-level statistic was requested)
//! re-walks the identical stream to test per-edge predicates against the
//! final degrees. Trials are independent streams, so they can run on any
//! number of threads with bit-identical aggregates.

use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::parallel::{map_indexed, Jobs};
use crate::random::sample::{for_each_present_edge, trial_rng, EdgeProbability};
use crate::random::stats::collision_stats_of_degrees;

/// Statistics the experiment driver can track.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    /// Number of edges.
    Edges,
    /// Number of equal-degree vertex pairs.
    X2,
    /// Indicator: no equal-degree pair.
    X2Zero,
    /// Indicator: no equal-degree triple.
    X3Zero,
    /// Indicator: no (d, d, d, d+1) degree pattern.
    OffsetQuadFree,
    /// Indicator: no edge contains an equal-degree pair.
    Strongly1Weighted,
    /// Indicator: no edge has all degrees equal.
    Weakly1Weighted,
    /// Indicator: every vertex pair lies in some edge.
    AllPairsCovered,
}

impl Statistic {
    pub fn name(&self) -> &'static str {
        match self {
            Statistic::Edges => "edges",
            Statistic::X2 => "x2",
            Statistic::X2Zero => "x2_zero",
            Statistic::X3Zero => "x3_zero",
            Statistic::OffsetQuadFree => "offset_quad_free",
            Statistic::Strongly1Weighted => "strongly_1_weighted",
            Statistic::Weakly1Weighted => "weakly_1_weighted",
            Statistic::AllPairsCovered => "all_pairs_covered",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "edges" => Statistic::Edges,
            "x2" => Statistic::X2,
            "x2_zero" | "x2-zero" => Statistic::X2Zero,
            "x3_zero" | "x3-zero" => Statistic::X3Zero,
            "offset_quad_free" | "offset-quad-free" => Statistic::OffsetQuadFree,
            "strongly_1_weighted" | "strong1" => Statistic::Strongly1Weighted,
            "weakly_1_weighted" | "weak1" => Statistic::Weakly1Weighted,
            "all_pairs_covered" | "pairs-covered" => Statistic::AllPairsCovered,
            _ => return None,
        })
    }

    fn needs_edge_pass(&self) -> bool {
        matches!(
            self,
            Statistic::Strongly1Weighted | Statistic::Weakly1Weighted | Statistic::AllPairsCovered
        )
    }

    /// Indicators aggregate to frequencies.
    pub fn is_indicator(&self) -> bool {
        !matches!(self, Statistic::Edges | Statistic::X2)
    }
}

/// Aggregate of one statistic over all trials.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct StatSummary {
    pub statistic: Statistic,
    pub mean: f64,
    /// Sample variance (n-1 denominator; 0 for a single trial).
    pub variance: f64,
    pub std_error: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExperimentReport {
    pub n: usize,
    pub r: usize,
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    pub summaries: Vec<StatSummary>,
    pub wall_ms: u128,
}

impl ExperimentReport {
    pub fn summary(&self, statistic: Statistic) -> Option<&StatSummary> {
        self.summaries.iter().find(|s| s.statistic == statistic)
    }
}

/// Raw per-trial values, in statistic order.
#[derive(Clone, Debug)]
pub struct TrialValues {
    pub statistics: Vec<Statistic>,
    /// `values[t][s]` is statistic `s` in trial `t`.
    pub values: Vec<Vec<u64>>,
}

/// Runs `trials` independent samples of H^(r)(n, p) and aggregates the
/// requested statistics. Identical arguments produce identical reports
/// regardless of `jobs` (wall time aside).
pub fn run_experiment(
    n: usize,
    r: usize,
    p: f64,
    trials: u64,
    seed: u64,
    statistics: &[Statistic],
    jobs: Jobs,
) -> Result<(ExperimentReport, TrialValues)> {
    let started = Instant::now();
    let prob = EdgeProbability::new(p)?;
    let mut stats: Vec<Statistic> = statistics.to_vec();
    stats.sort_unstable();
    stats.dedup();
    let edge_pass = stats.iter().any(Statistic::needs_edge_pass);

    // validate once up front so worker threads cannot fail
    if r > n {
        return Err(crate::error::Error::SampleUniformity { r, n });
    }
    if r < 2 {
        return Err(crate::error::Error::UniformityTooSmall(r));
    }

    let per_trial: Vec<Vec<u64>> = map_indexed(trials as usize, jobs, |trial| {
        run_trial(n, r, prob, seed, trial as u64, &stats, edge_pass)
    });

    let tf = trials as f64;
    let mut summaries = Vec::with_capacity(stats.len());
    for (idx, &statistic) in stats.iter().enumerate() {
        let sum: u128 = per_trial.iter().map(|v| v[idx] as u128).sum();
        let sum_sq: u128 = per_trial
            .iter()
            .map(|v| (v[idx] as u128) * (v[idx] as u128))
            .sum();
        let mean = sum as f64 / tf;
        let variance = if trials > 1 {
            (sum_sq as f64 - tf * mean * mean) / (tf - 1.0)
        } else {
            0.0
        };
        let variance = variance.max(0.0);
        summaries.push(StatSummary {
            statistic,
            mean,
            variance,
            std_error: (variance / tf).sqrt(),
        });
    }

    Ok((
        ExperimentReport {
            n,
            r,
            p,
            trials,
            seed,
            summaries,
            wall_ms: started.elapsed().as_millis(),
        },
        TrialValues {
            statistics: stats,
            values: per_trial,
        },
    ))
}

fn run_trial(
    n: usize,
    r: usize,
    prob: EdgeProbability,
    seed: u64,
    trial: u64,
    stats: &[Statistic],
    edge_pass: bool,
) -> Vec<u64> {
    // pass 1: degrees
    let mut degrees = vec![0u32; n];
    let mut edges = 0u64;
    let mut rng = trial_rng(seed, trial);
    for_each_present_edge(n, r, prob, &mut rng, |edge| {
        edges += 1;
        for &v in edge {
            degrees[v as usize] += 1;
        }
    })
    .expect("parameters validated by the driver");

    let collision = collision_stats_of_degrees(&degrees);

    // pass 2: re-walk the identical stream for edge-level predicates
    let mut strongly_1 = true;
    let mut weakly_1 = true;
    let mut covered = vec![false; n * n];
    if edge_pass {
        let mut rng = trial_rng(seed, trial);
        for_each_present_edge(n, r, prob, &mut rng, |edge| {
            let mut all_equal = true;
            for i in 0..edge.len() {
                let di = degrees[edge[i] as usize];
                for &u in &edge[i + 1..] {
                    if di == degrees[u as usize] {
                        strongly_1 = false;
                    } else {
                        all_equal = false;
                    }
                    covered[edge[i] as usize * n + u as usize] = true;
                }
            }
            if all_equal {
                weakly_1 = false;
            }
        })
        .expect("parameters validated by the driver");
    }
    let all_pairs = edge_pass && (0..n).all(|u| ((u + 1)..n).all(|v| covered[u * n + v]));

    stats
        .iter()
        .map(|s| match s {
            Statistic::Edges => edges,
            Statistic::X2 => collision.x2,
            Statistic::X2Zero => (collision.x2 == 0) as u64,
            Statistic::X3Zero => (collision.x3 == 0) as u64,
            Statistic::OffsetQuadFree => (collision.offset_quads == 0) as u64,
            Statistic::Strongly1Weighted => strongly_1 as u64,
            Statistic::Weakly1Weighted => weakly_1 as u64,
            Statistic::AllPairsCovered => all_pairs as u64,
        })
        .collect()
}
