//! Pigeonhole infeasibility certificates for blow-up hypergraphs.
//!
//! With w < |E1| = q^2+q+1, any weighting repeats a weight on two point
//! edges e(p1), e(p2); the unique line through p1 and p2 yields a line edge
//! whose flags (p1, l) and (p2, l) receive equal colors, so no strong
//! coloring exists. The certificate records the counting step and a common
//! line for every point pair; an enumerative mode walks every assignment of
//! {1..w} to E1 and locates the collision witness explicitly.

use serde::Serialize;

use crate::constructions::blowup::Blowup;
use crate::constructions::plane::IncidenceStructure;
use crate::error::{Error, Result};
use crate::parallel::{map_indexed, Jobs};

/// How hard the certificate should work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpotCheck {
    /// Verify the counting argument and the co-line table only.
    CountingOnly,
    /// Additionally enumerate all w^|E1| point-edge assignments and verify
    /// a collision witness for each.
    FullEnumeration,
}

/// A witness pair for one assignment: two points with equal edge weight and
/// the line they share.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CollisionWitness {
    pub p1: u32,
    pub p2: u32,
    pub line: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct PigeonholeCertificate {
    /// |E1| = q^2+q+1, strictly larger than the weight bound.
    pub e1_count: usize,
    pub w: u32,
    /// For each point pair (p1 < p2), a common line index.
    pub coline_witness: Vec<CollisionWitness>,
    /// Number of E1 assignments enumerated (w^|E1|), when requested.
    pub enumerated_assignments: Option<u64>,
}

/// Validates that the blow-up belongs to the plane: the recorded E1/E2 edge
/// images must contain exactly the expected flags.
fn validate_structure(plane: &IncidenceStructure, blowup: &Blowup) -> Result<()> {
    if blowup.q != plane.order() {
        return Err(Error::StructureMismatch(format!(
            "plane has order {}, blow-up has order {}",
            plane.order(),
            blowup.q
        )));
    }
    if blowup.e1.len() != plane.point_count() || blowup.e2.len() != plane.line_count() {
        return Err(Error::StructureMismatch(
            "E1/E2 split does not match the plane size".into(),
        ));
    }
    for (p, &e) in blowup.e1.iter().enumerate() {
        let expected: Vec<u32> = plane
            .lines_through(p)
            .into_iter()
            .map(|l| blowup.flag_index(p as u32, l).unwrap_or(u32::MAX))
            .collect();
        let edge = blowup.hypergraph.edge(e);
        for v in expected {
            if !edge.contains(&v) {
                return Err(Error::StructureMismatch(format!(
                    "edge image of point {p} is missing a flag"
                )));
            }
        }
    }
    for (l, &e) in blowup.e2.iter().enumerate() {
        let edge = blowup.hypergraph.edge(e);
        for &p in plane.line(l) {
            let v = blowup
                .flag_index(p, l as u32)
                .ok_or_else(|| Error::StructureMismatch(format!("missing flag ({p},{l})")))?;
            if !edge.contains(&v) {
                return Err(Error::StructureMismatch(format!(
                    "edge image of line {l} is missing flag ({p},{l})"
                )));
            }
        }
    }
    Ok(())
}

/// Builds the certificate that the blow-up is not strongly w-weighted.
/// Rejects w > q^2+q, where the counting argument does not apply.
pub fn blowup_unsat_certificate(
    plane: &IncidenceStructure,
    blowup: &Blowup,
    w: u32,
    spot_check: SpotCheck,
    jobs: Jobs,
) -> Result<PigeonholeCertificate> {
    let q = plane.order();
    let max_w = (q * q + q) as u32;
    if w > max_w {
        return Err(Error::CertificateWeightTooLarge { w, max: max_w });
    }
    validate_structure(plane, blowup)?;
    let e1_count = blowup.e1.len();
    debug_assert!(e1_count as u32 > w);

    let mut coline_witness = Vec::with_capacity(e1_count * (e1_count - 1) / 2);
    for p1 in 0..plane.point_count() as u32 {
        for p2 in (p1 + 1)..plane.point_count() as u32 {
            let line = plane.common_line(p1, p2).ok_or_else(|| {
                Error::StructureMismatch(format!("points {p1},{p2} share no line"))
            })?;
            coline_witness.push(CollisionWitness { p1, p2, line });
        }
    }

    let enumerated_assignments = match spot_check {
        SpotCheck::CountingOnly => None,
        SpotCheck::FullEnumeration => Some(enumerate_e1(plane, blowup, w, jobs)?),
    };

    Ok(PigeonholeCertificate {
        e1_count,
        w,
        coline_witness,
        enumerated_assignments,
    })
}

/// Walks all w^|E1| assignments of point-edge weights. For each, finds the
/// first repeated weight pair (p1, p2), their common line, and verifies that
/// the two flags (p1, l), (p2, l) lie in the image of f(l) and receive equal
/// E1-restricted colors. Returns the number of assignments checked.
fn enumerate_e1(plane: &IncidenceStructure, blowup: &Blowup, w: u32, jobs: Jobs) -> Result<u64> {
    let e1_count = blowup.e1.len();
    let total = (w as u64)
        .checked_pow(e1_count as u32)
        .expect("enumeration space too large");
    // chunk on the leading digits to spread work
    let chunks = if total > 4096 { 4096u64 } else { 1 };
    let chunk_len = total.div_ceil(chunks);
    let failures: Vec<Option<u64>> = map_indexed(chunks as usize, jobs, |chunk| {
        let lo = chunk as u64 * chunk_len;
        let hi = total.min(lo + chunk_len);
        let mut weights = vec![0u32; e1_count];
        (lo..hi).find(|&code| {
            let mut rest = code;
            for slot in weights.iter_mut().rev() {
                *slot = (rest % w as u64) as u32 + 1;
                rest /= w as u64;
            }
            !witness_ok(plane, blowup, &weights)
        })
    });
    if let Some(code) = failures.into_iter().flatten().next() {
        return Err(Error::StructureMismatch(format!(
            "assignment {code} produced no verifiable witness"
        )));
    }
    Ok(total)
}

/// Finds the lexicographically first weight collision (guaranteed by the
/// pigeonhole when w < |E1|) and re-checks the witness.
fn witness_ok(plane: &IncidenceStructure, blowup: &Blowup, e1_weights: &[u32]) -> bool {
    let mut found: Option<(u32, u32)> = None;
    'outer: for p1 in 0..e1_weights.len() as u32 {
        for p2 in (p1 + 1)..e1_weights.len() as u32 {
            if e1_weights[p1 as usize] == e1_weights[p2 as usize] {
                found = Some((p1, p2));
                break 'outer;
            }
        }
    }
    let Some((p1, p2)) = found else { return false };
    let Some(line) = plane.common_line(p1, p2) else {
        return false;
    };
    let (Some(v1), Some(v2)) = (blowup.flag_index(p1, line), blowup.flag_index(p2, line)) else {
        return false;
    };
    // equal colors restricted to E1 weights, and both flags inside the
    // image of f(line)
    let edge = blowup.hypergraph.edge(blowup.e2[line as usize]);
    edge.contains(&v1) && edge.contains(&v2)
}
