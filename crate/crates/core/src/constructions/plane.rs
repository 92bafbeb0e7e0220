//! Projective planes of prime-power order from the coordinate construction.
//!
//! Points are the 1-dimensional subspaces of GF(q)^3, lines the kernels of
//! nonzero linear forms up to scaling. Canonical representatives have last
//! nonzero coordinate 1 and are enumerated in lexicographic coordinate
//! order, which fixes the numbering for golden files.

use crate::constructions::field::{finite_field, FiniteFieldTable};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    q: u64,
    /// Canonical coordinates of each point.
    points: Vec<[u64; 3]>,
    /// Each line is the sorted list of incident point indices, size q+1.
    lines: Vec<Vec<u32>>,
}

/// Builds P(q): q^2+q+1 points and lines, each line of size q+1, each point
/// on q+1 lines, any two points on exactly one line.
pub fn projective_plane(q: u64) -> Result<IncidenceStructure> {
    let field = finite_field(q)?;
    let reps = canonical_vectors(&field);
    let points = reps.clone();
    // the same representatives serve as line coefficient vectors
    let mut lines = Vec::with_capacity(reps.len());
    for form in &reps {
        let mut line: Vec<u32> = points
            .iter()
            .enumerate()
            .filter(|(_, pt)| dot_is_zero(&field, form, pt))
            .map(|(i, _)| i as u32)
            .collect();
        line.sort_unstable();
        lines.push(line);
    }
    Ok(IncidenceStructure { q, points, lines })
}

/// All vectors of GF(q)^3 with last nonzero coordinate 1, in lexicographic
/// order of (a, b, c).
fn canonical_vectors(field: &FiniteFieldTable) -> Vec<[u64; 3]> {
    let q = field.order();
    let mut out = Vec::with_capacity((q * q + q + 1) as usize);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                let canonical = match v.iter().rposition(|&x| x != 0) {
                    Some(i) => v[i] == 1,
                    None => false,
                };
                if canonical {
                    out.push(v);
                }
            }
        }
    }
    out
}

fn dot_is_zero(field: &FiniteFieldTable, a: &[u64; 3], b: &[u64; 3]) -> bool {
    let mut acc = 0;
    for i in 0..3 {
        acc = field.add(acc, field.mul(a[i], b[i]));
    }
    acc == 0
}

impl IncidenceStructure {
    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn line_count(&self) -> usize {
        self.lines.len()
    }

    pub fn point(&self, index: usize) -> &[u64; 3] {
        &self.points[index]
    }

    pub fn line(&self, index: usize) -> &[u32] {
        &self.lines[index]
    }

    pub fn lines(&self) -> impl ExactSizeIterator<Item = &[u32]> {
        self.lines.iter().map(|l| l.as_slice())
    }

    /// Sorted indices of the lines through a point.
    pub fn lines_through(&self, point: usize) -> Vec<u32> {
        self.lines
            .iter()
            .enumerate()
            .filter(|(_, l)| l.binary_search(&(point as u32)).is_ok())
            .map(|(i, _)| i as u32)
            .collect()
    }

    /// The unique line through two distinct points, if the structure is a
    /// projective plane.
    pub fn common_line(&self, p1: u32, p2: u32) -> Option<u32> {
        self.lines
            .iter()
            .position(|l| l.binary_search(&p1).is_ok() && l.binary_search(&p2).is_ok())
            .map(|i| i as u32)
    }

    /// Exhaustively verifies the five incidence invariants:
    /// point count, line count, line size, point degree, and unique
    /// common lines for every point pair.
    pub fn verify_invariants(&self) -> std::result::Result<(), String> {
        let q = self.q as usize;
        let expected = q * q + q + 1;
        if self.points.len() != expected {
            return Err(format!(
                "expected {expected} points, got {}",
                self.points.len()
            ));
        }
        if self.lines.len() != expected {
            return Err(format!(
                "expected {expected} lines, got {}",
                self.lines.len()
            ));
        }
        for (i, line) in self.lines.iter().enumerate() {
            if line.len() != q + 1 {
                return Err(format!(
                    "line {i} has {} points, expected {}",
                    line.len(),
                    q + 1
                ));
            }
        }
        let mut degree = vec![0usize; self.points.len()];
        for line in &self.lines {
            for &p in line {
                degree[p as usize] += 1;
            }
        }
        if let Some(p) = degree.iter().position(|&d| d != q + 1) {
            return Err(format!(
                "point {p} lies on {} lines, expected {}",
                degree[p],
                q + 1
            ));
        }
        let mut seen = vec![0u32; self.points.len() * self.points.len()];
        for line in &self.lines {
            for (a, &p1) in line.iter().enumerate() {
                for &p2 in &line[a + 1..] {
                    seen[p1 as usize * self.points.len() + p2 as usize] += 1;
                }
            }
        }
        for p1 in 0..self.points.len() {
            for p2 in (p1 + 1)..self.points.len() {
                let count = seen[p1 * self.points.len() + p2];
                if count != 1 {
                    return Err(format!("points {p1},{p2} lie on {count} common lines"));
                }
            }
        }
        Ok(())
    }
}
