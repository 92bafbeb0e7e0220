//! Plain-text formats: `.hg` for hypergraphs and `.wt` for weightings.
//!
//! `.hg`: a header line `n r m`, then `m` lines of `r` vertex indices.
//! `.wt`: a header line `m w_max`, then `m` weights, one per line, aligned
//! with the canonical edge order. Lines starting with `#` are comments;
//! parsing is whitespace-tolerant, serializers emit exactly this shape.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, WeightAssignment};

fn parse_fields(line: &str, lineno: usize, expected: usize) -> Result<Vec<u64>> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != expected {
        return Err(Error::Parse {
            line: lineno,
            message: format!("expected {expected} fields, found {}", fields.len()),
        });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                message: format!("invalid integer `{f}`"),
            })
        })
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Parses the `.hg` format. The edge list is normalized, so re-serializing
/// reproduces the identical canonical form.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line `n r m`".into(),
    })?;
    let h = parse_fields(header, lineno, 3)?;
    let (n, r, m) = (h[0] as usize, h[1] as usize, h[2] as usize);
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: format!("expected {m} edge lines, input ended early"),
        })?;
        let vs = parse_fields(line, lineno, r)?;
        if let Some(&v) = vs.iter().find(|&&v| v > u32::MAX as u64) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("vertex index {v} too large"),
            });
        }
        edges.push(vs.into_iter().map(|v| v as u32).collect());
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lineno,
            message: "trailing content after declared edges".into(),
        });
    }
    Hypergraph::new(n, r, edges)
}

/// Serializes to the canonical `.hg` shape.
pub fn write_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {}",
        h.vertex_count(),
        h.uniformity(),
        h.edge_count()
    );
    for edge in h.edges() {
        let mut sep = "";
        for v in edge {
            let _ = write!(out, "{sep}{v}");
            sep = " ";
        }
        out.push('\n');
    }
    out
}

/// Parses the `.wt` format.
pub fn parse_weights(text: &str) -> Result<WeightAssignment> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line `m w_max`".into(),
    })?;
    let h = parse_fields(header, lineno, 2)?;
    let (m, w_max) = (h[0] as usize, h[1]);
    if w_max == 0 || w_max > u32::MAX as u64 {
        return Err(Error::Parse {
            line: lineno,
            message: format!("weight bound {w_max} out of range"),
        });
    }
    let mut weights = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: format!("expected {m} weight lines, input ended early"),
        })?;
        weights.push(parse_fields(line, lineno, 1)?[0] as u32);
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::Parse {
            line: lineno,
            message: "trailing content after declared weights".into(),
        });
    }
    WeightAssignment::new(w_max as u32, weights)
}

/// Serializes to the canonical `.wt` shape.
pub fn write_weights(w: &WeightAssignment) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", w.weights.len(), w.w_max);
    for weight in &w.weights {
        let _ = writeln!(out, "{weight}");
    }
    out
}
