//! Named graph generators, closed-form dimension values, and grid
//! certificates.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("family yields a disconnected graph")]
    DisconnectedResult,
    #[error("parameters outside the range of the closed form: {0}")]
    OutOfTheoremRange(String),
}

/// Families with a documented vertex numbering.
///
/// Grids flatten `(i, j)` to `i*t + j`; hypercube vertices are the bit
/// patterns `0..2^d`. `Empty(n)` is only usable as a product factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NamedFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// Complete multipartite graph with the given part sizes; parts are
    /// laid out consecutively from vertex 0.
    CompleteMultipartite(Vec<usize>),
    /// The edgeless graph on n vertices.
    Empty(usize),
    Petersen,
    /// `Grid(s, t)`: the Cartesian product of paths of orders s and t.
    Grid(usize, usize),
    Hypercube(u32),
}

pub fn generate(family: &NamedFamily) -> Result<Graph, FamilyError> {
    let build = |n: usize, edges: Vec<(usize, usize)>| {
        Graph::from_edges(n, &edges).map_err(|e| FamilyError::InvalidParams(e.to_string()))
    };
    match family {
        NamedFamily::Path(n) => {
            if *n < 2 {
                return Err(FamilyError::InvalidParams(format!("path order {n} < 2")));
            }
            build(*n, (0..n - 1).map(|i| (i, i + 1)).collect())
        }
        NamedFamily::Cycle(n) => {
            if *n < 3 {
                return Err(FamilyError::InvalidParams(format!("cycle order {n} < 3")));
            }
            build(*n, (0..*n).map(|i| (i, (i + 1) % n)).collect())
        }
        NamedFamily::Complete(n) => {
            if *n < 2 {
                return Err(FamilyError::InvalidParams(format!(
                    "complete order {n} < 2"
                )));
            }
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            build(*n, edges)
        }
        NamedFamily::CompleteMultipartite(parts) => {
            if parts.contains(&0) || parts.is_empty() {
                return Err(FamilyError::InvalidParams(
                    "multipartite parts must be positive".into(),
                ));
            }
            if parts.len() < 2 {
                return Err(FamilyError::DisconnectedResult);
            }
            let n: usize = parts.iter().sum();
            let mut part_of = Vec::with_capacity(n);
            for (idx, &p) in parts.iter().enumerate() {
                part_of.extend(std::iter::repeat_n(idx, p));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if part_of[u] != part_of[v] {
                        edges.push((u, v));
                    }
                }
            }
            build(n, edges)
        }
        NamedFamily::Empty(_) => Err(FamilyError::DisconnectedResult),
        NamedFamily::Petersen => {
            let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
            edges.extend((0..5).map(|i| (i, i + 5)));
            edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
            build(10, edges)
        }
        NamedFamily::Grid(s, t) => {
            let (s, t) = (*s, *t);
            if s == 0 || t == 0 || s * t < 2 {
                return Err(FamilyError::InvalidParams(format!(
                    "grid {s}x{t} has fewer than 2 vertices"
                )));
            }
            let mut edges = Vec::new();
            for i in 0..s {
                for j in 0..t {
                    if i + 1 < s {
                        edges.push((i * t + j, (i + 1) * t + j));
                    }
                    if j + 1 < t {
                        edges.push((i * t + j, i * t + j + 1));
                    }
                }
            }
            build(s * t, edges)
        }
        NamedFamily::Hypercube(d) => {
            let d = *d;
            if d == 0 || d > 16 {
                return Err(FamilyError::InvalidParams(format!(
                    "hypercube dimension {d} outside 1..=16"
                )));
            }
            let n = 1usize << d;
            let mut edges = Vec::new();
            for u in 0..n {
                for bit in 0..d {
                    let v = u ^ (1 << bit);
                    if v > u {
                        edges.push((u, v));
                    }
                }
            }
            build(n, edges)
        }
    }
}

/// Exact dimension where a closed form is known, `Ok(None)` where none is
/// (hypercubes of dimension >= 3).
pub fn closed_form_dimension(family: &NamedFamily) -> Result<Option<usize>, FamilyError> {
    match family {
        NamedFamily::Path(n) => {
            if *n < 2 {
                return Err(FamilyError::InvalidParams(format!("path order {n} < 2")));
            }
            Ok(Some(1))
        }
        NamedFamily::Cycle(n) => match *n {
            0..=2 => Err(FamilyError::InvalidParams(format!("cycle order {n} < 3"))),
            3 => Ok(Some(2)),
            4 => Ok(Some(3)),
            5 => Ok(Some(4)),
            _ => Ok(Some(3)),
        },
        NamedFamily::Complete(n) => {
            if *n < 2 {
                return Err(FamilyError::InvalidParams(format!(
                    "complete order {n} < 2"
                )));
            }
            Ok(Some(n - 1))
        }
        NamedFamily::CompleteMultipartite(parts) => {
            if parts.contains(&0) || parts.is_empty() {
                return Err(FamilyError::InvalidParams(
                    "multipartite parts must be positive".into(),
                ));
            }
            let k = parts.len();
            if k < 2 {
                return Err(FamilyError::DisconnectedResult);
            }
            if parts.iter().all(|&p| p == parts[0]) {
                return Ok(Some(k * parts[0] - 1));
            }
            let mut sorted = parts.clone();
            sorted.sort_unstable();
            let strictly_increasing = sorted.windows(2).all(|w| w[0] < w[1]);
            if strictly_increasing && sorted[0] >= 2 {
                Ok(Some(sorted.iter().sum::<usize>() - k))
            } else {
                Err(FamilyError::OutOfTheoremRange(format!(
                    "multipartite parts {parts:?} are neither all equal nor distinct with minimum 2"
                )))
            }
        }
        NamedFamily::Empty(_) => Err(FamilyError::DisconnectedResult),
        NamedFamily::Petersen => Ok(Some(9)),
        NamedFamily::Grid(s, t) => {
            if *s >= *t && *t >= 2 {
                Ok(Some(3))
            } else {
                Err(FamilyError::OutOfTheoremRange(format!(
                    "grid closed form needs s >= t >= 2, got {s}x{t}"
                )))
            }
        }
        NamedFamily::Hypercube(d) => match *d {
            0 => Err(FamilyError::InvalidParams("hypercube dimension 0".into())),
            1 => Ok(Some(1)),
            2 => Ok(Some(3)),
            _ => Ok(None),
        },
    }
}

/// A three-vertex outer multiset resolving set for the s x t grid
/// (s >= t >= 2), as flattened indices.
///
/// For s >= 4 the witness is {(0,0), (1,0), (s-1,0)}; the 3 x t grids use
/// {(0,0), (2,0), (2,1)}; the 2 x 2 grid is a 4-cycle where any three
/// vertices work.
pub fn grid_certificate(s: usize, t: usize) -> Result<Vec<usize>, FamilyError> {
    if !(s >= t && t >= 2) {
        return Err(FamilyError::InvalidParams(format!(
            "grid certificate needs s >= t >= 2, got {s}x{t}"
        )));
    }
    let flat = |i: usize, j: usize| i * t + j;
    let cert = if s >= 4 {
        vec![flat(0, 0), flat(1, 0), flat(s - 1, 0)]
    } else if s == 3 {
        vec![flat(0, 0), flat(2, 0), flat(2, 1)]
    } else {
        vec![flat(0, 0), flat(0, 1), flat(1, 0)]
    };
    let mut cert = cert;
    cert.sort_unstable();
    Ok(cert)
}
