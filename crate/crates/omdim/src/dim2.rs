//! Recognition of graphs with outer multiset dimension 2.
//!
//! A 2-element basis must span distance at most 2 (the two mid-path
//! neighbours on a longer geodesic would share their representation), so
//! the decision procedure only has to test the O(n * maxdeg^2) close
//! pairs, each in O(n) — cubic overall. Graphs owning an *adjacent*
//! 2-basis are exactly the two-path-plus-triangle-base family built by
//! [`generate_family_f`].

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::multiset::is_outer_multiset_resolving;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("layer partition needs a nonempty source set")]
    EmptySource,
    #[error("the given pair is not an outer multiset basis")]
    NotABasis,
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
}

/// Distance layers around a source set: `layers()[k]` holds the vertices
/// whose minimum distance to the set is exactly k. Layer 0 is the set
/// itself and the layers partition the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    source: Vec<usize>,
    layers: Vec<Vec<usize>>,
}

impl LayerPartition {
    pub fn source(&self) -> &[usize] {
        &self.source
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// Largest occupied layer index.
    pub fn max_index(&self) -> usize {
        self.layers.len() - 1
    }
}

pub fn layer_partition(
    dm: &DistanceMatrix,
    source: &[usize],
) -> Result<LayerPartition, RecognitionError> {
    if source.is_empty() {
        return Err(RecognitionError::EmptySource);
    }
    let n = dm.order();
    let mut member = FixedBitSet::with_capacity(n);
    for &x in source {
        member.insert(x);
    }
    let source: Vec<usize> = member.ones().collect();
    let mut layers: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        let k = source
            .iter()
            .map(|&x| dm.dist(u, x))
            .min()
            .expect("source is nonempty") as usize;
        if layers.len() <= k {
            layers.resize(k + 1, Vec::new());
        }
        layers[k].push(u);
    }
    debug_assert!(layers.iter().all(|l| !l.is_empty()));
    Ok(LayerPartition { source, layers })
}

/// Layer-size conditions every 2-element basis satisfies: all layers k >= 1
/// have at most 3 vertices, and when the basis vertices are adjacent, at
/// most 2 with non-increasing sizes.
///
/// Returns `NotABasis` unless the pair really is an outer multiset basis
/// (a resolving pair of a non-path graph).
pub fn check_layer_lemma(
    g: &Graph,
    dm: &DistanceMatrix,
    basis: (usize, usize),
) -> Result<bool, RecognitionError> {
    let (u, v) = basis;
    if u == v || g.is_path_graph() || !is_outer_multiset_resolving(dm, &[u, v]) {
        return Err(RecognitionError::NotABasis);
    }
    let lp = layer_partition(dm, &[u, v])?;
    let sizes: Vec<usize> = lp.layers()[1..].iter().map(|l| l.len()).collect();
    let mut ok = sizes.iter().all(|&s| s <= 3);
    if g.has_edge(u, v) {
        ok &= sizes.iter().all(|&s| s <= 2);
        ok &= sizes.windows(2).all(|w| w[1] <= w[0]);
    }
    Ok(ok)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dim2Decision {
    DimensionOne,
    DimensionTwo {
        /// Lexicographically first resolving pair at distance <= 2.
        basis: (usize, usize),
    },
    GreaterThanTwo,
}

/// Decides whether the outer multiset dimension is 1, 2, or larger.
///
/// Paths are the dimension-1 graphs. Otherwise only pairs at distance at
/// most 2 can resolve, and a pair resolves when the distance pairs
/// `{{d(u,x), d(v,x)}}` over the outside vertices are pairwise different.
pub fn decide_dim2(g: &Graph) -> Dim2Decision {
    if g.is_path_graph() {
        return Dim2Decision::DimensionOne;
    }
    let n = g.order();
    let dm = all_pairs_distances(g);
    let mut seen: HashSet<(u32, u32)> = HashSet::with_capacity(n);
    for u in 0..n {
        for v in u + 1..n {
            if dm.dist(u, v) > 2 {
                continue;
            }
            seen.clear();
            let mut distinct = true;
            for x in 0..n {
                if x == u || x == v {
                    continue;
                }
                let a = dm.dist(x, u);
                let b = dm.dist(x, v);
                let key = if a <= b { (a, b) } else { (b, a) };
                if !seen.insert(key) {
                    distinct = false;
                    break;
                }
            }
            if distinct {
                return Dim2Decision::DimensionTwo { basis: (u, v) };
            }
        }
    }
    Dim2Decision::GreaterThanTwo
}

/// Parameters of the family of graphs with an adjacent 2-element basis.
///
/// Vertices are two paths `u_0..u_r` and `v_0..v_s` plus the mandatory
/// triangle base `u_0 v_0`, `u_0 v_1`. Optional rungs: `u_i v_i` for
/// indices in `cross_same` (within `1..=min(r,s)`) and `u_i v_{i+1}` for
/// indices in `cross_next` (within `1..=min(r,s-1)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFParams {
    pub r: usize,
    pub s: usize,
    pub cross_same: Vec<usize>,
    pub cross_next: Vec<usize>,
}

impl FamilyFParams {
    /// Index of `u_i` in the generated graph.
    pub fn u(&self, i: usize) -> usize {
        i
    }

    /// Index of `v_j` in the generated graph.
    pub fn v(&self, j: usize) -> usize {
        self.r + 1 + j
    }

    /// The adjacent pair `(u_0, v_0)` that acts as the family's basis.
    pub fn base_pair(&self) -> (usize, usize) {
        (self.u(0), self.v(0))
    }
}

/// Builds the family member on `r + s + 2` vertices.
pub fn generate_family_f(p: &FamilyFParams) -> Result<Graph, RecognitionError> {
    if p.s < 1 {
        return Err(RecognitionError::InvalidParams(
            "s must be at least 1".into(),
        ));
    }
    let same_max = p.r.min(p.s);
    let next_max = p.r.min(p.s.saturating_sub(1));
    for &i in &p.cross_same {
        if i < 1 || i > same_max {
            return Err(RecognitionError::InvalidParams(format!(
                "cross_same index {i} outside 1..={same_max}"
            )));
        }
    }
    for &i in &p.cross_next {
        if i < 1 || i > next_max {
            return Err(RecognitionError::InvalidParams(format!(
                "cross_next index {i} outside 1..={next_max}"
            )));
        }
    }
    let n = p.r + p.s + 2;
    let mut edges = vec![(p.u(0), p.v(0)), (p.u(0), p.v(1))];
    for i in 1..=p.r {
        edges.push((p.u(i - 1), p.u(i)));
    }
    for j in 1..=p.s {
        edges.push((p.v(j - 1), p.v(j)));
    }
    for &i in &p.cross_same {
        edges.push((p.u(i), p.v(i)));
    }
    for &i in &p.cross_next {
        edges.push((p.u(i), p.v(i + 1)));
    }
    Ok(Graph::from_edges(n, &edges).expect("family construction is connected"))
}

/// Lexicographically first adjacent pair that is an outer multiset basis,
/// if any. Paths are excluded outright: their dimension is 1, so no pair
/// can be a basis.
pub fn has_adjacent_2_basis(g: &Graph) -> Option<(usize, usize)> {
    if g.is_path_graph() {
        return None;
    }
    let dm = all_pairs_distances(g);
    let n = g.order();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) && is_outer_multiset_resolving(&dm, &[u, v]) {
                return Some((u, v));
            }
        }
    }
    None
}
