//! Transmission and multiset-distance irregularity.
//!
//! Equal full-vertex-set multiset representations force equal
//! transmissions, so transmission-irregular graphs are a (strict) subset
//! of multiset-distance-irregular graphs; [`fixture_graph_x`] separates
//! the two classes.

use std::collections::HashSet;

use crate::graph::{DistanceMatrix, Graph};

/// Per-vertex sums of distances to all other vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmissionProfile {
    transmissions: Vec<u64>,
}

impl TransmissionProfile {
    pub fn transmissions(&self) -> &[u64] {
        &self.transmissions
    }

    pub fn transmission(&self, v: usize) -> u64 {
        self.transmissions[v]
    }
}

pub fn transmission_profile(dm: &DistanceMatrix) -> TransmissionProfile {
    let transmissions = (0..dm.order())
        .map(|v| dm.row(v).iter().map(|&d| u64::from(d)).sum())
        .collect();
    TransmissionProfile { transmissions }
}

/// True when all transmissions are pairwise different.
pub fn is_transmission_irregular(dm: &DistanceMatrix) -> bool {
    let profile = transmission_profile(dm);
    let distinct: HashSet<u64> = profile.transmissions().iter().copied().collect();
    distinct.len() == dm.order()
}

/// True when the multisets of each row of the distance matrix (the
/// representations towards the whole vertex set, 0 entry included) are
/// pairwise different.
pub fn is_multiset_distance_irregular(dm: &DistanceMatrix) -> bool {
    let n = dm.order();
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(n);
    for v in 0..n {
        let mut row = dm.row(v).to_vec();
        row.sort_unstable();
        if !seen.insert(row) {
            return false;
        }
    }
    true
}

/// An 8-vertex, 9-edge graph that is multiset distance irregular but not
/// transmission irregular: a 5-path along the bottom (vertices 0..=4) and
/// a top path 5-6-7 hung from vertex 1, with vertex 6 also joined to 2
/// and 3.
pub fn fixture_graph_x() -> Graph {
    Graph::from_edges(
        8,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (1, 5),
            (5, 6),
            (6, 7),
            (2, 6),
            (3, 6),
        ],
    )
    .expect("fixture is a valid connected graph")
}
