//! Seeded random connected graphs: a uniform random tree backbone plus
//! independent extra edges.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Deterministic for a fixed `(n, extra_edge_prob, seed)` triple.
/// Connectivity is guaranteed by the tree backbone.
pub fn random_connected(n: usize, extra_edge_prob: f64, seed: u64) -> Graph {
    assert!(n >= 2, "need at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(extra_edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("tree backbone keeps the graph connected")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_connected() {
        for seed in 0..20 {
            let a = random_connected(9, 0.3, seed);
            let b = random_connected(9, 0.3, seed);
            assert_eq!(a, b);
            assert_eq!(a.order(), 9);
        }
        let sparse = random_connected(12, 0.0, 7);
        assert_eq!(sparse.edge_count(), 11);
    }
}
