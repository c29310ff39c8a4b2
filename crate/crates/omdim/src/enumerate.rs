//! Exhaustive enumeration of labelled connected graphs on small vertex
//! sets, by walking every edge subset and keeping the connected ones.

use thiserror::Error;

use crate::graph::Graph;

/// Above this the edge-subset space (2^21 for n = 7) stops being a
/// desk-scale object.
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("enumeration order {0} outside 2..={MAX_ENUMERATION_ORDER}")]
    OrderOutOfRange(usize),
}

pub(crate) fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Builds the graph selected by `mask` over `pairs`, or None when it is
/// disconnected.
pub(crate) fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Option<Graph> {
    let mut edges = Vec::with_capacity(mask.count_ones() as usize);
    for (i, &pair) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            edges.push(pair);
        }
    }
    Graph::from_edges(n, &edges).ok()
}

pub struct ConnectedGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let mask = self.next_mask;
            self.next_mask += 1;
            if let Some(g) = graph_from_mask(self.n, &self.pairs, mask) {
                return Some(g);
            }
        }
        None
    }
}

/// Every labelled simple connected graph on `{0..n-1}`, each exactly once,
/// in edge-subset-mask order.
pub fn enumerate_connected_labeled(n: usize) -> Result<ConnectedGraphs, EnumerationError> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(EnumerationError::OrderOutOfRange(n));
    }
    let pairs = vertex_pairs(n);
    let end = 1u64 << pairs.len();
    Ok(ConnectedGraphs {
        n,
        pairs,
        next_mask: 0,
        end,
    })
}
