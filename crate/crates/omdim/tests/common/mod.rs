//! Independent oracles shared by the integration suites. Everything here
//! recomputes from first principles — Floyd–Warshall distances, unpruned
//! subset enumeration, a count recurrence, a second graph6 encoder — and
//! stays off the library's solver paths.
#![allow(dead_code)]

use omdim::Graph;

/// Closure-style all-pairs distances, independent of the library's BFS.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let big = u32::MAX / 4;
    let mut dist = vec![vec![big; n]; n];
    for (u, row) in dist.iter_mut().enumerate() {
        row[u] = 0;
        for v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if dist[i][k] + dist[k][j] < dist[i][j] {
                    dist[i][j] = dist[i][k] + dist[k][j];
                }
            }
        }
    }
    dist
}

fn subset_resolves(dist: &[Vec<u32>], n: usize, mask: u32) -> bool {
    let mut reps: Vec<Vec<u32>> = Vec::new();
    for (u, row) in dist.iter().enumerate() {
        if mask >> u & 1 == 1 {
            continue;
        }
        let mut rep: Vec<u32> = (0..n)
            .filter(|&w| mask >> w & 1 == 1)
            .map(|w| row[w])
            .collect();
        rep.sort_unstable();
        reps.push(rep);
    }
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if reps[i] == reps[j] {
                return false;
            }
        }
    }
    true
}

/// Outer multiset dimension straight from the definition: every subset of
/// every size, no pruning, no shortcuts. Only sensible for n <= ~10.
pub fn naive_dimension(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 16, "naive oracle is for small graphs");
    let dist = floyd_warshall(g);
    for k in 1..n {
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize == k && subset_resolves(&dist, n, mask) {
                return k;
            }
        }
    }
    n - 1
}

/// Number of connected labelled graphs per order, via the classical
/// complement recurrence over binomials — no graph is ever built.
#[allow(clippy::needless_range_loop)]
pub fn connected_labeled_counts(max_order: usize) -> Vec<u128> {
    let choose = |n: usize, k: usize| -> u128 {
        if k > n {
            return 0;
        }
        let mut result: u128 = 1;
        for i in 0..k {
            result = result * (n - i) as u128 / (i + 1) as u128;
        }
        result
    };
    let mut counts = vec![0u128; max_order + 1];
    for m in 1..=max_order {
        let total = 1u128 << (m * (m - 1) / 2);
        let mut attached = 0u128;
        for k in 1..m {
            attached +=
                choose(m - 1, k - 1) * counts[k] * (1u128 << ((m - k) * (m - k - 1) / 2));
        }
        counts[m] = total - attached;
    }
    counts
}

/// Second graph6 encoder, written along a different route (explicit bit
/// string, then 6-character chunking) to cross-check the library's
/// arithmetic packing.
pub fn reference_encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bits = String::new();
    for v in 1..n {
        for u in 0..v {
            bits.push(if g.has_edge(u, v) { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12u32, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    for chunk in bits.as_bytes().chunks(6) {
        let value = chunk.iter().fold(0u8, |acc, &c| acc * 2 + (c - b'0'));
        out.push((value + 63) as char);
    }
    out
}
