//! Multiset representations, resolving-set predicates, and the exact
//! outer-multiset-dimension solver.
//!
//! A set `S` is *outer multiset resolving* when the multisets of distances
//! from the vertices outside `S` to the members of `S` are pairwise
//! different. The dimension is the size of a smallest such set; it is at
//! most n-1 because a single outside vertex is distinguished vacuously.
//! Unlike the vector variant, feasibility is not monotone under supersets,
//! so the solver enumerates sizes from a twin-derived floor upward and
//! reports the lexicographically first witness of the minimum size.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::graph::{
    all_pairs_distances, twin_classes, DistanceMatrix, Graph, GraphError, TwinPartition,
};

/// A sorted multiset of distances, compared and hashed structurally.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistanceMultiset {
    entries: Vec<u32>,
}

impl DistanceMultiset {
    pub fn from_distances(mut entries: Vec<u32>) -> Self {
        entries.sort_unstable();
        DistanceMultiset { entries }
    }

    /// Non-decreasing entries.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Run-length view: `(distance, multiplicity)` pairs.
    pub fn runs(&self) -> Vec<(u32, usize)> {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &d in &self.entries {
            match runs.last_mut() {
                Some((value, count)) if *value == d => *count += 1,
                _ => runs.push((d, 1)),
            }
        }
        runs
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all entries.
    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&d| u64::from(d)).sum()
    }
}

impl fmt::Display for DistanceMultiset {
    /// Renders as `{{1^3, 2, 5^2}}`, collapsing runs into exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{{")?;
        for (i, (d, k)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if k == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{k}")?;
            }
        }
        write!(f, "}}}}")
    }
}

/// The multiset of distances from `u` to the members of `set`.
///
/// `set` is treated as a set (duplicates ignored); `u` may belong to it,
/// in which case the result contains a 0 entry.
pub fn multiset_representation(
    dm: &DistanceMatrix,
    u: usize,
    set: &[usize],
) -> Result<DistanceMultiset, GraphError> {
    let n = dm.order();
    if u >= n {
        return Err(GraphError::VertexOutOfRange { vertex: u, order: n });
    }
    let mut member = FixedBitSet::with_capacity(n);
    for &w in set {
        if w >= n {
            return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
        }
        member.insert(w);
    }
    let distances = member.ones().map(|w| dm.dist(u, w)).collect();
    Ok(DistanceMultiset::from_distances(distances))
}

/// True when all vertices outside `set` have pairwise different multiset
/// representations. At most one outside vertex counts as resolving.
///
/// Panics if `set` contains an out-of-range vertex.
pub fn is_outer_multiset_resolving(dm: &DistanceMatrix, set: &[usize]) -> bool {
    let n = dm.order();
    let mut member = FixedBitSet::with_capacity(n);
    for &w in set {
        member.insert(w);
    }
    let outside = n - member.count_ones(..);
    if outside <= 1 {
        return true;
    }
    let members: Vec<usize> = member.ones().collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(outside);
    for u in 0..n {
        if member.contains(u) {
            continue;
        }
        let mut key: Vec<u32> = members.iter().map(|&w| dm.dist(u, w)).collect();
        key.sort_unstable();
        if !seen.insert(key) {
            return false;
        }
    }
    true
}

/// Classical resolving-set test: the distance vectors of *all* vertices
/// towards the ordered list `set` must be pairwise different.
pub fn is_vector_resolving(dm: &DistanceMatrix, set: &[usize]) -> bool {
    let n = dm.order();
    let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(n);
    for v in 0..n {
        let key: Vec<u32> = set.iter().map(|&w| dm.dist(v, w)).collect();
        if !seen.insert(key) {
            return false;
        }
    }
    true
}

/// Twins have equal distances to every third vertex, so a resolving set
/// omits at most one vertex per twin class. Summing `|class| - 1` gives a
/// lower bound on the dimension.
pub fn twin_lower_bound(tp: &TwinPartition) -> usize {
    tp.classes().iter().map(|c| c.vertices.len() - 1).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    /// Paths have dimension 1 with the smaller-labelled endpoint as basis.
    FastPathPath,
    /// Regular graphs of diameter at most 2 have dimension n-1.
    FastPathExtremal,
    ClosedForm,
    Search,
}

impl SolveMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveMethod::FastPathPath => "fast-path-path",
            SolveMethod::FastPathExtremal => "fast-path-extremal",
            SolveMethod::ClosedForm => "closed-form",
            SolveMethod::Search => "search",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub dimension: usize,
    /// A witnessing outer multiset resolving set of minimum size; always
    /// the lexicographically first one of that size.
    pub basis: Vec<usize>,
    pub method: SolveMethod,
}

#[derive(Debug, Clone, Copy)]
pub struct SolveOptions {
    /// Shortcut regular diameter-<=2 graphs to n-1. The result is the same
    /// either way; only the route differs.
    pub use_fast_paths: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            use_fast_paths: true,
        }
    }
}

/// Computes the exact outer multiset dimension with a witnessing basis.
///
/// Paths are answered directly (their two endpoints are the only resolving
/// singletons). Otherwise subset sizes are searched in ascending order
/// starting from the twin lower bound; within a size, candidates that omit
/// two vertices of one twin class are pruned, and the remaining subsets
/// are visited lexicographically. Size n-1 always succeeds, so the search
/// terminates.
pub fn outer_multiset_dimension(g: &Graph, opts: SolveOptions) -> DimensionResult {
    let n = g.order();
    if g.is_path_graph() {
        let endpoint = (0..n)
            .find(|&v| g.degree(v) == 1)
            .expect("a path has endpoints");
        return DimensionResult {
            dimension: 1,
            basis: vec![endpoint],
            method: SolveMethod::FastPathPath,
        };
    }
    let dm = all_pairs_distances(g);
    if opts.use_fast_paths && g.is_regular() && dm.diameter() <= 2 {
        return DimensionResult {
            dimension: n - 1,
            basis: (0..n - 1).collect(),
            method: SolveMethod::FastPathExtremal,
        };
    }
    let tp = twin_classes(g);
    let floor = twin_lower_bound(&tp).max(1);
    for size in floor..n {
        if let Some(basis) = first_resolving_of_size(&dm, &tp, size) {
            return DimensionResult {
                dimension: size,
                basis,
                method: SolveMethod::Search,
            };
        }
    }
    unreachable!("every set of size n-1 resolves vacuously")
}

/// Lexicographically first resolving subset of the given size, or None.
///
/// Skipped candidates all omit two members of one twin class and therefore
/// cannot resolve, so the first hit is also the global lexicographic first.
fn first_resolving_of_size(
    dm: &DistanceMatrix,
    tp: &TwinPartition,
    size: usize,
) -> Option<Vec<usize>> {
    let mut omitted = vec![0usize; tp.classes().len()];
    let mut chosen = Vec::with_capacity(size);
    extend_subset(dm, tp, size, 0, &mut omitted, &mut chosen)
}

fn extend_subset(
    dm: &DistanceMatrix,
    tp: &TwinPartition,
    need: usize,
    start: usize,
    omitted: &mut [usize],
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let n = dm.order();
    if need == 0 {
        // the unpicked tail is omitted as well
        let mut bumped = Vec::new();
        let mut feasible = true;
        for v in start..n {
            let c = tp.class_of(v);
            omitted[c] += 1;
            bumped.push(c);
            if omitted[c] > 1 {
                feasible = false;
                break;
            }
        }
        let hit = feasible && is_outer_multiset_resolving(dm, chosen);
        for c in bumped {
            omitted[c] -= 1;
        }
        return if hit { Some(chosen.clone()) } else { None };
    }

    let mut result = None;
    let mut bumped = Vec::new();
    let mut v = start;
    while v + need <= n {
        chosen.push(v);
        if let Some(found) = extend_subset(dm, tp, need - 1, v + 1, omitted, chosen) {
            chosen.pop();
            result = Some(found);
            break;
        }
        chosen.pop();
        // from here on v is omitted; once a class loses two, no later
        // choice in this frame can recover
        let c = tp.class_of(v);
        omitted[c] += 1;
        bumped.push(c);
        if omitted[c] > 1 {
            break;
        }
        v += 1;
    }
    for c in bumped {
        omitted[c] -= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::twin_classes;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn cycle(n: usize) -> Graph {
        graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        graph(n, &edges)
    }

    fn star(leaves: usize) -> Graph {
        graph(
            leaves + 1,
            &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn multiset_canonical_form_and_runs() {
        let ms = DistanceMultiset::from_distances(vec![5, 1, 2, 1, 5, 1]);
        assert_eq!(ms.entries(), &[1, 1, 1, 2, 5, 5]);
        assert_eq!(ms.runs(), vec![(1, 3), (2, 1), (5, 2)]);
        assert_eq!(ms.to_string(), "{{1^3, 2, 5^2}}");
        assert_eq!(ms.total(), 15);
    }

    #[test]
    fn representation_empty_and_self() {
        let dm = all_pairs_distances(&path(4));
        let empty = multiset_representation(&dm, 2, &[]).unwrap();
        assert!(empty.is_empty());
        let with_self = multiset_representation(&dm, 1, &[0, 1, 2]).unwrap();
        assert_eq!(with_self.entries(), &[0, 1, 1]);
        assert!(matches!(
            multiset_representation(&dm, 9, &[0]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn vacuous_sets_resolve() {
        let g = cycle(5);
        let dm = all_pairs_distances(&g);
        for v in 0..5 {
            let rest: Vec<usize> = (0..5).filter(|&u| u != v).collect();
            assert!(is_outer_multiset_resolving(&dm, &rest));
        }
        assert!(is_outer_multiset_resolving(&dm, &[0, 1, 2, 3, 4]));
    }

    #[test]
    fn cycle4_pair_does_not_resolve() {
        // swapping the two outside vertices of C_4 fixes {0,1}
        let dm = all_pairs_distances(&cycle(4));
        assert!(!is_outer_multiset_resolving(&dm, &[0, 1]));
    }

    #[test]
    fn empty_set_never_resolves() {
        let dm = all_pairs_distances(&path(3));
        assert!(!is_outer_multiset_resolving(&dm, &[]));
    }

    #[test]
    fn vector_resolving_examples() {
        let dm = all_pairs_distances(&path(6));
        assert!(is_vector_resolving(&dm, &[0]));
        assert!(is_vector_resolving(&dm, &[5]));
        assert!(!is_vector_resolving(&dm, &[2]));
        let dm3 = all_pairs_distances(&complete(3));
        assert!(!is_vector_resolving(&dm3, &[0]));
    }

    #[test]
    fn superset_monotonicity_holds_for_vectors_not_multisets() {
        // m(1|{0,3}) = m(2|{0,3}) = {{1,2}} on the 4-path, even though {0}
        // alone resolves; the ordered vectors stay distinct.
        let dm = all_pairs_distances(&path(4));
        assert!(is_outer_multiset_resolving(&dm, &[0]));
        assert!(!is_outer_multiset_resolving(&dm, &[0, 3]));
        assert!(is_vector_resolving(&dm, &[0]));
        assert!(is_vector_resolving(&dm, &[0, 3]));
    }

    #[test]
    fn twin_bound_values() {
        assert_eq!(twin_lower_bound(&twin_classes(&path(4))), 0);
        assert_eq!(twin_lower_bound(&twin_classes(&complete(4))), 3);
        assert_eq!(twin_lower_bound(&twin_classes(&star(3))), 2);
    }

    #[test]
    fn dimension_of_paths() {
        for n in 2..=8 {
            let r = outer_multiset_dimension(&path(n), SolveOptions::default());
            assert_eq!(r.dimension, 1);
            assert_eq!(r.basis, vec![0]);
            assert_eq!(r.method, SolveMethod::FastPathPath);
        }
    }

    #[test]
    fn dimension_of_cycles() {
        let expect = [(4, 3), (5, 4), (6, 3), (7, 3), (8, 3)];
        for (n, want) in expect {
            let r = outer_multiset_dimension(&cycle(n), SolveOptions::default());
            assert_eq!(r.dimension, want, "C_{n}");
        }
    }

    #[test]
    fn dimension_of_star_is_two() {
        let r = outer_multiset_dimension(&star(3), SolveOptions::default());
        assert_eq!(r.dimension, 2);
        let dm = all_pairs_distances(&star(3));
        assert!(is_outer_multiset_resolving(&dm, &r.basis));
    }

    #[test]
    fn extremal_fast_path_matches_search() {
        for g in [complete(5), cycle(5), cycle(4)] {
            let fast = outer_multiset_dimension(&g, SolveOptions::default());
            let slow = outer_multiset_dimension(
                &g,
                SolveOptions {
                    use_fast_paths: false,
                },
            );
            assert_eq!(fast.dimension, slow.dimension);
            assert_eq!(fast.basis, slow.basis);
            assert_eq!(fast.method, SolveMethod::FastPathExtremal);
            assert_eq!(slow.method, SolveMethod::Search);
        }
    }

    #[test]
    fn petersen_dimension() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        let g = graph(10, &edges);
        let r = outer_multiset_dimension(&g, SolveOptions::default());
        assert_eq!(r.dimension, 9);
        assert_eq!(r.method, SolveMethod::FastPathExtremal);
    }

    #[test]
    fn reported_basis_is_lexicographically_first() {
        let g = star(3);
        let dm = all_pairs_distances(&g);
        let r = outer_multiset_dimension(&g, SolveOptions::default());
        // no 2-subset earlier than the basis resolves
        let mut earlier = Vec::new();
        'outer: for a in 0..4 {
            for b in a + 1..4 {
                if vec![a, b] == r.basis {
                    break 'outer;
                }
                earlier.push(vec![a, b]);
            }
        }
        for s in earlier {
            assert!(!is_outer_multiset_resolving(&dm, &s));
        }
        assert!(is_outer_multiset_resolving(&dm, &r.basis));
    }
}
