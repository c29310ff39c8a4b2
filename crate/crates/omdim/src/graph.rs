//! Simple connected graphs on vertex set `{0..n-1}`, BFS distance tables,
//! and twin partitions.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must be connected")]
    Disconnected,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("graph order must be at least 2, got {0}")]
    OrderTooSmall(usize),
}

/// A simple undirected connected graph on vertices `0..n-1`.
///
/// Adjacency is stored as one bitset per vertex, so membership tests are
/// constant time and neighborhoods hash cheaply (twin detection, subset
/// search). Connectivity and order >= 2 are enforced at construction;
/// every value is immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::OrderTooSmall(n));
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let mut m = 0;
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !adj[u].contains(v) {
                adj[u].insert(v);
                adj[v].insert(u);
                m += 1;
            }
        }
        let g = Graph { n, adj, m };
        if !g.reaches_all_from(0) {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones(..)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].ones()
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .ones()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    /// A path graph has exactly two vertices of degree 1 and the rest of
    /// degree 2 (for n = 2 that is just the single edge).
    pub fn is_path_graph(&self) -> bool {
        let mut ones = 0;
        for v in 0..self.n {
            match self.degree(v) {
                1 => ones += 1,
                2 => {}
                _ => return false,
            }
        }
        ones == 2
    }

    pub(crate) fn open_neighborhood(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    pub(crate) fn closed_neighborhood(&self, u: usize) -> FixedBitSet {
        let mut nb = self.adj[u].clone();
        nb.insert(u);
        nb
    }

    fn reaches_all_from(&self, src: usize) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(src);
        let mut stack = vec![src];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.adj[u].ones() {
                if !seen.contains(v) {
                    seen.insert(v);
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

/// All-pairs hop distances of a connected graph, with per-vertex
/// eccentricities and the diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    diam: u32,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Row of distances from `u` to every vertex (including `u` itself).
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn diameter(&self) -> u32 {
        self.diam
    }
}

/// Computes exact hop distances with one BFS per vertex, O(nm) total.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    const UNSEEN: u32 = u32::MAX;
    let mut dist = vec![UNSEEN; n * n];
    let mut ecc = vec![0u32; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        let mut far = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = row[u];
            for v in g.neighbors(u) {
                if row[v] == UNSEEN {
                    row[v] = du + 1;
                    far = far.max(du + 1);
                    queue.push(v);
                }
            }
        }
        debug_assert_eq!(queue.len(), n, "graph invariant guarantees connectivity");
        ecc[s] = far;
    }
    let diam = ecc.iter().copied().max().unwrap_or(0);
    DistanceMatrix { n, dist, ecc, diam }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinKind {
    /// Equal closed neighborhoods; such vertices are always adjacent.
    TrueTwins,
    /// Equal open neighborhoods; such vertices are never adjacent.
    FalseTwins,
    Singleton,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    /// Sorted member vertices.
    pub vertices: Vec<usize>,
    pub kind: TwinKind,
}

/// Partition of the vertex set into maximal twin classes.
///
/// A class never mixes kinds: if u,v are true twins and v,w false twins,
/// then u in N(v) = N(w) forces the edge uw, and w in N[u] = N[v] forces
/// the (forbidden) edge vw — so the situation cannot occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<TwinClass>,
    vertex_class: Vec<usize>,
}

impl TwinPartition {
    /// Classes sorted by their smallest member.
    pub fn classes(&self) -> &[TwinClass] {
        &self.classes
    }

    /// Index into `classes()` of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.vertex_class[v]
    }

    pub fn order(&self) -> usize {
        self.vertex_class.len()
    }
}

/// Groups vertices by open-neighborhood key (false twins) and by
/// closed-neighborhood key (true twins); everything else is a singleton.
pub fn twin_classes(g: &Graph) -> TwinPartition {
    let n = g.order();
    let mut placed = FixedBitSet::with_capacity(n);
    let mut classes = Vec::new();

    let mut open_groups: HashMap<&FixedBitSet, Vec<usize>> = HashMap::new();
    for v in 0..n {
        open_groups.entry(g.open_neighborhood(v)).or_default().push(v);
    }
    for (_, group) in open_groups {
        if group.len() > 1 {
            for &v in &group {
                placed.insert(v);
            }
            classes.push(TwinClass {
                vertices: group,
                kind: TwinKind::FalseTwins,
            });
        }
    }

    let mut closed_groups: HashMap<FixedBitSet, Vec<usize>> = HashMap::new();
    for v in 0..n {
        closed_groups
            .entry(g.closed_neighborhood(v))
            .or_default()
            .push(v);
    }
    for (_, group) in closed_groups {
        if group.len() > 1 {
            debug_assert!(group.iter().all(|&v| !placed.contains(v)));
            for &v in &group {
                placed.insert(v);
            }
            classes.push(TwinClass {
                vertices: group,
                kind: TwinKind::TrueTwins,
            });
        }
    }

    for v in 0..n {
        if !placed.contains(v) {
            classes.push(TwinClass {
                vertices: vec![v],
                kind: TwinKind::Singleton,
            });
        }
    }

    for class in &mut classes {
        class.vertices.sort_unstable();
    }
    classes.sort_by_key(|c| c.vertices[0]);

    let mut vertex_class = vec![0; n];
    for (i, class) in classes.iter().enumerate() {
        for &v in &class.vertices {
            vertex_class[v] = i;
        }
    }
    TwinPartition {
        classes,
        vertex_class,
    }
}
