//! Cartesian and lexicographic graph products, plus the layer-twin lower
//! bound for lexicographic products with complete or edgeless second
//! factors.
//!
//! Product vertices flatten as `(a, b) -> a * n(H) + b`, so the H-layer of
//! `a` occupies the index block `a*n(H) .. (a+1)*n(H)`.

use crate::graph::{all_pairs_distances, Graph};
use crate::irregularity::is_multiset_distance_irregular;
use crate::multiset::is_outer_multiset_resolving;

/// `(a,b) ~ (c,d)` when the pairs agree in one coordinate and are adjacent
/// in the other factor.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.order(), h.order());
    let mut edges = Vec::with_capacity(ng * h.edge_count() + nh * g.edge_count());
    for a in 0..ng {
        for b in 0..nh {
            let base = a * nh + b;
            for d in h.neighbors(b) {
                if d > b {
                    edges.push((base, a * nh + d));
                }
            }
            for c in g.neighbors(a) {
                if c > a {
                    edges.push((base, c * nh + b));
                }
            }
        }
    }
    Graph::from_edges(ng * nh, &edges).expect("product of connected graphs is connected")
}

/// Second factor of a lexicographic product. `Graph` itself cannot be
/// edgeless (it must be connected), so the edgeless case is spelled out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexFactor {
    Graph(Graph),
    Edgeless(usize),
}

impl LexFactor {
    pub fn order(&self) -> usize {
        match self {
            LexFactor::Graph(h) => h.order(),
            LexFactor::Edgeless(k) => *k,
        }
    }

    fn has_edge(&self, b: usize, d: usize) -> bool {
        match self {
            LexFactor::Graph(h) => h.has_edge(b, d),
            LexFactor::Edgeless(_) => false,
        }
    }
}

/// `(a,b) ~ (c,d)` when `ac` is an edge of `g`, or `a = c` and `bd` is an
/// edge of the factor. Connected whenever `g` is, even for an edgeless
/// factor.
pub fn lexicographic_product(g: &Graph, h: &LexFactor) -> Graph {
    let (ng, nh) = (g.order(), h.order());
    assert!(nh >= 1, "second factor must have at least one vertex");
    let mut edges = Vec::new();
    for (a, c) in g.edges() {
        for b in 0..nh {
            for d in 0..nh {
                edges.push((a * nh + b, c * nh + d));
            }
        }
    }
    for a in 0..ng {
        for b in 0..nh {
            for d in b + 1..nh {
                if h.has_edge(b, d) {
                    edges.push((a * nh + b, a * nh + d));
                }
            }
        }
    }
    Graph::from_edges(ng * nh, &edges).expect("first factor is connected")
}

/// `K_k` or its complement: the second factors whose layers collapse into
/// twin classes of the lexicographic product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinFactor {
    Complete(usize),
    Edgeless(usize),
}

impl TwinFactor {
    pub fn order(self) -> usize {
        match self {
            TwinFactor::Complete(k) | TwinFactor::Edgeless(k) => k,
        }
    }

    pub fn to_lex_factor(self) -> LexFactor {
        match self {
            TwinFactor::Complete(k) => {
                let mut edges = Vec::new();
                for u in 0..k {
                    for v in u + 1..k {
                        edges.push((u, v));
                    }
                }
                LexFactor::Graph(Graph::from_edges(k, &edges).expect("complete graph"))
            }
            TwinFactor::Edgeless(k) => LexFactor::Edgeless(k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexBound {
    /// `n(G) * (k - 1)`: each of the n(G) layers is a twin class of size
    /// k, so a resolving set keeps at least k-1 vertices of each.
    pub lower_bound: usize,
    /// The bound is attained exactly when every two vertices of `g` have
    /// different full-vertex-set multiset representations.
    pub equality: bool,
    /// When the bound is attained: the verified witness keeping layer
    /// vertices 1..k of every layer (vertex 0 of each layer stays outside).
    pub certificate: Option<Vec<usize>>,
}

/// Lower bound and equality test for the dimension of `g` composed with a
/// complete or edgeless factor of order k >= 2.
pub fn lex_bound_and_equality(g: &Graph, h: TwinFactor) -> LexBound {
    let k = h.order();
    assert!(k >= 2, "twin factor needs order at least 2");
    let lower_bound = g.order() * (k - 1);
    let dm_g = all_pairs_distances(g);
    let equality = is_multiset_distance_irregular(&dm_g);
    let certificate = if equality {
        let product = lexicographic_product(g, &h.to_lex_factor());
        let dm_p = all_pairs_distances(&product);
        let cert: Vec<usize> = (0..g.order())
            .flat_map(|a| (1..k).map(move |b| a * k + b))
            .collect();
        is_outer_multiset_resolving(&dm_p, &cert).then_some(cert)
    } else {
        None
    };
    LexBound {
        lower_bound,
        equality,
        certificate,
    }
}
