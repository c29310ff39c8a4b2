//! Claim-verification scans over exhaustive enumerations or graph6
//! corpora: each selected claim is checked on every source graph and
//! counterexamples are aggregated into a deterministic report.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::dim2::{check_layer_lemma, decide_dim2, Dim2Decision};
use crate::enumerate::{graph_from_mask, vertex_pairs, MAX_ENUMERATION_ORDER};
use crate::graph::{all_pairs_distances, Graph};
use crate::graph6::{decode_graph6, encode_graph6};
use crate::irregularity::{is_multiset_distance_irregular, is_transmission_irregular};
use crate::multiset::{is_outer_multiset_resolving, outer_multiset_dimension, SolveOptions};
use crate::products::{lex_bound_and_equality, lexicographic_product, TwinFactor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScanError {
    #[error("enumeration order {0} outside 2..={MAX_ENUMERATION_ORDER}")]
    OrderOutOfRange(usize),
    #[error("failed to read corpus graph: {0}")]
    SourceRead(String),
}

/// The verifiable claims. Tags match the CLI surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `t1`: dimension equals n-1 exactly for regular graphs of diameter
    /// at most 2.
    Extremal,
    /// `alg1`: the cubic dimension-2 decision agrees with the exhaustive
    /// solver.
    Dim2Agreement,
    /// `lem1`: the two vertices of any 2-element basis are at distance at
    /// most 2.
    BasisDistance,
    /// `lem2`: layer sizes around any 2-element basis obey the size-3
    /// (size-2 and non-increasing when adjacent) conditions.
    LayerSizes,
    /// `incl`: transmission irregular implies multiset distance irregular.
    IrregularInclusion,
    /// `t4`: for factors up to order 4 and H in {K_2, K_3, edgeless pair},
    /// the lexicographic product dimension is at least n(G)(k-1), with
    /// equality exactly for multiset distance irregular G.
    LexLayerBound,
}

pub const ALL_CLAIMS: [Claim; 6] = [
    Claim::Extremal,
    Claim::Dim2Agreement,
    Claim::BasisDistance,
    Claim::LayerSizes,
    Claim::IrregularInclusion,
    Claim::LexLayerBound,
];

impl Claim {
    pub fn tag(self) -> &'static str {
        match self {
            Claim::Extremal => "t1",
            Claim::Dim2Agreement => "alg1",
            Claim::BasisDistance => "lem1",
            Claim::LayerSizes => "lem2",
            Claim::IrregularInclusion => "incl",
            Claim::LexLayerBound => "t4",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Claim> {
        ALL_CLAIMS.iter().copied().find(|c| c.tag() == tag)
    }

    pub fn description(self) -> &'static str {
        match self {
            Claim::Extremal => "dimension n-1 iff regular with diameter <= 2",
            Claim::Dim2Agreement => "dim-2 decision agrees with the exhaustive solver",
            Claim::BasisDistance => "2-element bases span distance <= 2",
            Claim::LayerSizes => "layer sizes around 2-element bases stay within bounds",
            Claim::IrregularInclusion => "transmission irregular implies multiset distance irregular",
            Claim::LexLayerBound => {
                "lexicographic products with complete/edgeless factors respect the layer bound"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanSource {
    /// All labelled connected graphs of order 2..=max_order.
    Enumeration { max_order: usize },
    /// One graph6 string per line; blank lines are skipped.
    Corpus(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph6: String,
    pub claim: Claim,
    pub details: String,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub graphs_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed: Duration,
}

impl ScanReport {
    pub fn all_claims_held(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Runs every selected claim on every source graph. Graphs are checked in
/// parallel; the report is deterministic because counterexamples are
/// sorted afterwards and counting is order-free.
pub fn scan_verify(claims: &[Claim], source: &ScanSource) -> Result<ScanReport, ScanError> {
    let started = Instant::now();
    let (graphs_checked, mut counterexamples) = match source {
        ScanSource::Enumeration { max_order } => {
            if !(2..=MAX_ENUMERATION_ORDER).contains(max_order) {
                return Err(ScanError::OrderOutOfRange(*max_order));
            }
            let mut checked = 0u64;
            let mut found = Vec::new();
            for n in 2..=*max_order {
                let pairs = vertex_pairs(n);
                let masks = 0..(1u64 << pairs.len());
                let (count, mut ces) = masks
                    .into_par_iter()
                    .filter_map(|mask| graph_from_mask(n, &pairs, mask))
                    .map(|g| (1u64, check_graph(&g, claims)))
                    .reduce(
                        || (0, Vec::new()),
                        |(ca, mut va), (cb, vb)| {
                            va.extend(vb);
                            (ca + cb, va)
                        },
                    );
                checked += count;
                found.append(&mut ces);
            }
            (checked, found)
        }
        ScanSource::Corpus(lines) => {
            let graphs: Vec<Graph> = lines
                .iter()
                .filter(|l| !l.trim().is_empty())
                .map(|l| decode_graph6(l).map_err(|e| ScanError::SourceRead(format!("{l:?}: {e}"))))
                .collect::<Result<_, _>>()?;
            let ces = graphs
                .par_iter()
                .flat_map_iter(|g| check_graph(g, claims))
                .collect();
            (graphs.len() as u64, ces)
        }
    };
    counterexamples.sort_by(|a, b| {
        (a.graph6.len(), &a.graph6, a.claim.tag()).cmp(&(b.graph6.len(), &b.graph6, b.claim.tag()))
    });
    Ok(ScanReport {
        graphs_checked,
        counterexamples,
        elapsed: started.elapsed(),
    })
}

fn check_graph(g: &Graph, claims: &[Claim]) -> Vec<Counterexample> {
    let mut out = Vec::new();
    let n = g.order();
    let dm = all_pairs_distances(g);
    let needs_dimension = claims.iter().any(|c| {
        matches!(
            c,
            Claim::Extremal | Claim::Dim2Agreement | Claim::BasisDistance | Claim::LayerSizes
        )
    });
    // fast paths stay off so the searched value is independent evidence
    let dimension = needs_dimension.then(|| {
        outer_multiset_dimension(
            g,
            SolveOptions {
                use_fast_paths: false,
            },
        )
        .dimension
    });
    let mut report = |claim: Claim, details: String| {
        out.push(Counterexample {
            graph6: encode_graph6(g),
            claim,
            details,
        });
    };

    for &claim in claims {
        match claim {
            Claim::Extremal => {
                let dim = dimension.expect("computed above");
                let extremal = dim == n - 1;
                let characterized = g.is_regular() && dm.diameter() <= 2;
                if extremal != characterized {
                    report(
                        claim,
                        format!(
                            "dimension {dim}, order {n}, regular {}, diameter {}",
                            g.is_regular(),
                            dm.diameter()
                        ),
                    );
                }
            }
            Claim::Dim2Agreement => {
                let dim = dimension.expect("computed above");
                match decide_dim2(g) {
                    Dim2Decision::DimensionOne => {
                        if dim != 1 {
                            report(claim, format!("decision says 1, solver says {dim}"));
                        }
                    }
                    Dim2Decision::DimensionTwo { basis: (u, v) } => {
                        if dim != 2 {
                            report(claim, format!("decision says 2, solver says {dim}"));
                        } else if !is_outer_multiset_resolving(&dm, &[u, v]) {
                            report(claim, format!("reported basis ({u}, {v}) does not resolve"));
                        }
                    }
                    Dim2Decision::GreaterThanTwo => {
                        if dim <= 2 {
                            report(claim, format!("decision says > 2, solver says {dim}"));
                        }
                    }
                }
            }
            Claim::BasisDistance | Claim::LayerSizes => {
                let dim = dimension.expect("computed above");
                if dim != 2 {
                    continue;
                }
                for u in 0..n {
                    for v in u + 1..n {
                        if !is_outer_multiset_resolving(&dm, &[u, v]) {
                            continue;
                        }
                        if claim == Claim::BasisDistance {
                            if dm.dist(u, v) > 2 {
                                report(
                                    claim,
                                    format!("basis ({u}, {v}) at distance {}", dm.dist(u, v)),
                                );
                            }
                        } else if check_layer_lemma(g, &dm, (u, v)) != Ok(true) {
                            report(claim, format!("layer sizes violated at basis ({u}, {v})"));
                        }
                    }
                }
            }
            Claim::IrregularInclusion => {
                if is_transmission_irregular(&dm) && !is_multiset_distance_irregular(&dm) {
                    report(claim, "transmission irregular but multisets collide".into());
                }
            }
            Claim::LexLayerBound => {
                if n > 4 {
                    continue;
                }
                for factor in [
                    TwinFactor::Complete(2),
                    TwinFactor::Complete(3),
                    TwinFactor::Edgeless(2),
                ] {
                    let bound = lex_bound_and_equality(g, factor);
                    let product = lexicographic_product(g, &factor.to_lex_factor());
                    let dim = outer_multiset_dimension(
                        &product,
                        SolveOptions {
                            use_fast_paths: false,
                        },
                    )
                    .dimension;
                    if dim < bound.lower_bound
                        || (dim == bound.lower_bound) != bound.equality
                        || (bound.equality && bound.certificate.is_none())
                    {
                        report(
                            claim,
                            format!(
                                "factor {factor:?}: product dimension {dim}, bound {}, equality flag {}",
                                bound.lower_bound, bound.equality
                            ),
                        );
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_tags_round_trip() {
        for claim in ALL_CLAIMS {
            assert_eq!(Claim::from_tag(claim.tag()), Some(claim));
        }
        assert_eq!(Claim::from_tag("nope"), None);
    }

    #[test]
    fn enumeration_scan_holds_up_to_order_5() {
        let report = scan_verify(
            &ALL_CLAIMS,
            &ScanSource::Enumeration { max_order: 5 },
        )
        .unwrap();
        assert_eq!(report.graphs_checked, 1 + 4 + 38 + 728);
        assert!(report.all_claims_held(), "{:?}", report.counterexamples);
    }

    #[test]
    fn corpus_scan_and_read_errors() {
        let corpus = ScanSource::Corpus(vec!["A_".into(), "".into(), "Bg".into()]);
        let report = scan_verify(&[Claim::Extremal], &corpus).unwrap();
        assert_eq!(report.graphs_checked, 2);
        assert!(report.all_claims_held());

        let bad = ScanSource::Corpus(vec!["!!".into()]);
        assert!(matches!(
            scan_verify(&[Claim::Extremal], &bad),
            Err(ScanError::SourceRead(_))
        ));
    }

    #[test]
    fn scan_is_deterministic() {
        let source = ScanSource::Enumeration { max_order: 4 };
        let a = scan_verify(&ALL_CLAIMS, &source).unwrap();
        let b = scan_verify(&ALL_CLAIMS, &source).unwrap();
        assert_eq!(a.graphs_checked, b.graphs_checked);
        assert_eq!(a.counterexamples, b.counterexamples);
    }

    #[test]
    fn out_of_range_order_is_rejected() {
        assert!(matches!(
            scan_verify(&ALL_CLAIMS, &ScanSource::Enumeration { max_order: 9 }),
            Err(ScanError::OrderOutOfRange(9))
        ));
    }
}
