//! Exact outer multiset dimension of connected graphs.
//!
//! A set `S` of vertices is an *outer multiset resolving set* when the
//! multisets of distances from the vertices outside `S` to the members of
//! `S` are pairwise different; the dimension is the size of a smallest
//! such set. This crate computes it exactly, recognises the dimension-2
//! graphs in cubic time, builds the graph families and products the
//! theory revolves around, and ships an exhaustive verification harness
//! for the structural claims, desk-scale.
//!
//! Highlights:
//! - [`outer_multiset_dimension`]: twin-pruned ascending-size search with
//!   deterministic lexicographic witnesses, plus fast paths for paths and
//!   for regular graphs of diameter at most 2 (dimension n-1).
//! - [`decide_dim2`]: the O(n^3) dimension-2 decision; [`generate_family_f`]
//!   builds the graphs owning an adjacent 2-element basis.
//! - [`cartesian_product`] / [`lexicographic_product`] with the layer-twin
//!   lower bound [`lex_bound_and_equality`] and [`grid_certificate`].
//! - [`scan_verify`]: parallel counterexample search over exhaustive
//!   enumerations ([`enumerate_connected_labeled`]) or graph6 corpora.

pub mod dim2;
pub mod edgelist;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod irregularity;
pub mod multiset;
pub mod products;
pub mod random;
pub mod scan;

pub use dim2::{
    check_layer_lemma, decide_dim2, generate_family_f, has_adjacent_2_basis, layer_partition,
    Dim2Decision, FamilyFParams, LayerPartition, RecognitionError,
};
pub use edgelist::{format_dot, format_edge_list, parse_edge_list, EdgeListError};
pub use enumerate::{enumerate_connected_labeled, EnumerationError, MAX_ENUMERATION_ORDER};
pub use families::{closed_form_dimension, generate, grid_certificate, FamilyError, NamedFamily};
pub use graph::{
    all_pairs_distances, twin_classes, DistanceMatrix, Graph, GraphError, TwinClass, TwinKind,
    TwinPartition,
};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error, MAX_GRAPH6_ORDER};
pub use irregularity::{
    fixture_graph_x, is_multiset_distance_irregular, is_transmission_irregular,
    transmission_profile, TransmissionProfile,
};
pub use multiset::{
    is_outer_multiset_resolving, is_vector_resolving, multiset_representation,
    outer_multiset_dimension, twin_lower_bound, DimensionResult, DistanceMultiset, SolveMethod,
    SolveOptions,
};
pub use products::{
    cartesian_product, lex_bound_and_equality, lexicographic_product, LexBound, LexFactor,
    TwinFactor,
};
pub use random::random_connected;
pub use scan::{scan_verify, Claim, Counterexample, ScanError, ScanReport, ScanSource, ALL_CLAIMS};
