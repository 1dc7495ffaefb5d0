//! Distance relations on graph edges: Θ, its complement Θ̄, their closures,
//! the graph classes they recognize, and reconstruction of a graph from its
//! Θ̄ relation graph.

pub mod distance;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod patterns;
pub mod realize;
pub mod recognition;
pub mod relations;
pub mod suite;

pub use distance::{bfs_all_pairs, Dist, DistanceMatrix};
pub use error::{Error, Result};
pub use graph::{EdgeId, Graph};
pub use graph6::{emit_graph6, parse_graph6};
pub use iso::{find_isomorphism, is_isomorphic};
pub use patterns::{contains_induced, find_clique, find_induced, Pattern};
pub use recognition::{
    classify, is_block_graph, is_complete_multipartite, is_tree, theta_bar_classes_distance_free,
    theta_bar_star_is_1trivial, PartSizes, RecognitionReport,
};
pub use relations::{
    closure_classes, delta_set, is_closed, theta_bar_related, theta_related, triviality, DeltaSet, EdgePartition,
    EdgeRelation, Triviality, Which,
};
pub use realize::{factor_as_join_of_rooks, factor_as_rook, realize_theta_bar, PairList, Realization};
pub use enumerate::{canonical_form, canonical_graph6, enumerate_graphs, CorpusSource, CorpusSpec};
pub use suite::{
    builtin_claims, run_property_suite, verify_corpus, Claim, ClaimKind, GraphContext, PropertyReport, SuiteOptions,
    Verdict,
};
