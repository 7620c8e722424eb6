//! Algorithms for edge-separated CLTTF defining graphs: chunk trees,
//! edge-twist equivalence, the graph-isomorphism group of a twist class, and
//! machine-verified finite presentations of the (outer) automorphism group
//! of the associated Artin group.

pub mod autg;
pub mod chunk;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod iso;
pub mod present;
pub mod snf;
pub mod twist;
pub mod words;

pub use autg::{
    compose, ext_compose, ext_inverse, inverse, is_dehn, lift, special_phi, AutElem,
    SignedAutElem,
};
pub use chunk::{chunk_tree, chunks, Chunk, ChunkTree, NodeRef, Orientation, Parity, TwistEdgeRef};
pub use error::{Error, Result};
pub use iso::{edge_action, iso_group, pull_back_edge, push_forward_edge, IsoElement, IsoGroup};
pub use twist::{
    apply_eta, apply_twist, normal_eta, rigidity_report, scope, twist_class, TwistBits, TwistClass,
};
pub use words::{
    abelian_distinct, alternating_product, apply_auto, center_word, induced_map, quasi_center,
    word_equal_bounded, ArtinWord, ElementaryAuto, SearchBounds, WordVerdict,
};
pub use graph::{
    apply_permutation, decompositions_along, find_isomorphisms, parse_graph, separating_edges,
    separating_vertices, validate_clttf, Decomposition, LabeledGraph, Perm, ValidationReport,
};
