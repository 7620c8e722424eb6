//! Bundled example graphs, embedded from `fixtures/` at the workspace root.

use crate::graph::{parse_graph, LabeledGraph};

pub const G6_TEXT: &str = include_str!("../../../fixtures/g6.graph");
pub const G8_TEXT: &str = include_str!("../../../fixtures/g8.graph");
pub const G13_TEXT: &str = include_str!("../../../fixtures/g13.graph");
pub const GEVEN_TEXT: &str = include_str!("../../../fixtures/geven.graph");
pub const TRIANGLE_TEXT: &str = include_str!("../../../fixtures/triangle.graph");

/// Two squares glued along an odd edge; rigid, not discretely rigid.
pub fn g6() -> LabeledGraph {
    parse_graph(G6_TEXT).expect("bundled fixture parses")
}

/// Ladder of three squares; discretely rigid, not rigid.
pub fn g8() -> LabeledGraph {
    parse_graph(G8_TEXT).expect("bundled fixture parses")
}

/// Thirteen vertices, all labels 3; five chunks, central chunk {a,d,e,i}.
pub fn g13() -> LabeledGraph {
    parse_graph(G13_TEXT).expect("bundled fixture parses")
}

/// Two squares glued along an even edge; singleton twist class.
pub fn geven() -> LabeledGraph {
    parse_graph(GEVEN_TEXT).expect("bundled fixture parses")
}

/// Rejected at validation: a triangle.
pub fn triangle() -> LabeledGraph {
    parse_graph(TRIANGLE_TEXT).expect("bundled fixture parses")
}
