//! Edge-twists, the twist-equivalence class with its canonical coordinates,
//! and rigidity decisions.

use std::collections::BTreeSet;

use crate::chunk::{ChunkTree, Parity, TwistEdgeRef};
use crate::error::{Error, Result};
use crate::graph::{find_isomorphisms, LabeledGraph};

/// Z2-valued twist coordinates: one bit per odd outward edge of the chunk
/// tree, in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistBits(pub Vec<u8>);

impl TwistBits {
    pub fn zero(len: usize) -> Self {
        TwistBits(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }

    pub fn add(&self, other: &TwistBits) -> TwistBits {
        assert_eq!(self.len(), other.len());
        TwistBits(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| (a + b) % 2)
                .collect(),
        )
    }

    /// Pointwise product; the binary carry of `self + other`.
    pub fn and(&self, other: &TwistBits) -> TwistBits {
        assert_eq!(self.len(), other.len());
        TwistBits(self.0.iter().zip(&other.0).map(|(a, b)| a * b).collect())
    }

    pub fn from_index(len: usize, k: usize) -> Self {
        TwistBits((0..len).map(|i| ((k >> i) & 1) as u8).collect())
    }

    pub fn to_index(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &b)| (b as usize) << i)
            .sum()
    }

    pub fn bit_string(&self) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        self.0.iter().map(|b| char::from(b'0' + b)).collect()
    }
}

/// The scope pair of a chunk-tree edge: `(v1, v2)` with the separating-edge
/// side first and the chunk side second.
pub fn scope(tree: &ChunkTree, eps: &TwistEdgeRef) -> (BTreeSet<usize>, BTreeSet<usize>) {
    debug_assert!(tree.tree_edges.iter().any(|t| t == eps));
    (eps.v1.clone(), eps.v2.clone())
}

/// Apply the edge-twist along the decomposition of the tree edge `eps`.
///
/// Unchanged for an even label; for an odd label every edge from a scope
/// vertex to one endpoint of the separating edge is rewired to the other
/// endpoint, labels carried.
pub fn apply_twist(tree: &ChunkTree, g: &LabeledGraph, eps: &TwistEdgeRef) -> LabeledGraph {
    assert_eq!(g.names(), tree.graph.names(), "graph outside this twist system");
    if eps.parity == Parity::Even {
        return g.clone();
    }
    let (s, t) = tree.sep_edges[eps.sep];
    let mut out = LabeledGraph::new(g.names().to_vec());
    for ((u, v), m) in g.edges() {
        let (u, v) = if eps.scope.contains(&v) { (v, u) } else { (u, v) };
        if eps.scope.contains(&u) && v == s {
            out.add_edge(u, t, m);
        } else if eps.scope.contains(&u) && v == t {
            out.add_edge(u, s, m);
        } else {
            out.add_edge(u, v, m);
        }
    }
    out
}

/// Apply the composite of twists selected by `bits` over the odd outward
/// edges in canonical order. The order is irrelevant by commutativity.
pub fn apply_eta(tree: &ChunkTree, g: &LabeledGraph, bits: &TwistBits) -> Result<LabeledGraph> {
    if bits.len() != tree.outward_odd.len() {
        return Err(Error::EtaLength {
            expected: tree.outward_odd.len(),
            got: bits.len(),
        });
    }
    let mut cur = g.clone();
    for (slot, &edge_idx) in tree.outward_odd.iter().enumerate() {
        if bits.0[slot] == 1 {
            cur = apply_twist(tree, &cur, &tree.tree_edges[edge_idx]);
        }
    }
    Ok(cur)
}

/// The complete twist-equivalence class, keyed by canonical coordinates.
#[derive(Debug, Clone)]
pub struct TwistClass {
    /// `members[k]` is the graph at coordinates `TwistBits::from_index(_, k)`.
    pub members: Vec<LabeledGraph>,
    pub odd_count: usize,
}

impl TwistClass {
    pub fn base(&self) -> &LabeledGraph {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits_of(&self, k: usize) -> TwistBits {
        TwistBits::from_index(self.odd_count, k)
    }

    /// The unique coordinates of `d` in this class, or `None` when `d` is
    /// not twist-equivalent to the base graph.
    pub fn position_of(&self, d: &LabeledGraph) -> Option<TwistBits> {
        self.members
            .iter()
            .position(|m| m == d)
            .map(|k| self.bits_of(k))
    }
}

/// Enumerate all `2^|odd outward|` class members by direct indexing;
/// injectivity is asserted (it is forced by the normal-form uniqueness).
pub fn twist_class(tree: &ChunkTree) -> TwistClass {
    let k = tree.outward_odd.len();
    let mut members = Vec::with_capacity(1 << k);
    for idx in 0..(1usize << k) {
        let bits = TwistBits::from_index(k, idx);
        let g = apply_eta(tree, &tree.graph, &bits).expect("length matches");
        members.push(g);
    }
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            assert_ne!(members[i], members[j], "twist coordinates not injective");
        }
    }
    TwistClass {
        members,
        odd_count: k,
    }
}

/// The unique twist selection carrying `g` to `d`, or `None` when `d` is
/// not in `g`'s class. `tree` must be the chunk tree of `g`.
pub fn normal_eta(tree: &ChunkTree, d: &LabeledGraph) -> Option<TwistBits> {
    let k = tree.outward_odd.len();
    (0..(1usize << k)).find_map(|idx| {
        let bits = TwistBits::from_index(k, idx);
        (apply_eta(tree, &tree.graph, &bits).ok()? == *d).then_some(bits)
    })
}

/// Rigidity flags of the base graph of `tree`.
///
/// Rigid: every class member is isomorphic to the base. Discretely rigid:
/// the only class member isomorphic to the base is the base itself.
pub fn rigidity_report(tree: &ChunkTree) -> (bool, bool) {
    let class = twist_class(tree);
    let mut rigid = true;
    let mut discrete = true;
    for (k, m) in class.members.iter().enumerate() {
        let isomorphic = !find_isomorphisms(class.base(), m)
            .expect("class members share the vertex set")
            .is_empty();
        if !isomorphic {
            rigid = false;
        }
        if isomorphic && k != 0 {
            discrete = false;
        }
    }
    (rigid, discrete)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chunk::chunk_tree;
    use crate::fixtures;
    use crate::graph::{apply_permutation, Perm};

    #[test]
    fn even_twist_is_identity_on_graphs() {
        let g = fixtures::geven();
        let t = chunk_tree(&g).unwrap();
        for &i in &t.outward {
            assert_eq!(apply_twist(&t, &g, &t.tree_edges[i]), g);
        }
    }

    #[test]
    fn odd_twist_rewires_g6() {
        let g = fixtures::g6();
        let t = chunk_tree(&g).unwrap();
        // The outward edge whose chunk is {c,d,e,f}.
        let c2: BTreeSet<usize> = ["c", "d", "e", "f"]
            .iter()
            .map(|n| g.index_of(n).unwrap())
            .collect();
        let (c, f) = (g.index_of("c").unwrap(), g.index_of("f").unwrap());
        let idx = t.find_edge((c, f), &c2).unwrap();
        let h = apply_twist(&t, &g, &t.tree_edges[idx]);
        assert_eq!(
            h.edge_summary(),
            vec!["a-b(4)", "a-f(4)", "b-c(6)", "c-e(6)", "c-f(3)", "d-e(4)", "d-f(6)"]
        );
        // Matches the relabeling by swapping d and e.
        let swap = Perm::from_swaps(&g, &[("d", "e")]);
        assert_eq!(h, apply_permutation(&swap, &g));
    }

    #[test]
    fn twists_are_involutive_and_commutative_on_fixtures() {
        for g in [fixtures::g6(), fixtures::g8(), fixtures::g13(), fixtures::geven()] {
            let t = chunk_tree(&g).unwrap();
            for &i in &t.outward {
                let once = apply_twist(&t, &g, &t.tree_edges[i]);
                let twice = apply_twist(&t, &once, &t.tree_edges[i]);
                assert_eq!(twice, g);
                for &j in &t.outward {
                    let ij = apply_twist(&t, &apply_twist(&t, &g, &t.tree_edges[i]), &t.tree_edges[j]);
                    let ji = apply_twist(&t, &apply_twist(&t, &g, &t.tree_edges[j]), &t.tree_edges[i]);
                    assert_eq!(ij, ji);
                }
            }
        }
    }

    #[test]
    fn class_sizes() {
        let t6 = chunk_tree(&fixtures::g6()).unwrap();
        assert_eq!(twist_class(&t6).len(), 4);
        let t13 = chunk_tree(&fixtures::g13()).unwrap();
        assert_eq!(twist_class(&t13).len(), 16);
        let te = chunk_tree(&fixtures::geven()).unwrap();
        assert_eq!(twist_class(&te).len(), 1);
    }

    #[test]
    fn eta_zero_and_double_application() {
        let g = fixtures::g13();
        let t = chunk_tree(&g).unwrap();
        let zero = TwistBits::zero(t.outward_odd.len());
        assert_eq!(apply_eta(&t, &g, &zero).unwrap(), g);
        let bits = TwistBits::from_index(t.outward_odd.len(), 0b1011);
        let once = apply_eta(&t, &g, &bits).unwrap();
        let back = apply_eta(&t, &once, &bits).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn normal_eta_roundtrip_and_rejection() {
        let g = fixtures::g6();
        let t = chunk_tree(&g).unwrap();
        assert_eq!(normal_eta(&t, &g), Some(TwistBits::zero(2)));
        let first = apply_twist(&t, &g, &t.tree_edges[t.outward_odd[0]]);
        assert_eq!(normal_eta(&t, &first), Some(TwistBits(vec![1, 0])));
        // A permuted graph outside the class.
        let swapped = apply_permutation(&Perm::from_swaps(&g, &[("a", "b")]), &g);
        assert_eq!(normal_eta(&t, &swapped), None);
    }

    #[test]
    fn rigidity_of_fixtures() {
        let t6 = chunk_tree(&fixtures::g6()).unwrap();
        assert_eq!(rigidity_report(&t6), (true, false));
        let t8 = chunk_tree(&fixtures::g8()).unwrap();
        assert_eq!(rigidity_report(&t8), (false, true));
        let te = chunk_tree(&fixtures::geven()).unwrap();
        assert_eq!(rigidity_report(&te), (true, true));
    }

    #[test]
    fn class_members_share_chunk_structure() {
        let g = fixtures::g13();
        let t = chunk_tree(&g).unwrap();
        let class = twist_class(&t);
        for m in &class.members {
            let tm = chunk_tree(m).unwrap();
            let sets = |tr: &ChunkTree| -> Vec<BTreeSet<usize>> {
                tr.chunks.iter().map(|c| c.vertices.clone()).collect()
            };
            assert_eq!(sets(&tm), sets(&t));
            assert_eq!(tm.sep_edges, t.sep_edges);
            assert_eq!(tm.center, t.center);
            let keys = |tr: &ChunkTree| -> Vec<(usize, usize, crate::chunk::Orientation)> {
                tr.tree_edges
                    .iter()
                    .map(|te| (te.sep, te.chunk, te.orientation))
                    .collect()
            };
            assert_eq!(keys(&tm), keys(&t));
        }
    }
}
