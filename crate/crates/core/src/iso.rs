//! The group of graph isomorphisms onto twist-equivalent graphs:
//! push-forwards of twist edges, the group table, and the twisted
//! intersection product.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::chunk::{chunk_tree, ChunkTree, TwistEdgeRef};
use crate::error::{Error, Result};
use crate::graph::{apply_permutation, find_isomorphisms, LabeledGraph, Perm};
use crate::twist::{twist_class, TwistBits, TwistClass};

/// An element of the isomorphism group of a twist class: a vertex
/// permutation together with the unique twist coordinates of its image.
///
/// Equality and ordering are by the permutation alone; the coordinates are
/// determined by it.
#[derive(Debug, Clone)]
pub struct IsoElement {
    pub perm: Perm,
    pub eta: TwistBits,
}

impl PartialEq for IsoElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}
impl Eq for IsoElement {}
impl PartialOrd for IsoElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for IsoElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.perm.cmp(&other.perm)
    }
}

/// The group of all permutations carrying the base graph into its twist
/// class, materialized with its composition table.
#[derive(Debug, Clone)]
pub struct IsoGroup {
    pub tree: ChunkTree,
    pub class: TwistClass,
    /// Sorted by (twist coordinates, permutation); element 0 is the identity.
    pub elements: Vec<IsoElement>,
    /// `table[i][j]` = index of `elements[i] . elements[j]` (apply j first).
    pub table: Vec<Vec<usize>>,
    /// Indices of elements fixing the base graph (the automorphism subgroup).
    pub aut_indices: Vec<usize>,
    /// Per element, the push-forward permutation of canonical tree-edge
    /// indices.
    pub actions: Vec<Vec<usize>>,
}

/// Push a chunk-tree edge forward along a graph isomorphism
/// `alpha : src.graph -> dst.graph`: the image edge is
/// `(alpha(e), alpha(C))`, with orientation and parity preserved.
pub fn push_forward_edge(
    alpha: &Perm,
    src: &ChunkTree,
    dst: &ChunkTree,
    eps: &TwistEdgeRef,
) -> Result<usize> {
    let (s, t) = src.sep_edges[eps.sep];
    let img_sep = (alpha.apply(s), alpha.apply(t));
    let img_chunk: BTreeSet<usize> = src.chunks[eps.chunk]
        .vertices
        .iter()
        .map(|&v| alpha.apply(v))
        .collect();
    let idx = dst
        .find_edge(img_sep, &img_chunk)
        .ok_or_else(|| Error::NotTreeEdge(format!("image of e{}", eps.index)))?;
    let img = &dst.tree_edges[idx];
    assert_eq!(img.orientation, eps.orientation, "push-forward flipped orientation");
    assert_eq!(img.parity, eps.parity, "push-forward changed parity");
    Ok(idx)
}

/// Pull a chunk-tree edge of `dst` back along `alpha : src.graph -> dst.graph`.
pub fn pull_back_edge(
    alpha: &Perm,
    src: &ChunkTree,
    dst: &ChunkTree,
    eps: &TwistEdgeRef,
) -> Result<usize> {
    push_forward_edge(&alpha.inverse(), dst, src, eps)
}

/// The permutation of canonical tree-edge indices induced by an element of
/// the class's isomorphism group (source and image trees identified).
pub fn edge_action(tree: &ChunkTree, alpha: &Perm) -> Result<Vec<usize>> {
    tree.tree_edges
        .iter()
        .map(|te| push_forward_edge(alpha, tree, tree, te))
        .collect()
}

impl IsoGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, perm: &Perm) -> Option<usize> {
        self.elements.iter().position(|e| &e.perm == perm)
    }

    pub fn compose(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        (0..self.order())
            .find(|&j| self.table[i][j] == 0)
            .expect("group closure provides an inverse")
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.table[cur][i];
            k += 1;
        }
        k
    }

    /// Transport of twist coordinates along an element: slot-wise pullback
    /// of `bits` through the edge action of `elements[i]`.
    pub fn transport_bits(&self, i: usize, bits: &TwistBits) -> TwistBits {
        let action = &self.actions[i];
        let mut out = vec![0u8; bits.len()];
        for (slot, &edge_idx) in self.tree.outward_odd.iter().enumerate() {
            let img_edge = action[edge_idx];
            let img_slot = self
                .tree
                .outward_odd
                .iter()
                .position(|&e| e == img_edge)
                .expect("odd outward edges map to odd outward edges");
            out[img_slot] = bits.0[slot];
        }
        TwistBits(out)
    }

    /// Z-valued transport over all outward edges.
    pub fn transport_exponents(&self, i: usize, eta: &[i64]) -> Vec<i64> {
        let action = &self.actions[i];
        let mut out = vec![0i64; eta.len()];
        for (slot, &edge_idx) in self.tree.outward.iter().enumerate() {
            let img_edge = action[edge_idx];
            let img_slot = self
                .tree
                .outward
                .iter()
                .position(|&e| e == img_edge)
                .expect("outward edges map to outward edges");
            out[img_slot] = eta[slot];
        }
        out
    }

    /// The twisted intersection product of `elements[i]` and `elements[j]`:
    /// the binary carry of adding `eta_i` to the push-forward of `eta_j`.
    ///
    /// The defining identity (in Z-valued coordinates over the odd outward
    /// edges) `eta_i + i*(eta_j) = 2*carry + eta_{ij}` is asserted for every
    /// product.
    pub fn twisted_product(&self, i: usize, j: usize) -> TwistBits {
        let ei = &self.elements[i].eta;
        let ej_pushed = self.transport_bits(i, &self.elements[j].eta);
        let carry = ei.and(&ej_pushed);
        let k = self.table[i][j];
        let ek = &self.elements[k].eta;
        for slot in 0..ei.len() {
            let lhs = ei.0[slot] as i64 + ej_pushed.0[slot] as i64;
            let rhs = 2 * carry.0[slot] as i64 + ek.0[slot] as i64;
            assert_eq!(lhs, rhs, "carry identity violated at odd edge slot {slot}");
        }
        carry
    }

    /// JSON dump: elements as cycles, coordinate bit-strings, the
    /// composition table, the group center, and orbit data.
    pub fn to_json(&self) -> Value {
        let g = &self.tree.graph;
        let elements: Vec<Value> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, e)| {
                json!({
                    "index": i,
                    "perm": e.perm.cycles_string(g),
                    "eta": e.eta.bit_string(),
                    "order": self.element_order(i),
                    "fixes_base": e.eta.is_zero(),
                })
            })
            .collect();
        let center: Vec<usize> = (0..self.order())
            .filter(|&i| (0..self.order()).all(|j| self.table[i][j] == self.table[j][i]))
            .collect();
        // Orbits of the action on class members (by coordinates) and on
        // vertices.
        let mut member_orbits = Vec::new();
        let mut seen = vec![false; self.class.len()];
        for k in 0..self.class.len() {
            if seen[k] {
                continue;
            }
            let mut orbit = vec![k];
            seen[k] = true;
            let mut frontier = vec![k];
            while let Some(m) = frontier.pop() {
                for e in &self.elements {
                    let img = apply_permutation(&e.perm, &self.class.members[m]);
                    if let Some(bits) = self.class.position_of(&img) {
                        let mi = bits.to_index();
                        if !seen[mi] {
                            seen[mi] = true;
                            orbit.push(mi);
                            frontier.push(mi);
                        }
                    }
                }
            }
            orbit.sort_unstable();
            member_orbits.push(orbit);
        }
        let mut vertex_orbits = Vec::new();
        let mut seen = vec![false; g.vertex_count()];
        for v in 0..g.vertex_count() {
            if seen[v] {
                continue;
            }
            let mut orbit: BTreeSet<usize> = BTreeSet::from([v]);
            let mut frontier = vec![v];
            seen[v] = true;
            while let Some(u) = frontier.pop() {
                for e in &self.elements {
                    let w = e.perm.apply(u);
                    if !seen[w] {
                        seen[w] = true;
                        orbit.insert(w);
                        frontier.push(w);
                    }
                }
            }
            vertex_orbits.push(orbit.iter().map(|&u| g.name(u)).collect::<Vec<_>>());
        }
        json!({
            "order": self.order(),
            "aut_order": self.aut_indices.len(),
            "class_size": self.class.len(),
            "elements": elements,
            "table": self.table,
            "center": center,
            "member_orbits": member_orbits,
            "vertex_orbits": vertex_orbits,
        })
    }
}

/// Materialize the isomorphism group of the twist class of `g`.
pub fn iso_group(g: &LabeledGraph) -> Result<IsoGroup> {
    let tree = chunk_tree(g)?;
    let class = twist_class(&tree);
    let mut elements = Vec::new();
    for (k, member) in class.members.iter().enumerate() {
        let bits = class.bits_of(k);
        for perm in find_isomorphisms(g, member)? {
            elements.push(IsoElement {
                perm,
                eta: bits.clone(),
            });
        }
    }
    elements.sort_by(|a, b| (&a.eta, &a.perm).cmp(&(&b.eta, &b.perm)));
    assert!(
        elements.first().map(|e| e.perm.is_identity()).unwrap_or(false),
        "identity must be element 0"
    );

    let mut table = vec![vec![usize::MAX; elements.len()]; elements.len()];
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            let prod = elements[i].perm.compose(&elements[j].perm);
            let k = elements
                .iter()
                .position(|e| e.perm == prod)
                .expect("closed under composition");
            table[i][j] = k;
        }
    }
    // Inverses exist: every row of the table contains the identity.
    for row in &table {
        assert!(row.contains(&0), "element without inverse");
    }
    let aut_indices: Vec<usize> = elements
        .iter()
        .enumerate()
        .filter(|(_, e)| e.eta.is_zero())
        .map(|(i, _)| i)
        .collect();
    let actions: Vec<Vec<usize>> = elements
        .iter()
        .map(|e| edge_action(&tree, &e.perm).expect("iso elements act on the class tree"))
        .collect();

    let group = IsoGroup {
        tree,
        class,
        elements,
        table,
        aut_indices,
        actions,
    };

    // The composed element's coordinates obey eta_{ij} = eta_i + i*(eta_j).
    for i in 0..group.order() {
        for j in 0..group.order() {
            let expect = group.elements[i]
                .eta
                .add(&group.transport_bits(i, &group.elements[j].eta));
            let k = group.table[i][j];
            assert_eq!(group.elements[k].eta, expect, "coordinate cocycle violated");
        }
    }
    Ok(group)
}
