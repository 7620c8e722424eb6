//! The computable normal-form model of the automorphisms generated by
//! partial conjugations and graph isomorphisms: pairs of integer twist
//! exponents and an isomorphism-group element, plus the sign-extended model
//! that adjoins the global inversion.

use crate::chunk::{NodeRef, Parity};
use crate::error::{Error, Result};
use crate::iso::IsoGroup;

/// Normal form `E(eta) . alpha`: integer exponents over the outward edges
/// (canonical order) followed by an isomorphism-group element.
///
/// Well-formed when the exponent parities on the odd outward edges equal
/// the element's twist coordinates, so the composite ends at the base
/// graph. Composition applies the right factor first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AutElem {
    /// One entry per outward edge, aligned with `IsoGroup::tree.outward`.
    pub eta: Vec<i64>,
    /// Index into `IsoGroup::elements`.
    pub alpha: usize,
}

impl AutElem {
    pub fn identity(group: &IsoGroup) -> Self {
        AutElem {
            eta: vec![0; group.tree.outward.len()],
            alpha: group.identity_index(),
        }
    }

    /// A pure twist composite with the given exponents.
    pub fn pure_twist(group: &IsoGroup, eta: Vec<i64>) -> Result<Self> {
        let e = AutElem {
            eta,
            alpha: group.identity_index(),
        };
        e.check(group)?;
        Ok(e)
    }

    /// Exponent vector with a single nonzero entry at an outward-edge slot.
    pub fn single(group: &IsoGroup, out_slot: usize, exponent: i64) -> Result<Self> {
        let mut eta = vec![0; group.tree.outward.len()];
        eta[out_slot] = exponent;
        AutElem::pure_twist(group, eta)
    }

    pub fn check(&self, group: &IsoGroup) -> Result<()> {
        if self.eta.len() != group.tree.outward.len() || self.alpha >= group.order() {
            return Err(Error::AmbientMismatch);
        }
        let bits = &group.elements[self.alpha].eta;
        for (slot, &edge_idx) in group.tree.outward.iter().enumerate() {
            let te = &group.tree.tree_edges[edge_idx];
            if te.parity == Parity::Odd {
                let odd_slot = group
                    .tree
                    .outward_odd
                    .iter()
                    .position(|&e| e == edge_idx)
                    .expect("odd outward edge is outward");
                if self.eta[slot].rem_euclid(2) != bits.0[odd_slot] as i64 {
                    return Err(Error::AmbientMismatch);
                }
            }
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.alpha == 0 && self.eta.iter().all(|&x| x == 0)
    }
}

/// `compose(group, f, g)`: the normal form of `f . g` (apply `g` first):
/// exponents of `g` are transported along `f`'s edge action and added.
pub fn compose(group: &IsoGroup, f: &AutElem, g: &AutElem) -> AutElem {
    let moved = group.transport_exponents(f.alpha, &g.eta);
    let eta = f
        .eta
        .iter()
        .zip(&moved)
        .map(|(a, b)| a + b)
        .collect();
    let out = AutElem {
        eta,
        alpha: group.table[f.alpha][g.alpha],
    };
    debug_assert!(out.check(group).is_ok());
    out
}

pub fn inverse(group: &IsoGroup, f: &AutElem) -> AutElem {
    let ainv = group.inverse_of(f.alpha);
    let moved = group.transport_exponents(ainv, &f.eta);
    let out = AutElem {
        eta: moved.iter().map(|&x| -x).collect(),
        alpha: ainv,
    };
    debug_assert!(compose(group, f, &out).is_identity());
    out
}

/// The canonical lift of an isomorphism-group element: exponent 1 on each
/// odd outward edge selected by its coordinates, 0 elsewhere.
pub fn lift(group: &IsoGroup, alpha: usize) -> AutElem {
    let bits = &group.elements[alpha].eta;
    let mut eta = vec![0i64; group.tree.outward.len()];
    for (odd_slot, &edge_idx) in group.tree.outward_odd.iter().enumerate() {
        if bits.0[odd_slot] == 1 {
            let slot = group
                .tree
                .outward
                .iter()
                .position(|&e| e == edge_idx)
                .expect("odd outward edge is outward");
            eta[slot] = 1;
        }
    }
    let out = AutElem { eta, alpha };
    debug_assert!(out.check(group).is_ok());
    out
}

/// True iff the element lies in the free abelian subgroup of even twist
/// composites: trivial isomorphism part and even exponents on odd edges.
pub fn is_dehn(group: &IsoGroup, f: &AutElem) -> bool {
    if f.alpha != group.identity_index() {
        return false;
    }
    group
        .tree
        .outward
        .iter()
        .enumerate()
        .all(|(slot, &edge_idx)| {
            group.tree.tree_edges[edge_idx].parity == Parity::Even || f.eta[slot] % 2 == 0
        })
}

/// Element extended by the global-inversion sign. The pair `(core, sign)`
/// represents `core . inversion^sign` with the inversion applied first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SignedAutElem {
    pub core: AutElem,
    pub sign: bool,
}

impl SignedAutElem {
    pub fn identity(group: &IsoGroup) -> Self {
        SignedAutElem {
            core: AutElem::identity(group),
            sign: false,
        }
    }

    pub fn inversion(group: &IsoGroup) -> Self {
        SignedAutElem {
            core: AutElem::identity(group),
            sign: true,
        }
    }

    pub fn positive(core: AutElem) -> Self {
        SignedAutElem { core, sign: false }
    }

    pub fn is_identity(&self) -> bool {
        !self.sign && self.core.is_identity()
    }
}

/// Composition with signs: signs add mod 2, and conjugation by the
/// inversion negates twist exponents while fixing the isomorphism part.
pub fn ext_compose(group: &IsoGroup, f: &SignedAutElem, g: &SignedAutElem) -> SignedAutElem {
    let g_core = if f.sign {
        AutElem {
            eta: g.core.eta.iter().map(|&x| -x).collect(),
            alpha: g.core.alpha,
        }
    } else {
        g.core.clone()
    };
    SignedAutElem {
        core: compose(group, &f.core, &g_core),
        sign: f.sign ^ g.sign,
    }
}

pub fn ext_inverse(group: &IsoGroup, f: &SignedAutElem) -> SignedAutElem {
    let core_inv = inverse(group, &f.core);
    let core = if f.sign {
        AutElem {
            eta: core_inv.eta.iter().map(|&x| -x).collect(),
            alpha: core_inv.alpha,
        }
    } else {
        core_inv
    };
    let out = SignedAutElem { core, sign: f.sign };
    debug_assert!(ext_compose(group, f, &out).is_identity());
    out
}

/// The distinguished central automorphism read off the chunk-tree center:
/// trivial for a chunk center; for an edge center, one twist on every
/// center-adjacent edge, composed with the endpoint swap when the center
/// label is odd.
pub fn special_phi(group: &IsoGroup) -> SignedAutElem {
    let tree = &group.tree;
    match tree.center {
        NodeRef::Chunk(_) => SignedAutElem::identity(group),
        NodeRef::SepEdge(si) => {
            let mut eta = vec![0i64; tree.outward.len()];
            for (slot, &edge_idx) in tree.outward.iter().enumerate() {
                if tree.tree_edges[edge_idx].sep == si {
                    eta[slot] = 1;
                }
            }
            let alpha = if tree.sep_labels[si] % 2 == 1 {
                let (s, t) = tree.sep_edges[si];
                let mut p = crate::graph::Perm::identity(tree.graph.vertex_count());
                p.0.swap(s, t);
                group
                    .index_of(&p)
                    .expect("the endpoint swap lies in the isomorphism group")
            } else {
                group.identity_index()
            };
            let core = AutElem { eta, alpha };
            core.check(group).expect("center twists are well-formed");
            SignedAutElem::positive(core)
        }
    }
}
