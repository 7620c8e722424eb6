//! Assembly of the generator sets and relation families for the
//! automorphism-group presentations, their machine verification in three
//! executable models, abelianization, and structure reporting.
//!
//! Conventions fixed here once and enforced by the verifier: juxtaposition
//! composes right-to-left (the rightmost generator acts first), and a
//! vertex generator `v` denotes the inner automorphism `w -> v w v^-1`.
//! Under this reading the action relations hold with the literally expanded
//! image words, and the inner element matching the central twist composite
//! is the *inverse* of the central quasi-center.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::autg::{compose, inverse, lift, special_phi, AutElem, SignedAutElem};
use crate::chunk::{NodeRef, Parity};
use crate::error::Result;
use crate::graph::LabeledGraph;
use crate::iso::{iso_group, IsoGroup};
use crate::snf::invariant_factors;
use crate::twist::TwistBits;
use crate::words::{
    abelian_distinct, alternating_product, induced_map, quasi_center, word_equal_bounded,
    ArtinWord, SearchBounds, WordVerdict,
};

/// Semantic identity of a presentation generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GeneratorName {
    /// An Artin generator, standing for the inner automorphism by it.
    Vertex(usize),
    /// An even outward twist; the value is a slot into `tree.outward`.
    EvenTwist(usize),
    /// The square of an odd outward twist; slot into `tree.outward`.
    OddTwistSquare(usize),
    /// The canonical lift of an isomorphism-group element (by index).
    IsoLift(usize),
    /// The global inversion.
    Inversion,
}

/// A word over presentation generators with exponents `+-1`.
pub type GenWord = Vec<(GeneratorName, i8)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    R0,
    R1,
    R2,
    R3,
    R4,
    RPhi,
    RPhiTilde,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::R0 => "R0",
            Family::R1 => "R1",
            Family::R2 => "R2",
            Family::R3 => "R3",
            Family::R4 => "R4",
            Family::RPhi => "R_phi",
            Family::RPhiTilde => "R_phi~",
        }
    }
}

/// One relation `left = right` (a relator when `right` is empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub left: GenWord,
    pub right: GenWord,
    pub family: Family,
}

/// All relation families of a graph, instantiated over its isomorphism
/// group and chunk tree.
#[derive(Debug, Clone)]
pub struct RelationSets {
    pub r0: Vec<Relation>,
    pub r1: Vec<Relation>,
    pub r2: Vec<Relation>,
    pub r3: Vec<Relation>,
    pub r4: Vec<Relation>,
    pub r_phi: Vec<Relation>,
    pub r_phi_tilde: Vec<Relation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentedGroup {
    Artin,
    AutA,
    AutAModZ,
    Out,
    Aut,
}

impl PresentedGroup {
    pub fn label(self) -> &'static str {
        match self {
            PresentedGroup::Artin => "artin",
            PresentedGroup::AutA => "autA",
            PresentedGroup::AutAModZ => "autA-mod-z",
            PresentedGroup::Out => "out",
            PresentedGroup::Aut => "aut",
        }
    }
}

/// A finite presentation with resolved generator indexing.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub group_kind: PresentedGroup,
    pub generators: Vec<(GeneratorName, String)>,
    pub relations: Vec<Relation>,
}

/// Generator display name; `e<k>` and `e<k>^2` use the canonical tree-edge
/// ordinal, `a<j>` the isomorphism-group element index.
pub fn generator_text(group: &IsoGroup, name: GeneratorName) -> String {
    let tree = &group.tree;
    match name {
        GeneratorName::Vertex(v) => tree.graph.name(v).to_string(),
        GeneratorName::EvenTwist(slot) => {
            format!("e{}", tree.tree_edges[tree.outward[slot]].index)
        }
        GeneratorName::OddTwistSquare(slot) => {
            format!("e{}^2", tree.tree_edges[tree.outward[slot]].index)
        }
        GeneratorName::IsoLift(j) => format!("a{j}"),
        GeneratorName::Inversion => "iota".to_string(),
    }
}

fn vertices_in_name_order(g: &LabeledGraph) -> Vec<usize> {
    let mut vs: Vec<usize> = (0..g.vertex_count()).collect();
    vs.sort_by(|&a, &b| g.name(a).cmp(g.name(b)));
    vs
}

/// The generator set of the twist/lift part, in canonical order: even
/// twists, odd twist squares, then one lift per isomorphism-group element.
pub fn twist_lift_generators(group: &IsoGroup) -> Vec<GeneratorName> {
    let tree = &group.tree;
    let mut gens = Vec::new();
    for (slot, &edge_idx) in tree.outward.iter().enumerate() {
        if tree.tree_edges[edge_idx].parity == Parity::Even {
            gens.push(GeneratorName::EvenTwist(slot));
        }
    }
    for (slot, &edge_idx) in tree.outward.iter().enumerate() {
        if tree.tree_edges[edge_idx].parity == Parity::Odd {
            gens.push(GeneratorName::OddTwistSquare(slot));
        }
    }
    for j in 0..group.order() {
        gens.push(GeneratorName::IsoLift(j));
    }
    gens
}

/// The generator standing for the outward twist at `slot`: the twist itself
/// when even, its square when odd.
fn twist_generator(group: &IsoGroup, slot: usize) -> GeneratorName {
    match group.tree.tree_edges[group.tree.outward[slot]].parity {
        Parity::Even => GeneratorName::EvenTwist(slot),
        Parity::Odd => GeneratorName::OddTwistSquare(slot),
    }
}

/// The word of odd-square generators selected by twist coordinates, in
/// canonical edge order: the square of the coordinate composite.
fn squared_selection_word(group: &IsoGroup, bits: &TwistBits) -> GenWord {
    let tree = &group.tree;
    let mut word = Vec::new();
    for (odd_slot, &edge_idx) in tree.outward_odd.iter().enumerate() {
        if bits.0[odd_slot] == 1 {
            let slot = tree
                .outward
                .iter()
                .position(|&e| e == edge_idx)
                .expect("odd outward edge is outward");
            word.push((GeneratorName::OddTwistSquare(slot), 1i8));
        }
    }
    word
}

fn word_of(names: &[GeneratorName]) -> GenWord {
    names.iter().map(|&n| (n, 1i8)).collect()
}

fn artin_word_letters(w: &ArtinWord) -> GenWord {
    w.letters()
        .iter()
        .map(|&(v, s)| (GeneratorName::Vertex(v), s))
        .collect()
}

/// The element of the normal-form model denoted by a twist/lift generator.
pub fn generator_element(group: &IsoGroup, name: GeneratorName) -> AutElem {
    match name {
        GeneratorName::EvenTwist(slot) => {
            AutElem::single(group, slot, 1).expect("even twist is well-formed")
        }
        GeneratorName::OddTwistSquare(slot) => {
            AutElem::single(group, slot, 2).expect("odd square is well-formed")
        }
        GeneratorName::IsoLift(j) => lift(group, j),
        _ => panic!("not a twist/lift generator"),
    }
}

/// The Artin presentation of the defining graph: one generator per vertex,
/// one alternating relation per edge.
pub fn artin_presentation(g: &LabeledGraph) -> Presentation {
    let generators: Vec<(GeneratorName, String)> = vertices_in_name_order(g)
        .into_iter()
        .map(|v| (GeneratorName::Vertex(v), g.name(v).to_string()))
        .collect();
    let mut relations = Vec::new();
    let mut edges: Vec<((usize, usize), u32)> = g.edges().collect();
    edges.sort_by_key(|&((u, v), _)| {
        let (a, b) = if g.name(u) <= g.name(v) { (u, v) } else { (v, u) };
        (g.name(a).to_string(), g.name(b).to_string())
    });
    for ((u, v), m) in edges {
        let (a, b) = if g.name(u) <= g.name(v) { (u, v) } else { (v, u) };
        relations.push(Relation {
            left: artin_word_letters(&alternating_product(a, b, m)),
            right: artin_word_letters(&alternating_product(b, a, m)),
            family: Family::R0,
        });
    }
    Presentation {
        group_kind: PresentedGroup::Artin,
        generators,
        relations,
    }
}

/// Instantiate every relation family over the isomorphism group.
pub fn relation_sets(group: &IsoGroup) -> RelationSets {
    let tree = &group.tree;
    let g = &tree.graph;
    let sgens = twist_lift_generators(group);

    // R0: Artin relations, the action of every twist/lift generator and of
    // the inversion on the inner generators, with fully expanded images.
    let mut r0 = Vec::new();
    for rel in artin_presentation(g).relations {
        r0.push(Relation {
            family: Family::R0,
            ..rel
        });
    }
    for &sg in &sgens {
        let elem = SignedAutElem::positive(generator_element(group, sg));
        let images = induced_map(group, &elem);
        for v in vertices_in_name_order(g) {
            let mut right = artin_word_letters(&images[&v]);
            right.push((sg, 1));
            r0.push(Relation {
                left: vec![(sg, 1), (GeneratorName::Vertex(v), 1)],
                right,
                family: Family::R0,
            });
        }
    }
    for v in vertices_in_name_order(g) {
        r0.push(Relation {
            left: vec![(GeneratorName::Inversion, 1), (GeneratorName::Vertex(v), 1)],
            right: vec![(GeneratorName::Vertex(v), -1), (GeneratorName::Inversion, 1)],
            family: Family::R0,
        });
    }

    // R1: commutators among the Dehn generators, deduplicated by slot order.
    let mut r1 = Vec::new();
    let n_out = tree.outward.len();
    for i in 0..n_out {
        for j in (i + 1)..n_out {
            let (gi, gj) = (twist_generator(group, i), twist_generator(group, j));
            r1.push(Relation {
                left: word_of(&[gi, gj]),
                right: word_of(&[gj, gi]),
                family: Family::R1,
            });
        }
    }

    // R2: the action of every lift on every Dehn generator by push-forward.
    let mut r2 = Vec::new();
    for j in 0..group.order() {
        for slot in 0..n_out {
            let edge_idx = tree.outward[slot];
            let img_edge = group.actions[j][edge_idx];
            let img_slot = tree
                .outward
                .iter()
                .position(|&e| e == img_edge)
                .expect("outward maps to outward");
            let a = GeneratorName::IsoLift(j);
            r2.push(Relation {
                left: word_of(&[a, twist_generator(group, slot)]),
                right: word_of(&[twist_generator(group, img_slot), a]),
                family: Family::R2,
            });
        }
    }

    // R3: lift products corrected by the squared twisted intersection.
    let mut r3 = Vec::new();
    for i in 0..group.order() {
        for j in 0..group.order() {
            let carry = group.twisted_product(i, j);
            let mut right = squared_selection_word(group, &carry);
            right.push((GeneratorName::IsoLift(group.table[i][j]), 1));
            r3.push(Relation {
                left: word_of(&[GeneratorName::IsoLift(i), GeneratorName::IsoLift(j)]),
                right,
                family: Family::R3,
            });
        }
    }

    // R4: the inversion is an involution, conjugates every lift through its
    // squared twist part, and inverts every Dehn generator.
    let mut r4 = Vec::new();
    r4.push(Relation {
        left: word_of(&[GeneratorName::Inversion, GeneratorName::Inversion]),
        right: Vec::new(),
        family: Family::R4,
    });
    for j in 0..group.order() {
        let mut right = squared_selection_word(group, &group.elements[j].eta);
        right.push((GeneratorName::Inversion, 1));
        right.push((GeneratorName::IsoLift(j), 1));
        r4.push(Relation {
            left: vec![(GeneratorName::IsoLift(j), 1), (GeneratorName::Inversion, 1)],
            right,
            family: Family::R4,
        });
    }
    for slot in 0..n_out {
        let t = twist_generator(group, slot);
        r4.push(Relation {
            left: word_of(&[t, GeneratorName::Inversion, t, GeneratorName::Inversion]),
            right: Vec::new(),
            family: Family::R4,
        });
    }

    // The central twist composite, when the center is a separating edge.
    let (r_phi, r_phi_tilde) = match tree.center {
        NodeRef::Chunk(_) => (Vec::new(), Vec::new()),
        NodeRef::SepEdge(si) => {
            let (s, t) = tree.sep_edges[si];
            let label = tree.sep_labels[si];
            let phi_word: GenWord = if label % 2 == 0 {
                // All center-adjacent edges are even outward twists.
                (0..n_out)
                    .filter(|&slot| tree.tree_edges[tree.outward[slot]].sep == si)
                    .map(|slot| (GeneratorName::EvenTwist(slot), 1i8))
                    .collect()
            } else {
                let phi = special_phi(group);
                vec![(GeneratorName::IsoLift(phi.core.alpha), 1)]
            };
            let x_inv = quasi_center(g, s, t, label).inverse();
            let tilde = Relation {
                left: phi_word.clone(),
                right: artin_word_letters(&x_inv),
                family: Family::RPhiTilde,
            };
            let phi_rel = Relation {
                left: phi_word,
                right: Vec::new(),
                family: Family::RPhi,
            };
            (vec![phi_rel], vec![tilde])
        }
    };

    RelationSets {
        r0,
        r1,
        r2,
        r3,
        r4,
        r_phi,
        r_phi_tilde,
    }
}

/// Assemble the presentation of the requested group.
pub fn presentation(group: &IsoGroup, kind: PresentedGroup) -> Presentation {
    if kind == PresentedGroup::Artin {
        return artin_presentation(&group.tree.graph);
    }
    let sets = relation_sets(group);
    let g = &group.tree.graph;
    let mut generators: Vec<GeneratorName> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    match kind {
        PresentedGroup::Artin => unreachable!(),
        PresentedGroup::AutA => {
            generators.extend(twist_lift_generators(group));
            relations.extend(sets.r1);
            relations.extend(sets.r2);
            relations.extend(sets.r3);
        }
        PresentedGroup::AutAModZ => {
            generators.extend(twist_lift_generators(group));
            relations.extend(sets.r1);
            relations.extend(sets.r2);
            relations.extend(sets.r3);
            relations.extend(sets.r_phi);
        }
        PresentedGroup::Out => {
            generators.extend(twist_lift_generators(group));
            generators.push(GeneratorName::Inversion);
            relations.extend(sets.r1);
            relations.extend(sets.r2);
            relations.extend(sets.r3);
            relations.extend(sets.r4);
            relations.extend(sets.r_phi);
        }
        PresentedGroup::Aut => {
            generators.extend(
                vertices_in_name_order(g)
                    .into_iter()
                    .map(GeneratorName::Vertex),
            );
            generators.extend(twist_lift_generators(group));
            generators.push(GeneratorName::Inversion);
            relations.extend(sets.r0);
            relations.extend(sets.r1);
            relations.extend(sets.r2);
            relations.extend(sets.r3);
            relations.extend(sets.r4);
            relations.extend(sets.r_phi_tilde);
        }
    }
    let generators = generators
        .into_iter()
        .map(|n| (n, generator_text(group, n)))
        .collect();
    Presentation {
        group_kind: kind,
        generators,
        relations,
    }
}

impl Presentation {
    fn gen_index(&self, name: GeneratorName) -> usize {
        self.generators
            .iter()
            .position(|&(n, _)| n == name)
            .expect("relation letter is a listed generator")
    }

    pub fn word_text(&self, word: &GenWord) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter()
            .map(|&(n, s)| {
                let t = &self.generators[self.gen_index(n)].1;
                if s == 1 {
                    t.clone()
                } else {
                    format!("{t}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn relation_text(&self, rel: &Relation) -> String {
        format!(
            "{} = {}",
            self.word_text(&rel.left),
            self.word_text(&rel.right)
        )
    }

    /// Exponent-sum matrix of the relations (rows) over the generators.
    pub fn abelianized_matrix(&self) -> (usize, usize, Vec<i64>) {
        let rows = self.relations.len();
        let cols = self.generators.len();
        let mut entries = vec![0i64; rows * cols];
        for (r, rel) in self.relations.iter().enumerate() {
            for &(n, s) in &rel.left {
                entries[r * cols + self.gen_index(n)] += s as i64;
            }
            for &(n, s) in &rel.right {
                entries[r * cols + self.gen_index(n)] -= s as i64;
            }
        }
        (rows, cols, entries)
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = self
            .generators
            .iter()
            .map(|(n, t)| {
                json!({
                    "name": t,
                    "kind": match n {
                        GeneratorName::Vertex(_) => "vertex",
                        GeneratorName::EvenTwist(_) => "even_twist",
                        GeneratorName::OddTwistSquare(_) => "odd_twist_square",
                        GeneratorName::IsoLift(_) => "iso_lift",
                        GeneratorName::Inversion => "inversion",
                    },
                })
            })
            .collect();
        let rels: Vec<Value> = self
            .relations
            .iter()
            .map(|r| {
                json!({
                    "family": r.family.label(),
                    "left": self.word_text(&r.left),
                    "right": self.word_text(&r.right),
                })
            })
            .collect();
        json!({
            "group": self.group_kind.label(),
            "generators": gens,
            "relations": rels,
        })
    }

    /// Plain-text computer-algebra export: a free group and a relator list.
    pub fn to_cas_text(&self) -> String {
        let ident = |t: &str| t.replace("^2", "_sq").replace('-', "_");
        let names: Vec<String> = self.generators.iter().map(|(_, t)| ident(t)).collect();
        let mut s = format!(
            "F := FreeGroup({});\n",
            names
                .iter()
                .map(|n| format!("\"{n}\""))
                .collect::<Vec<_>>()
                .join(", ")
        );
        for (i, n) in names.iter().enumerate() {
            s.push_str(&format!("{n} := F.{};\n", i + 1));
        }
        let word = |w: &GenWord| -> String {
            if w.is_empty() {
                return "One(F)".into();
            }
            w.iter()
                .map(|&(g, sign)| {
                    let t = &names[self.gen_index(g)];
                    if sign == 1 {
                        t.clone()
                    } else {
                        format!("{t}^-1")
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        };
        s.push_str("rels := [\n");
        for r in &self.relations {
            s.push_str(&format!("  {}*({})^-1,\n", word(&r.left), word(&r.right)));
        }
        s.push_str("];\nG := F / rels;\n");
        s
    }

    /// Human-readable listing.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "presentation {} : {} generators, {} relations\ngenerators: {}\n",
            self.group_kind.label(),
            self.generators.len(),
            self.relations.len(),
            self.generators
                .iter()
                .map(|(_, t)| t.clone())
                .collect::<Vec<_>>()
                .join(", ")
        );
        for r in &self.relations {
            s.push_str(&format!("[{}] {}\n", r.family.label(), self.relation_text(r)));
        }
        s
    }
}

/// Abelianization via Smith normal form: torsion coefficients and free rank.
pub fn abelianization(p: &Presentation) -> (Vec<u64>, usize) {
    let (rows, cols, entries) = p.abelianized_matrix();
    invariant_factors(rows, cols, &entries)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyStatus {
    Pass,
    Fail,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct VerifyEntry {
    pub family: Family,
    pub text: String,
    pub status: VerifyStatus,
    pub detail: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub entries: Vec<VerifyEntry>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.status == VerifyStatus::Pass)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut pass = 0;
        let mut fail = 0;
        let mut unknown = 0;
        for e in &self.entries {
            match e.status {
                VerifyStatus::Pass => pass += 1,
                VerifyStatus::Fail => fail += 1,
                VerifyStatus::Unknown => unknown += 1,
            }
        }
        (pass, fail, unknown)
    }

    pub fn family_counts(&self) -> BTreeMap<&'static str, (usize, usize, usize)> {
        let mut out: BTreeMap<&'static str, (usize, usize, usize)> = BTreeMap::new();
        for e in &self.entries {
            let c = out.entry(e.family.label()).or_insert((0, 0, 0));
            match e.status {
                VerifyStatus::Pass => c.0 += 1,
                VerifyStatus::Fail => c.1 += 1,
                VerifyStatus::Unknown => c.2 += 1,
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (fam, (p, f, u)) in self.family_counts() {
            s.push_str(&format!("{fam}: {p} pass, {f} fail, {u} unknown\n"));
        }
        for e in &self.entries {
            if e.status != VerifyStatus::Pass {
                s.push_str(&format!(
                    "{} [{}] {}{}\n",
                    match e.status {
                        VerifyStatus::Fail => "FAIL",
                        VerifyStatus::Unknown => "UNKNOWN",
                        VerifyStatus::Pass => unreachable!(),
                    },
                    e.family.label(),
                    e.text,
                    e.detail
                        .as_ref()
                        .map(|d| format!(" ({d})"))
                        .unwrap_or_default()
                ));
            }
        }
        let (p, f, u) = self.counts();
        s.push_str(&format!("total: {p} pass, {f} fail, {u} unknown\n"));
        s
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "family": e.family.label(),
                    "relation": e.text,
                    "status": match e.status {
                        VerifyStatus::Pass => "pass",
                        VerifyStatus::Fail => "fail",
                        VerifyStatus::Unknown => "unknown",
                    },
                    "detail": e.detail,
                })
            })
            .collect();
        let (p, f, u) = self.counts();
        json!({
            "pass": p,
            "fail": f,
            "unknown": u,
            "entries": entries,
        })
    }
}

/// Evaluate a twist/lift word in the normal-form model (rightmost first).
fn eval_autg(group: &IsoGroup, word: &GenWord) -> AutElem {
    let mut acc = AutElem::identity(group);
    for &(name, sign) in word {
        let e = generator_element(group, name);
        let e = if sign == 1 { e } else { inverse(group, &e) };
        acc = compose(group, &acc, &e);
    }
    acc
}

/// Evaluate a word that may contain the inversion in the sign-extended
/// model.
fn eval_signed(group: &IsoGroup, word: &GenWord) -> SignedAutElem {
    let mut acc = SignedAutElem::identity(group);
    for &(name, sign) in word {
        let e = match name {
            GeneratorName::Inversion => SignedAutElem::inversion(group),
            _ => SignedAutElem::positive(generator_element(group, name)),
        };
        let e = if sign == 1 {
            e
        } else {
            crate::autg::ext_inverse(group, &e)
        };
        acc = crate::autg::ext_compose(group, &acc, &e);
    }
    acc
}

/// Generator-image table of one signed presentation letter.
fn letter_table(group: &IsoGroup, name: GeneratorName, sign: i8) -> BTreeMap<usize, ArtinWord> {
    let g = &group.tree.graph;
    let n = g.vertex_count();
    match name {
        GeneratorName::Vertex(v) => {
            // Inner automorphism w -> V w V^-1 with V = v^sign.
            let conj = ArtinWord::from_letters([(v, -sign)]);
            (0..n)
                .map(|u| (u, ArtinWord::generator(u).conjugated(&conj)))
                .collect()
        }
        GeneratorName::Inversion => (0..n)
            .map(|u| (u, ArtinWord::from_letters([(u, -1)])))
            .collect(),
        _ => {
            let e = generator_element(group, name);
            let e = if sign == 1 { e } else { inverse(group, &e) };
            induced_map(group, &SignedAutElem::positive(e))
        }
    }
}

/// Apply a generator-image table homomorphically to a word.
fn apply_table(table: &BTreeMap<usize, ArtinWord>, w: &ArtinWord) -> ArtinWord {
    let mut out = ArtinWord::empty();
    for &(v, s) in w.letters() {
        let img = &table[&v];
        let img = if s == 1 { img.clone() } else { img.inverse() };
        out = out.concat(&img);
    }
    out
}

/// Image of the Artin generator `u` under a presentation word, applying the
/// rightmost letter first.
fn eval_word_on_generator(
    group: &IsoGroup,
    tables: &mut BTreeMap<(GeneratorName, i8), BTreeMap<usize, ArtinWord>>,
    word: &GenWord,
    u: usize,
) -> ArtinWord {
    let mut w = ArtinWord::generator(u);
    for &(name, sign) in word.iter().rev() {
        let table = tables
            .entry((name, sign))
            .or_insert_with(|| letter_table(group, name, sign));
        w = apply_table(table, &w);
    }
    w
}

/// Optional overrides for the word-search bounds used by verification.
#[derive(Debug, Clone, Copy, Default)]
pub struct VerifyBounds {
    pub max_len: Option<usize>,
    pub budget: Option<usize>,
}

/// Verify one relation word-level: both sides applied to every Artin
/// generator, compared by bounded rewriting.
fn verify_word_level(
    group: &IsoGroup,
    tables: &mut BTreeMap<(GeneratorName, i8), BTreeMap<usize, ArtinWord>>,
    rel: &Relation,
    bounds: VerifyBounds,
) -> (VerifyStatus, Option<String>) {
    let g = &group.tree.graph;
    let mut status = VerifyStatus::Pass;
    for u in 0..g.vertex_count() {
        let lhs = eval_word_on_generator(group, tables, &rel.left, u);
        let rhs = eval_word_on_generator(group, tables, &rel.right, u);
        if lhs == rhs {
            continue;
        }
        if abelian_distinct(g, &lhs, &rhs) {
            return (
                VerifyStatus::Fail,
                Some(format!(
                    "images of {} differ in homology: {} vs {}",
                    g.name(u),
                    lhs.display(g),
                    rhs.display(g)
                )),
            );
        }
        let sb = SearchBounds::for_words(g, &lhs, &rhs)
            .with_overrides(bounds.max_len, bounds.budget);
        match word_equal_bounded(g, &lhs, &rhs, sb) {
            WordVerdict::Equal => {}
            WordVerdict::Unknown => {
                status = VerifyStatus::Unknown;
            }
        }
    }
    (status, None)
}

/// Run every relation family through its executable model and report
/// pass/fail/unknown per relation.
pub fn verify_relation_sets(
    group: &IsoGroup,
    sets: &RelationSets,
    bounds: VerifyBounds,
) -> VerifyReport {
    // Rendering needs a presentation-wide generator list; the full one.
    let pres = presentation_with(group, PresentedGroup::Aut, None);
    let mut entries = Vec::new();
    let mut tables: BTreeMap<(GeneratorName, i8), BTreeMap<usize, ArtinWord>> = BTreeMap::new();

    // R1/R2/R3: equality of normal forms.
    for rel in sets.r1.iter().chain(&sets.r2).chain(&sets.r3) {
        let lhs = eval_autg(group, &rel.left);
        let rhs = eval_autg(group, &rel.right);
        let status = if lhs == rhs {
            VerifyStatus::Pass
        } else {
            VerifyStatus::Fail
        };
        entries.push(VerifyEntry {
            family: rel.family,
            text: pres.relation_text(rel),
            status,
            detail: (status == VerifyStatus::Fail)
                .then(|| format!("normal forms differ: {lhs:?} vs {rhs:?}")),
        });
    }

    // R4: equality in the sign-extended model.
    for rel in &sets.r4 {
        let lhs = eval_signed(group, &rel.left);
        let rhs = eval_signed(group, &rel.right);
        let status = if lhs == rhs {
            VerifyStatus::Pass
        } else {
            VerifyStatus::Fail
        };
        entries.push(VerifyEntry {
            family: rel.family,
            text: pres.relation_text(rel),
            status,
            detail: (status == VerifyStatus::Fail)
                .then(|| format!("extended normal forms differ: {lhs:?} vs {rhs:?}")),
        });
    }

    // R_phi: the relator must evaluate to the central automorphism, and its
    // generator images must agree word-level with the inner automorphism it
    // is divided out by (the same identification R_phi~ asserts).
    let phi = special_phi(group);
    for rel in &sets.r_phi {
        let elem = eval_autg(group, &rel.left);
        if SignedAutElem::positive(elem.clone()) != phi {
            entries.push(VerifyEntry {
                family: rel.family,
                text: pres.relation_text(rel),
                status: VerifyStatus::Fail,
                detail: Some("relator is not the central twist composite".into()),
            });
            continue;
        }
        let tilde = sets
            .r_phi_tilde
            .first()
            .expect("edge-centered graphs carry the identification");
        let (status, detail) = verify_word_level(group, &mut tables, tilde, bounds);
        entries.push(VerifyEntry {
            family: rel.family,
            text: pres.relation_text(rel),
            status,
            detail,
        });
    }

    // R0 and R_phi~: word-level checks on every Artin generator.
    for rel in sets.r0.iter().chain(&sets.r_phi_tilde) {
        let (status, detail) = verify_word_level(group, &mut tables, rel, bounds);
        entries.push(VerifyEntry {
            family: rel.family,
            text: pres.relation_text(rel),
            status,
            detail,
        });
    }

    entries.sort_by_key(|e| e.family);
    VerifyReport { entries }
}

fn presentation_with(
    group: &IsoGroup,
    kind: PresentedGroup,
    _unused: Option<()>,
) -> Presentation {
    presentation(group, kind)
}

/// Full pipeline: build the relation sets of `g` and verify every family.
pub fn verify_presentation(g: &LabeledGraph, bounds: VerifyBounds) -> Result<VerifyReport> {
    let group = iso_group(g)?;
    let sets = relation_sets(&group);
    Ok(verify_relation_sets(&group, &sets, bounds))
}

/// Which structural decompositions apply to the automorphism group of the
/// given graph's Artin group.
pub fn structure_report(g: &LabeledGraph) -> Result<String> {
    let group = iso_group(g)?;
    let tree = &group.tree;
    let mut s = String::new();
    let (rigid, discrete) = crate::twist::rigidity_report(tree);
    s.push_str(&format!(
        "graph: {} vertices, {} edges; rigid: {rigid}, discretely rigid: {discrete}\n",
        g.vertex_count(),
        g.edge_count()
    ));
    s.push_str(&format!(
        "chunk tree: {} chunks, {} separating edges; outward {} (even {}, odd {}); center: {}\n",
        tree.chunks.len(),
        tree.sep_edges.len(),
        tree.outward.len(),
        tree.outward_even.len(),
        tree.outward_odd.len(),
        tree.node_name(tree.center)
    ));
    s.push_str(&format!(
        "iso group: order {}, graph automorphisms {}, twist class size {}\n",
        group.order(),
        group.aut_indices.len(),
        group.class.len()
    ));
    s.push_str("Out(A) = (AutA(A) / Z) x| Z2 in every case.\n");
    match tree.center {
        NodeRef::Chunk(_) => {
            s.push_str(
                "center is a chunk: Z is trivial, Aut(A) = Inn(A) x| Out(A) and \
                 Out(A) = AutA(A) x| Z2.\n",
            );
        }
        NodeRef::SepEdge(si) => {
            let (a, b) = tree.sep_edges[si];
            let x = quasi_center(g, a, b, tree.sep_labels[si]);
            s.push_str(&format!(
                "center is the separating edge {} (label {}): Z = Z generated by \
                 conjugation by {}",
                tree.sep_name(si),
                tree.sep_labels[si],
                x.display(g)
            ));
            if tree.sep_labels[si] % 2 == 0 {
                s.push_str("; the central automorphism is the pure twist composite.\n");
            } else {
                s.push_str(
                    "; the central automorphism composes the twists with the endpoint swap.\n",
                );
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::Perm;

    #[test]
    fn artin_presentations_of_fixtures() {
        let p = artin_presentation(&fixtures::g6());
        assert_eq!(p.generators.len(), 6);
        assert_eq!(p.relations.len(), 7);
        let p = artin_presentation(&fixtures::g13());
        assert_eq!(p.generators.len(), 13);
        assert_eq!(p.relations.len(), 17);
        let single = crate::graph::parse_graph("vertex s\nvertex t\nedge s t 3\n").unwrap();
        let p = artin_presentation(&single);
        assert_eq!(p.relation_text(&p.relations[0]), "s*t*s = t*s*t");
    }

    #[test]
    fn family_cardinalities() {
        let group = iso_group(&fixtures::g13()).unwrap();
        let sets = relation_sets(&group);
        let n_out = group.tree.outward.len();
        let order = group.order();
        let n_s = n_out + order;
        assert_eq!(sets.r1.len(), n_out * (n_out - 1) / 2);
        assert_eq!(sets.r2.len(), order * n_out);
        assert_eq!(sets.r3.len(), order * order);
        assert_eq!(sets.r4.len(), 1 + order + n_out);
        assert_eq!(
            sets.r0.len(),
            17 + n_s * 13 + 13 // artin + action relations + inversion action
        );
        assert!(sets.r_phi.is_empty()); // chunk center
        assert!(sets.r_phi_tilde.is_empty());
    }

    #[test]
    fn phi_families_for_edge_centers() {
        let group = iso_group(&fixtures::g6()).unwrap();
        let sets = relation_sets(&group);
        assert_eq!(sets.r_phi.len(), 1);
        assert_eq!(sets.r_phi_tilde.len(), 1);
        // Odd center: the relator is the lift of the endpoint swap.
        let phi = special_phi(&group);
        assert_eq!(
            sets.r_phi[0].left,
            vec![(GeneratorName::IsoLift(phi.core.alpha), 1)]
        );
        let g = &group.tree.graph;
        let swap = Perm::from_swaps(g, &[("c", "f")]);
        assert_eq!(group.elements[phi.core.alpha].perm, swap);
        // The identified inner word is the inverse quasi-center c*f*c.
        let rhs = &sets.r_phi_tilde[0].right;
        assert_eq!(rhs.len(), 3);
        assert!(rhs.iter().all(|&(_, s)| s == -1));

        let group = iso_group(&fixtures::geven()).unwrap();
        let sets = relation_sets(&group);
        assert_eq!(sets.r_phi.len(), 1);
        // Even center: the relator is the product of both center twists.
        assert_eq!(
            sets.r_phi[0].left,
            vec![
                (GeneratorName::EvenTwist(0), 1),
                (GeneratorName::EvenTwist(1), 1)
            ]
        );
    }

    #[test]
    fn presentation_shapes() {
        let group = iso_group(&fixtures::g6()).unwrap();
        let out = presentation(&group, PresentedGroup::Out);
        // 2 odd squares + 4 lifts + inversion.
        assert_eq!(out.generators.len(), 7);
        let aut = presentation(&group, PresentedGroup::Aut);
        assert_eq!(aut.generators.len(), 6 + 6 + 1);
        let auta = presentation(&group, PresentedGroup::AutA);
        assert!(auta
            .relations
            .iter()
            .all(|r| matches!(r.family, Family::R1 | Family::R2 | Family::R3)));
        let modz = presentation(&group, PresentedGroup::AutAModZ);
        assert_eq!(modz.relations.len(), auta.relations.len() + 1);
    }

    #[test]
    fn abelianization_of_out_presentations() {
        let group = iso_group(&fixtures::g6()).unwrap();
        let out = presentation(&group, PresentedGroup::Out);
        assert_eq!(abelianization(&out), (vec![2, 2], 0));

        let group = iso_group(&fixtures::g13()).unwrap();
        let out = presentation(&group, PresentedGroup::Out);
        assert_eq!(abelianization(&out), (vec![2, 2, 2, 2, 2], 0));
    }

    #[test]
    fn abelianization_of_free_and_artin() {
        let free = Presentation {
            group_kind: PresentedGroup::Artin,
            generators: vec![(GeneratorName::Vertex(0), "a".into())],
            relations: vec![],
        };
        assert_eq!(abelianization(&free), (vec![], 1));
        // G6 has one odd edge: homology Z^5.
        let p = artin_presentation(&fixtures::g6());
        assert_eq!(abelianization(&p), (vec![], 5));
    }

    #[test]
    fn verify_geven_passes() {
        let report = verify_presentation(&fixtures::geven(), VerifyBounds::default()).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn verify_g6_passes() {
        let report = verify_presentation(&fixtures::g6(), VerifyBounds::default()).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn corrupted_relation_is_caught() {
        let group = iso_group(&fixtures::g6()).unwrap();
        let mut sets = relation_sets(&group);
        // Corrupt one R3 relation: drop the twist correction.
        let idx = sets
            .r3
            .iter()
            .position(|r| r.right.len() > 1)
            .expect("some product carries a twist correction");
        sets.r3[idx].right = vec![*sets.r3[idx].right.last().unwrap()];
        let report = verify_relation_sets(&group, &sets, VerifyBounds::default());
        assert!(!report.passed());
        assert!(report
            .entries
            .iter()
            .any(|e| e.family == Family::R3 && e.status == VerifyStatus::Fail));
    }

    #[test]
    fn structure_report_branches() {
        let s = structure_report(&fixtures::g8()).unwrap();
        assert!(s.contains("center is a chunk"));
        assert!(s.contains("rigid: false, discretely rigid: true"));
        let s = structure_report(&fixtures::g6()).unwrap();
        assert!(s.contains("center is the separating edge {c,f}"));
        assert!(s.contains("Z = Z generated by conjugation by c*f*c"));
        let s = structure_report(&fixtures::geven()).unwrap();
        assert!(s.contains("pure twist composite"));
    }

    #[test]
    fn cas_export_is_wellformed() {
        let group = iso_group(&fixtures::g6()).unwrap();
        let out = presentation(&group, PresentedGroup::Out);
        let cas = out.to_cas_text();
        assert!(cas.starts_with("F := FreeGroup("));
        assert!(cas.contains("rels := ["));
        assert!(!cas.contains("^2")); // sanitized identifiers
    }
}
