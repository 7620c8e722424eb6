//! Artin-group words, the elementary automorphisms as word maps, induced
//! generator images of normal-form automorphisms, and a bounded
//! word-equality semi-decision by breadth-first rewriting.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use crate::autg::SignedAutElem;
use crate::chunk::TwistEdgeRef;
use crate::graph::{LabeledGraph, Perm};
use crate::iso::IsoGroup;

/// A letter: vertex index with a sign.
pub type Letter = (usize, i8);

/// A freely reduced word over the Artin generators (the graph's vertices).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ArtinWord(Vec<Letter>);

impl ArtinWord {
    pub fn empty() -> Self {
        ArtinWord(Vec::new())
    }

    pub fn generator(v: usize) -> Self {
        ArtinWord(vec![(v, 1)])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = ArtinWord::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, (v, s): Letter) {
        debug_assert!(s == 1 || s == -1);
        match self.0.last() {
            Some(&(lv, ls)) if lv == v && ls == -s => {
                self.0.pop();
            }
            _ => self.0.push((v, s)),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> ArtinWord {
        ArtinWord(self.0.iter().rev().map(|&(v, s)| (v, -s)).collect())
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    /// `conj^-1 . self . conj`.
    pub fn conjugated(&self, conj: &ArtinWord) -> ArtinWord {
        conj.inverse().concat(self).concat(conj)
    }

    pub fn pow(&self, e: i64) -> ArtinWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = ArtinWord::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Exponent-sum vector over the generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut sums = vec![0i64; n];
        for &(v, s) in &self.0 {
            sums[v] += s as i64;
        }
        sums
    }

    pub fn display(&self, g: &LabeledGraph) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|&(v, s)| {
                if s == 1 {
                    g.name(v).to_string()
                } else {
                    format!("{}^-1", g.name(v))
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// The alternating product `(a, b; m)` of length `m`, starting with `a`.
pub fn alternating_product(a: usize, b: usize, m: u32) -> ArtinWord {
    assert!(m >= 1, "alternating product needs positive length");
    ArtinWord::from_letters((0..m).map(|i| (if i % 2 == 0 { a } else { b }, 1)))
}

/// The quasi-center of the edge subgroup on `{s,t}` with label `m`: the
/// alternating product of length `m` starting at the endpoint with the
/// lexicographically smaller name.
pub fn quasi_center(g: &LabeledGraph, s: usize, t: usize, m: u32) -> ArtinWord {
    assert!(m >= 2);
    let (a, b) = if g.name(s) <= g.name(t) { (s, t) } else { (t, s) };
    alternating_product(a, b, m)
}

/// A generator of the center of the edge subgroup: the quasi-center when
/// the label is even, its square when odd.
pub fn center_word(g: &LabeledGraph, s: usize, t: usize, m: u32) -> ArtinWord {
    let x = quasi_center(g, s, t, m);
    if m % 2 == 0 {
        x
    } else {
        x.concat(&x)
    }
}

/// The four elementary automorphism kinds as word maps.
#[derive(Debug, Clone)]
pub enum ElementaryAuto {
    /// Letterwise relabeling by a vertex permutation.
    GraphIso(Perm),
    /// Every generator to its inverse.
    GlobalInversion,
    /// Conjugation of the whole word: `w -> g^-1 w g`.
    Inner(ArtinWord),
    /// Fix the near side of the decomposition of a chunk-tree edge and
    /// conjugate the far side by the edge's quasi-center.
    PartialConjugation {
        fixed: BTreeSet<usize>,
        conjugator: ArtinWord,
    },
}

impl ElementaryAuto {
    pub fn partial(g: &LabeledGraph, tree_sep: (usize, usize), m: u32, eps: &TwistEdgeRef) -> Self {
        ElementaryAuto::PartialConjugation {
            fixed: eps.v1.clone(),
            conjugator: quasi_center(g, tree_sep.0, tree_sep.1, m),
        }
    }

    /// Image of a single signed letter.
    fn letter_image(&self, (v, s): Letter) -> ArtinWord {
        match self {
            ElementaryAuto::GraphIso(p) => ArtinWord(vec![(p.apply(v), s)]),
            ElementaryAuto::GlobalInversion => ArtinWord(vec![(v, -s)]),
            ElementaryAuto::Inner(_) => unreachable!("inner maps act on whole words"),
            ElementaryAuto::PartialConjugation { fixed, conjugator } => {
                if fixed.contains(&v) {
                    ArtinWord(vec![(v, s)])
                } else {
                    ArtinWord(vec![(v, s)]).conjugated(conjugator)
                }
            }
        }
    }
}

/// Apply an elementary automorphism to a word, freely reducing the result.
pub fn apply_auto(a: &ElementaryAuto, w: &ArtinWord) -> ArtinWord {
    match a {
        ElementaryAuto::Inner(c) => w.conjugated(c),
        _ => {
            let mut out = ArtinWord::empty();
            for &l in w.letters() {
                out = out.concat(&a.letter_image(l));
            }
            out
        }
    }
}

/// Generator images of a sign-extended normal-form automorphism: the sign
/// first, then the isomorphism part, then each outward twist as a partial
/// conjugation with its exponent (applied from the farthest scope inward).
pub fn induced_map(group: &IsoGroup, f: &SignedAutElem) -> BTreeMap<usize, ArtinWord> {
    let tree = &group.tree;
    let g = &tree.graph;
    let alpha = &group.elements[f.core.alpha].perm;
    let mut images = BTreeMap::new();
    for v in 0..g.vertex_count() {
        let sign = if f.sign { -1 } else { 1 };
        let u = alpha.apply(v);
        let mut w = ArtinWord(vec![(u, sign)]);
        // Twists whose scope contains u form a nested chain; conjugate by
        // the deepest first.
        let mut chain: Vec<usize> = tree
            .outward
            .iter()
            .enumerate()
            .filter(|&(slot, &edge_idx)| {
                f.core.eta[slot] != 0 && tree.tree_edges[edge_idx].scope.contains(&u)
            })
            .map(|(slot, _)| slot)
            .collect();
        chain.sort_by_key(|&slot| {
            let te = &tree.tree_edges[tree.outward[slot]];
            (std::cmp::Reverse(te.depth), te.index)
        });
        for slot in chain {
            let te = &tree.tree_edges[tree.outward[slot]];
            let (s, t) = tree.sep_edges[te.sep];
            let x = quasi_center(g, s, t, tree.sep_labels[te.sep]);
            w = w.conjugated(&x.pow(f.core.eta[slot]));
        }
        images.insert(v, w);
    }
    images
}

/// Result of the bounded equality search: `Unknown` covers both refuted and
/// out-of-budget instances; `Equal` is definite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordVerdict {
    Equal,
    Unknown,
}

/// Search bounds for [`word_equal_bounded`].
#[derive(Debug, Clone, Copy)]
pub struct SearchBounds {
    pub max_len: usize,
    pub budget: usize,
}

impl SearchBounds {
    pub const DEFAULT_BUDGET: usize = 100_000;

    /// Default bounds for a pair of words: length budget scales with the
    /// inputs and the largest relator.
    pub fn for_words(g: &LabeledGraph, w1: &ArtinWord, w2: &ArtinWord) -> Self {
        let m_max = g.edges().map(|(_, m)| m).max().unwrap_or(2) as usize;
        SearchBounds {
            max_len: 4 * (w1.len() + w2.len() + 2 * m_max),
            budget: Self::DEFAULT_BUDGET,
        }
    }

    pub fn with_overrides(self, max_len: Option<usize>, budget: Option<usize>) -> Self {
        SearchBounds {
            max_len: max_len.unwrap_or(self.max_len),
            budget: budget.unwrap_or(self.budget),
        }
    }
}

/// Class index per vertex in the abelianization of the Artin group: an
/// odd-labeled relator abelianizes to `s - t`, so vertices connected by
/// odd-labeled edges share a class; even labels impose nothing.
fn abelian_classes(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, v: usize) -> usize {
        if parent[v] != v {
            let r = find(parent, parent[v]);
            parent[v] = r;
        }
        parent[v]
    }
    for ((u, v), m) in g.edges() {
        if m % 2 == 1 {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru.max(rv)] = ru.min(rv);
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// True iff the exponent sums per abelianization class differ, which
/// soundly refutes equality in the Artin group.
pub fn abelian_distinct(g: &LabeledGraph, w1: &ArtinWord, w2: &ArtinWord) -> bool {
    let classes = abelian_classes(g);
    let collapse = |w: &ArtinWord| -> Vec<i64> {
        let mut sums = vec![0i64; g.vertex_count()];
        for &(v, s) in w.letters() {
            sums[classes[v]] += s as i64;
        }
        sums
    };
    collapse(w1) != collapse(w2)
}

/// Bounded semi-decision of `w1 = w2` in the Artin group of `g`.
///
/// Breadth-first search from the freely reduced `w1 . w2^-1` over two kinds
/// of rewrites, each followed by free reduction: replacing an occurrence of
/// an alternating relator word `(s,t;m)^{+-1}` by its counterpart
/// `(t,s;m)^{+-1}`, and inserting a cancelling generator pair at any
/// position. Words longer than `max_len` are discarded; at most `budget`
/// distinct words are visited. Returns `Equal` exactly when the empty word
/// is reached; `Unknown` is a value, never an exception.
pub fn word_equal_bounded(
    g: &LabeledGraph,
    w1: &ArtinWord,
    w2: &ArtinWord,
    bounds: SearchBounds,
) -> WordVerdict {
    if abelian_distinct(g, w1, w2) {
        return WordVerdict::Unknown;
    }
    let start = w1.concat(&w2.inverse());
    if start.is_empty() {
        return WordVerdict::Equal;
    }

    // Replacement table: for each edge, the four oriented relator variants.
    let mut rules: Vec<(Vec<Letter>, Vec<Letter>)> = Vec::new();
    for ((s, t), m) in g.edges() {
        let a = alternating_product(s, t, m);
        let b = alternating_product(t, s, m);
        rules.push((a.0.clone(), b.0.clone()));
        rules.push((b.0.clone(), a.0.clone()));
        rules.push((a.inverse().0, b.inverse().0));
        rules.push((b.inverse().0, a.inverse().0));
    }
    let letters: Vec<Letter> = (0..g.vertex_count())
        .flat_map(|v| [(v, 1), (v, -1)])
        .collect();

    let mut visited: HashSet<ArtinWord> = HashSet::new();
    let mut queue: VecDeque<ArtinWord> = VecDeque::new();
    visited.insert(start.clone());
    queue.push_back(start);

    fn enqueue(
        w: ArtinWord,
        visited: &mut HashSet<ArtinWord>,
        queue: &mut VecDeque<ArtinWord>,
    ) -> bool {
        if w.is_empty() {
            return true;
        }
        if !visited.contains(&w) {
            visited.insert(w.clone());
            queue.push_back(w);
        }
        false
    }

    while let Some(w) = queue.pop_front() {
        if visited.len() > bounds.budget {
            return WordVerdict::Unknown;
        }
        // Relator replacements first: they are the moves that make progress.
        for (from, to) in &rules {
            if from.len() > w.len() {
                continue;
            }
            for pos in 0..=(w.len() - from.len()) {
                if &w.0[pos..pos + from.len()] == from.as_slice() {
                    let mut nw = ArtinWord::from_letters(w.0[..pos].iter().copied());
                    for &l in to {
                        nw.push(l);
                    }
                    for &l in &w.0[pos + from.len()..] {
                        nw.push(l);
                    }
                    if nw.len() <= bounds.max_len
                        && enqueue(nw, &mut visited, &mut queue)
                    {
                        return WordVerdict::Equal;
                    }
                }
            }
        }
        // Cancelling-pair insertions.
        if w.len() + 2 <= bounds.max_len {
            for pos in 0..=w.len() {
                for &(v, s) in &letters {
                    let mut nw = ArtinWord::from_letters(w.0[..pos].iter().copied());
                    nw.push((v, s));
                    nw.push((v, -s));
                    for &l in &w.0[pos..] {
                        nw.push(l);
                    }
                    if nw.len() == w.len() {
                        continue; // insertion cancelled away
                    }
                    if enqueue(nw, &mut visited, &mut queue) {
                        return WordVerdict::Equal;
                    }
                }
            }
        }
    }
    WordVerdict::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autg::{lift, special_phi, AutElem, SignedAutElem};
    use crate::fixtures;
    use crate::iso::iso_group;
    use proptest::prelude::*;

    fn w(g: &LabeledGraph, spec: &[(&str, i8)]) -> ArtinWord {
        ArtinWord::from_letters(
            spec.iter()
                .map(|&(n, s)| (g.index_of(n).unwrap(), s)),
        )
    }

    #[test]
    fn alternating_products() {
        let g = fixtures::g6();
        let s = g.index_of("c").unwrap();
        let t = g.index_of("f").unwrap();
        assert_eq!(alternating_product(s, t, 1), ArtinWord(vec![(s, 1)]));
        assert_eq!(
            alternating_product(s, t, 3),
            ArtinWord(vec![(s, 1), (t, 1), (s, 1)])
        );
        assert_eq!(
            alternating_product(t, s, 2),
            ArtinWord(vec![(t, 1), (s, 1)])
        );
    }

    #[test]
    fn quasi_center_and_center_words() {
        let g = fixtures::g6();
        let c = g.index_of("c").unwrap();
        let f = g.index_of("f").unwrap();
        // Lexicographically smaller endpoint first even if given reversed.
        assert_eq!(quasi_center(&g, f, c, 3), w(&g, &[("c", 1), ("f", 1), ("c", 1)]));
        assert_eq!(center_word(&g, c, f, 3).len(), 6);
        let ge = fixtures::geven();
        let s = ge.index_of("s").unwrap();
        let t = ge.index_of("t").unwrap();
        assert_eq!(
            center_word(&ge, s, t, 4),
            w(&ge, &[("s", 1), ("t", 1), ("s", 1), ("t", 1)])
        );
        assert_eq!(quasi_center(&g, c, f, 2), w(&g, &[("c", 1), ("f", 1)]));
    }

    #[test]
    fn free_reduction_in_constructors() {
        let g = fixtures::g6();
        let a = g.index_of("a").unwrap();
        let b = g.index_of("b").unwrap();
        let word = ArtinWord::from_letters([(a, 1), (b, 1), (b, -1), (a, -1), (a, 1)]);
        assert_eq!(word, ArtinWord(vec![(a, 1)]));
        assert!(word.concat(&word.inverse()).is_empty());
    }

    #[test]
    fn elementary_auto_images() {
        let g = fixtures::g6();
        let inv = ElementaryAuto::GlobalInversion;
        let ab = w(&g, &[("a", 1), ("b", 1)]);
        assert_eq!(apply_auto(&inv, &ab), w(&g, &[("a", -1), ("b", -1)]));

        let tree = crate::chunk::chunk_tree(&g).unwrap();
        // Outward edge toward the chunk {c,d,e,f}; near side is {a,b,c,f}.
        let c2: BTreeSet<usize> = ["c", "d", "e", "f"].iter().map(|n| g.index_of(n).unwrap()).collect();
        let (c, f) = (g.index_of("c").unwrap(), g.index_of("f").unwrap());
        let idx = tree.find_edge((c, f), &c2).unwrap();
        let pc = ElementaryAuto::partial(&g, (c, f), 3, &tree.tree_edges[idx]);
        let d = g.index_of("d").unwrap();
        assert_eq!(
            apply_auto(&pc, &ArtinWord::generator(d)),
            ArtinWord::generator(d).conjugated(&w(&g, &[("c", 1), ("f", 1), ("c", 1)]))
        );
        let a = g.index_of("a").unwrap();
        assert_eq!(apply_auto(&pc, &ArtinWord::generator(a)), ArtinWord::generator(a));
    }

    #[test]
    fn inner_composition_law() {
        let g = fixtures::g6();
        let gw = w(&g, &[("a", 1), ("c", -1), ("f", 1)]);
        let hw = w(&g, &[("b", 1), ("d", 1)]);
        let word = w(&g, &[("e", 1), ("a", -1), ("e", 1)]);
        let lhs = apply_auto(
            &ElementaryAuto::Inner(gw.clone()),
            &apply_auto(&ElementaryAuto::Inner(hw.clone()), &word),
        );
        let rhs = apply_auto(&ElementaryAuto::Inner(hw.concat(&gw)), &word);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn induced_map_of_identity_and_lift() {
        let g = fixtures::g6();
        let group = iso_group(&g).unwrap();
        let id = SignedAutElem::identity(&group);
        for (v, img) in induced_map(&group, &id) {
            assert_eq!(img, ArtinWord::generator(v));
        }

        let a1 = group
            .index_of(&Perm::from_swaps(&g, &[("c", "f"), ("d", "e")]))
            .unwrap();
        let images = induced_map(&group, &SignedAutElem::positive(lift(&group, a1)));
        let x = w(&g, &[("c", 1), ("f", 1), ("c", 1)]);
        let idx = |n: &str| g.index_of(n).unwrap();
        assert_eq!(images[&idx("c")], ArtinWord::generator(idx("f")));
        assert_eq!(images[&idx("f")], ArtinWord::generator(idx("c")));
        assert_eq!(images[&idx("d")], ArtinWord::generator(idx("e")));
        assert_eq!(images[&idx("e")], ArtinWord::generator(idx("d")));
        assert_eq!(images[&idx("a")], ArtinWord::generator(idx("a")).conjugated(&x));
        assert_eq!(images[&idx("b")], ArtinWord::generator(idx("b")).conjugated(&x));
    }

    #[test]
    fn induced_map_of_special_phi_on_g6() {
        let g = fixtures::g6();
        let group = iso_group(&g).unwrap();
        let images = induced_map(&group, &special_phi(&group));
        let x = w(&g, &[("c", 1), ("f", 1), ("c", 1)]);
        let idx = |n: &str| g.index_of(n).unwrap();
        for n in ["a", "b", "d", "e"] {
            assert_eq!(images[&idx(n)], ArtinWord::generator(idx(n)).conjugated(&x));
        }
        assert_eq!(images[&idx("c")], ArtinWord::generator(idx("f")));
        assert_eq!(images[&idx("f")], ArtinWord::generator(idx("c")));
    }

    #[test]
    fn word_equality_basics() {
        let g = fixtures::g6();
        let word = w(&g, &[("a", 1), ("b", -1), ("c", 1)]);
        let bounds = SearchBounds::for_words(&g, &word, &word);
        assert_eq!(word_equal_bounded(&g, &word, &word, bounds), WordVerdict::Equal);

        // Distinct generators: refuted by the exponent-sum filter.
        let s = ArtinWord::generator(g.index_of("a").unwrap());
        let t = ArtinWord::generator(g.index_of("b").unwrap());
        assert!(abelian_distinct(&g, &s, &t));
        assert_eq!(
            word_equal_bounded(&g, &s, &t, SearchBounds { max_len: 40, budget: 10_000 }),
            WordVerdict::Unknown
        );
    }

    #[test]
    fn braid_conjugation_is_found() {
        // x_e s x_e^-1 = t for an odd edge, within budget 10^4.
        let g = crate::graph::parse_graph("vertex s\nvertex t\nvertex u\nedge s t 3\nedge t u 3\n")
            .unwrap();
        let s = g.index_of("s").unwrap();
        let t = g.index_of("t").unwrap();
        let x = quasi_center(&g, s, t, 3);
        let lhs = x.concat(&ArtinWord::generator(s)).concat(&x.inverse());
        let rhs = ArtinWord::generator(t);
        let verdict = word_equal_bounded(
            &g,
            &lhs,
            &rhs,
            SearchBounds { max_len: 60, budget: 10_000 },
        );
        assert_eq!(verdict, WordVerdict::Equal);
    }

    #[test]
    fn even_center_conjugation_is_found() {
        let g = fixtures::geven();
        let s = g.index_of("s").unwrap();
        let t = g.index_of("t").unwrap();
        let x = quasi_center(&g, s, t, 4);
        let lhs = ArtinWord::generator(s).conjugated(&x);
        let rhs = ArtinWord::generator(s);
        let bounds = SearchBounds::for_words(&g, &lhs, &rhs);
        assert_eq!(word_equal_bounded(&g, &lhs, &rhs, bounds), WordVerdict::Equal);
    }

    #[test]
    fn relator_images_under_partial_conjugations_stay_equal() {
        // Homomorphism well-definedness at desk scale: images of both sides
        // of every defining relation of the source graph agree in the Artin
        // group of the twisted target graph.
        for g in [fixtures::g6(), fixtures::geven()] {
            let tree = crate::chunk::chunk_tree(&g).unwrap();
            for te in &tree.tree_edges {
                let (s, t) = tree.sep_edges[te.sep];
                let target = crate::twist::apply_twist(&tree, &g, te);
                let pc = ElementaryAuto::partial(&g, (s, t), tree.sep_labels[te.sep], te);
                for ((u, v), m) in g.edges() {
                    let lhs = apply_auto(&pc, &alternating_product(u, v, m));
                    let rhs = apply_auto(&pc, &alternating_product(v, u, m));
                    let bounds = SearchBounds::for_words(&target, &lhs, &rhs);
                    assert_eq!(
                        word_equal_bounded(&target, &lhs, &rhs, bounds),
                        WordVerdict::Equal,
                        "edge {}-{} under e{}",
                        g.name(u),
                        g.name(v),
                        te.index
                    );
                }
            }
        }
    }

    #[test]
    fn inversion_conjugate_of_partial_conjugation() {
        // Applying the global inversion around a partial conjugation equals
        // the partial conjugation by the reversed (inverse) quasi-center.
        let g = fixtures::g6();
        let tree = crate::chunk::chunk_tree(&g).unwrap();
        let te = &tree.tree_edges[tree.outward[0]];
        let (s, t) = tree.sep_edges[te.sep];
        let x = quasi_center(&g, s, t, tree.sep_labels[te.sep]);
        let pc = ElementaryAuto::partial(&g, (s, t), tree.sep_labels[te.sep], te);
        let inv = ElementaryAuto::GlobalInversion;
        let x_rev = ArtinWord::from_letters(x.letters().iter().rev().copied());
        for v in 0..g.vertex_count() {
            let lhs = apply_auto(&inv, &apply_auto(&pc, &apply_auto(&inv, &ArtinWord::generator(v))));
            let expected = if te.v1.contains(&v) {
                ArtinWord::generator(v)
            } else {
                ArtinWord::generator(v).conjugated(&x_rev.inverse())
            };
            assert_eq!(lhs, expected);
        }
    }

    proptest! {
        #[test]
        fn reduction_invariants(raw in proptest::collection::vec((0usize..6, prop_oneof![Just(1i8), Just(-1i8)]), 0..40)) {
            let word = ArtinWord::from_letters(raw.clone());
            // No adjacent cancelling pair survives.
            for win in word.letters().windows(2) {
                prop_assert!(!(win[0].0 == win[1].0 && win[0].1 == -win[1].1));
            }
            // Concatenating with the inverse always cancels completely.
            prop_assert!(word.concat(&word.inverse()).is_empty());
            // Reduction is idempotent.
            prop_assert_eq!(ArtinWord::from_letters(word.letters().iter().copied()), word.clone());
        }

        #[test]
        fn exponent_sums_are_concat_additive(
            raw1 in proptest::collection::vec((0usize..6, prop_oneof![Just(1i8), Just(-1i8)]), 0..20),
            raw2 in proptest::collection::vec((0usize..6, prop_oneof![Just(1i8), Just(-1i8)]), 0..20),
        ) {
            let w1 = ArtinWord::from_letters(raw1);
            let w2 = ArtinWord::from_letters(raw2);
            let sums: Vec<i64> = w1.exponent_sums(6).iter().zip(&w2.exponent_sums(6)).map(|(a, b)| a + b).collect();
            prop_assert_eq!(w1.concat(&w2).exponent_sums(6), sums);
        }
    }
}
