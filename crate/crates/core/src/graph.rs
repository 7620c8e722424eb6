//! Labeled defining graphs: parsing, validation, separating edges and
//! vertices, decompositions, and label-preserving isomorphism search.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A simple graph on named vertices with integer edge labels `>= 2`.
///
/// Vertices are addressed by index into `names` (file order). All canonical
/// orderings used for output are lexicographic on the vertex *names*, not on
/// the indices, so file order never leaks into derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    /// Keyed by `(min, max)` vertex index.
    edges: BTreeMap<(usize, usize), u32>,
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl LabeledGraph {
    pub fn new(names: Vec<String>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        LabeledGraph {
            names,
            index,
            edges: BTreeMap::new(),
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, label: u32) {
        assert!(u != v, "loop edge");
        assert!(label >= 2, "label must be >= 2");
        assert!(u < self.names.len() && v < self.names.len());
        let prev = self.edges.insert(edge_key(u, v), label);
        assert!(prev.is_none(), "duplicate edge");
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Edges as `((min, max), label)` in key order.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains_key(&edge_key(u, v))
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u32> {
        self.edges.get(&edge_key(u, v)).copied()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (&(a, b), _) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.keys().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Sorted multiset of labels on edges incident to `v`.
    pub fn incident_labels(&self, v: usize) -> Vec<u32> {
        let mut ls: Vec<u32> = self
            .edges
            .iter()
            .filter(|(&(a, b), _)| a == v || b == v)
            .map(|(_, &m)| m)
            .collect();
        ls.sort_unstable();
        ls
    }

    /// Connected components of the subgraph induced on `V \ removed`.
    pub fn components_without(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut banned = vec![false; n];
        for &r in removed {
            banned[r] = true;
        }
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if banned[start] || seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbors(v) {
                    if !banned[w] && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort();
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.components_without(&[]).len() == 1
    }

    /// Serialization in the input file format.
    pub fn to_file_string(&self) -> String {
        let mut s = String::new();
        for n in &self.names {
            s.push_str("vertex ");
            s.push_str(n);
            s.push('\n');
        }
        for (&(u, v), &m) in &self.edges {
            s.push_str(&format!("edge {} {} {}\n", self.names[u], self.names[v], m));
        }
        s
    }

    /// Sorted edge list rendered with names, e.g. `a-b(4)`. Handy in tests.
    pub fn edge_summary(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .edges
            .iter()
            .map(|(&(u, v), &m)| {
                let (a, b) = if self.names[u] <= self.names[v] {
                    (&self.names[u], &self.names[v])
                } else {
                    (&self.names[v], &self.names[u])
                };
                format!("{a}-{b}({m})")
            })
            .collect();
        out.sort();
        out
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.edge_summary().join(" "))
    }
}

/// Parse the `vertex <name>` / `edge <a> <b> <label>` file format.
///
/// `#` starts a comment; blank lines are ignored. Vertex order is file order.
pub fn parse_graph(text: &str) -> Result<LabeledGraph> {
    let mut names: Vec<String> = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut edges: Vec<(usize, usize, u32, usize)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let stripped = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let toks: Vec<&str> = stripped.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match toks[0] {
            "vertex" => {
                if toks.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `vertex <name>`".into(),
                    });
                }
                let name = toks[1].to_string();
                if index.contains_key(&name) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("duplicate vertex `{name}`"),
                    });
                }
                index.insert(name.clone(), names.len());
                names.push(name);
            }
            "edge" => {
                if toks.len() != 4 {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `edge <name> <name> <label>`".into(),
                    });
                }
                let u = *index.get(toks[1]).ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("unknown endpoint `{}`", toks[1]),
                })?;
                let v = *index.get(toks[2]).ok_or_else(|| Error::Parse {
                    line,
                    msg: format!("unknown endpoint `{}`", toks[2]),
                })?;
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("loop edge at `{}`", toks[1]),
                    });
                }
                let label: u32 = toks[3].parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("bad label `{}`", toks[3]),
                })?;
                if label < 2 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("label {label} < 2"),
                    });
                }
                edges.push((u, v, label, line));
            }
            other => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unknown declaration `{other}`"),
                });
            }
        }
    }
    let mut g = LabeledGraph::new(names);
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (u, v, m, line) in edges {
        if seen.insert(edge_key(u, v), line).is_some() {
            return Err(Error::Parse {
                line,
                msg: format!("duplicate edge {} {}", g.names[u], g.names[v]),
            });
        }
        g.add_edge(u, v, m);
    }
    Ok(g)
}

/// Outcome of CLTTF / edge-separated validation. Failure is data, not error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub connected: bool,
    pub large_type: bool,
    pub triangle_free: bool,
    pub edge_separated: bool,
    pub vertex_count_ok: bool,
    /// Two vertices in distinct components, if disconnected.
    pub witness_disconnected: Option<(String, String)>,
    /// An edge with label < 3, if not large type.
    pub witness_small_label: Option<(String, String, u32)>,
    /// A triangle's vertex triple, if not triangle-free.
    pub witness_triangle: Option<[String; 3]>,
    /// A separating vertex, if not edge-separated.
    pub witness_separating_vertex: Option<String>,
}

impl ValidationReport {
    pub fn accepted(&self) -> bool {
        self.connected
            && self.large_type
            && self.triangle_free
            && self.edge_separated
            && self.vertex_count_ok
    }

    pub fn summary(&self) -> String {
        if self.accepted() {
            return "accepted".into();
        }
        let mut parts = Vec::new();
        if !self.vertex_count_ok {
            parts.push("fewer than 3 vertices".to_string());
        }
        if let Some((a, b)) = &self.witness_disconnected {
            parts.push(format!("disconnected ({a} and {b} in distinct components)"));
        }
        if let Some((a, b, m)) = &self.witness_small_label {
            parts.push(format!("not large type (edge {a}-{b} has label {m})"));
        }
        if let Some([a, b, c]) = &self.witness_triangle {
            parts.push(format!("triangle {{{a}, {b}, {c}}}"));
        }
        if let Some(v) = &self.witness_separating_vertex {
            parts.push(format!("separating vertex {v}"));
        }
        parts.join("; ")
    }
}

/// Check each CLTTF condition independently and report witnesses.
pub fn validate_clttf(g: &LabeledGraph) -> ValidationReport {
    let n = g.vertex_count();
    let vertex_count_ok = n >= 3;

    let comps = g.components_without(&[]);
    let connected = comps.len() <= 1 && n > 0;
    let witness_disconnected = if comps.len() > 1 {
        Some((
            g.name(comps[0][0]).to_string(),
            g.name(comps[1][0]).to_string(),
        ))
    } else {
        None
    };

    let mut witness_small_label = None;
    for ((u, v), m) in g.edges() {
        if m < 3 {
            witness_small_label = Some((g.name(u).to_string(), g.name(v).to_string(), m));
            break;
        }
    }

    let mut witness_triangle = None;
    'outer: for ((u, v), _) in g.edges() {
        for w in 0..n {
            if w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w) {
                let mut tri = [
                    g.name(u).to_string(),
                    g.name(v).to_string(),
                    g.name(w).to_string(),
                ];
                tri.sort();
                witness_triangle = Some(tri);
                break 'outer;
            }
        }
    }

    let seps = if connected {
        separating_vertices(g)
    } else {
        Vec::new()
    };
    let witness_separating_vertex = seps.first().map(|&v| g.name(v).to_string());

    ValidationReport {
        connected,
        large_type: witness_small_label.is_none(),
        triangle_free: witness_triangle.is_none(),
        edge_separated: witness_separating_vertex.is_none(),
        vertex_count_ok,
        witness_disconnected,
        witness_small_label,
        witness_triangle,
        witness_separating_vertex,
    }
}

/// Vertices whose removal disconnects the graph, in canonical name order.
pub fn separating_vertices(g: &LabeledGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut out: Vec<usize> = (0..n)
        .filter(|&v| n > 1 && g.components_without(&[v]).len() > 1)
        .collect();
    out.sort_by(|&a, &b| g.name(a).cmp(g.name(b)));
    out
}

/// Separating edges `{s,t}` (removal of both endpoints disconnects), sorted
/// by `(min endpoint name, max endpoint name)`.
pub fn separating_edges(g: &LabeledGraph) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = g
        .edges()
        .filter(|&((u, v), _)| g.components_without(&[u, v]).len() > 1)
        .map(|((u, v), _)| {
            if g.name(u) <= g.name(v) {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    out.sort_by(|a, b| {
        (g.name(a.0), g.name(a.1)).cmp(&(g.name(b.0), g.name(b.1)))
    });
    out
}

/// A decomposition `(gamma1, {s,t}, gamma2)` of the vertex set along a
/// separating edge: both sides are closed (include `{s,t}`) and no edge
/// joins `gamma1 \ {s,t}` to `gamma2 \ {s,t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub gamma1: Vec<usize>,
    pub edge: (usize, usize),
    pub gamma2: Vec<usize>,
}

/// All decompositions of `g` along the separating edge `e`: one per
/// unordered bipartition of the components of `V \ e` into two nonempty
/// groups, in a deterministic order.
pub fn decompositions_along(g: &LabeledGraph, e: (usize, usize)) -> Result<Vec<Decomposition>> {
    let comps = g.components_without(&[e.0, e.1]);
    let k = comps.len();
    if k < 2 {
        return Err(Error::NotSeparating(
            g.name(e.0).to_string(),
            g.name(e.1).to_string(),
        ));
    }
    let mut out = Vec::new();
    // Bipartitions indexed by the subset containing component 0.
    for mask in 0u32..(1 << (k - 1)) {
        let mask = mask << 1 | 1;
        if mask == (1 << k) - 1 {
            continue;
        }
        let mut side1 = vec![e.0, e.1];
        let mut side2 = vec![e.0, e.1];
        for (i, comp) in comps.iter().enumerate() {
            if mask & (1 << i) != 0 {
                side1.extend_from_slice(comp);
            } else {
                side2.extend_from_slice(comp);
            }
        }
        side1.sort_unstable();
        side2.sort_unstable();
        out.push(Decomposition {
            gamma1: side1,
            edge: e,
            gamma2: side2,
        });
    }
    Ok(out)
}

/// A permutation of the vertex indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self . other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// Build from a list of transposition pairs given by vertex name.
    pub fn from_swaps(g: &LabeledGraph, swaps: &[(&str, &str)]) -> Perm {
        let mut p = Perm::identity(g.vertex_count());
        for &(a, b) in swaps {
            let ia = g.index_of(a).expect("unknown vertex");
            let ib = g.index_of(b).expect("unknown vertex");
            p.0.swap(ia, ib);
        }
        p
    }

    /// Cycle notation over vertex names, `id` for the identity.
    pub fn cycles_string(&self, g: &LabeledGraph) -> String {
        let mut seen = vec![false; self.len()];
        let mut s = String::new();
        for start in 0..self.len() {
            if seen[start] || self.0[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut v = self.0[start];
            while v != start {
                seen[v] = true;
                cyc.push(v);
                v = self.0[v];
            }
            s.push('(');
            s.push_str(
                &cyc.iter()
                    .map(|&v| g.name(v))
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("id");
        }
        s
    }
}

/// Transport `g` along `perm`: `{perm(s), perm(t)}` is an edge of the result
/// iff `{s,t}` is an edge of `g`, labels carried. The vertex list is shared.
pub fn apply_permutation(perm: &Perm, g: &LabeledGraph) -> LabeledGraph {
    assert_eq!(perm.len(), g.vertex_count());
    let mut out = LabeledGraph::new(g.names.clone());
    for ((u, v), m) in g.edges() {
        out.add_edge(perm.apply(u), perm.apply(v), m);
    }
    out
}

/// All label-preserving isomorphisms `g -> h` as permutations of the shared
/// vertex set, sorted lexicographically. Exhaustive backtracking with
/// (degree, incident-label-multiset) pruning.
pub fn find_isomorphisms(g: &LabeledGraph, h: &LabeledGraph) -> Result<Vec<Perm>> {
    let n = g.vertex_count();
    if h.vertex_count() != n || g.names != h.names {
        // Same vertex *set* is enough; require identical name lists since a
        // class shares one list. Differing order is treated as a mismatch.
        let mut gs = g.names.clone();
        let mut hs = h.names.clone();
        gs.sort();
        hs.sort();
        if gs != hs {
            return Err(Error::VertexSetMismatch);
        }
    }
    if g.edge_count() != h.edge_count() {
        return Ok(Vec::new());
    }
    let g_inv: Vec<(usize, Vec<u32>)> = (0..n).map(|v| (g.degree(v), g.incident_labels(v))).collect();
    let h_inv: Vec<(usize, Vec<u32>)> = (0..n).map(|v| (h.degree(v), h.incident_labels(v))).collect();
    {
        let mut a = g_inv.clone();
        let mut b = h_inv.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(Vec::new());
        }
    }

    // Assign the most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        (std::cmp::Reverse(g_inv[a].0), &g_inv[a].1, a)
            .cmp(&(std::cmp::Reverse(g_inv[b].0), &g_inv[b].1, b))
    });

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut found = Vec::new();

    fn backtrack(
        g: &LabeledGraph,
        h: &LabeledGraph,
        g_inv: &[(usize, Vec<u32>)],
        h_inv: &[(usize, Vec<u32>)],
        order: &[usize],
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Perm>,
    ) {
        if pos == order.len() {
            found.push(Perm(image.clone()));
            return;
        }
        let v = order[pos];
        for w in 0..h.vertex_count() {
            if used[w] || g_inv[v] != h_inv[w] {
                continue;
            }
            // Consistency with all previously assigned vertices.
            let ok = order[..pos].iter().all(|&u| {
                let lab_g = g.label(v, u);
                let lab_h = h.label(w, image[u]);
                lab_g == lab_h
            });
            if !ok {
                continue;
            }
            image[v] = w;
            used[w] = true;
            backtrack(g, h, g_inv, h_inv, order, pos + 1, image, used, found);
            image[v] = usize::MAX;
            used[w] = false;
        }
    }

    backtrack(
        g, h, &g_inv, &h_inv, &order, 0, &mut image, &mut used, &mut found,
    );
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_minimal() {
        let g = parse_graph("vertex s\nvertex t\nedge s t 3\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.label(0, 1), Some(3));
    }

    #[test]
    fn parse_g13_fixture() {
        let g = fixtures::g13();
        assert_eq!(g.vertex_count(), 13);
        assert_eq!(g.edge_count(), 17);
        assert!(g.edges().all(|(_, m)| m == 3));
    }

    #[test]
    fn parse_rejects_label_below_two() {
        let err = parse_graph("vertex s\nvertex t\nedge s t 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn parse_rejects_duplicates_and_unknowns() {
        assert!(parse_graph("vertex s\nvertex s\n").is_err());
        assert!(parse_graph("vertex s\nvertex t\nedge s t 3\nedge t s 4\n").is_err());
        assert!(parse_graph("vertex s\nedge s t 3\n").is_err());
        assert!(parse_graph("vertex s\nedge s s 3\n").is_err());
    }

    #[test]
    fn validate_fixtures_accepted() {
        for g in [
            fixtures::g6(),
            fixtures::g8(),
            fixtures::g13(),
            fixtures::geven(),
        ] {
            let r = validate_clttf(&g);
            assert!(r.accepted(), "{:?}", r);
        }
    }

    #[test]
    fn validate_triangle() {
        let g = fixtures::triangle();
        let r = validate_clttf(&g);
        assert!(!r.triangle_free);
        assert_eq!(
            r.witness_triangle,
            Some(["a".into(), "b".into(), "c".into()])
        );
    }

    #[test]
    fn validate_two_squares_glued_at_vertex() {
        // Two 4-cycles sharing a single vertex v: v is separating.
        let text = "vertex v\nvertex a\nvertex b\nvertex c\nvertex d\nvertex e\nvertex f\n\
                    edge v a 3\nedge a b 3\nedge b c 3\nedge c v 3\n\
                    edge v d 3\nedge d e 3\nedge e f 3\nedge f v 3\n";
        let g = parse_graph(text).unwrap();
        let r = validate_clttf(&g);
        assert!(!r.edge_separated);
        assert_eq!(r.witness_separating_vertex.as_deref(), Some("v"));
        assert_eq!(separating_vertices(&g), vec![g.index_of("v").unwrap()]);
    }

    #[test]
    fn separating_edges_of_fixtures() {
        let g13 = fixtures::g13();
        let seps: Vec<(String, String)> = separating_edges(&g13)
            .into_iter()
            .map(|(u, v)| (g13.name(u).into(), g13.name(v).into()))
            .collect();
        assert_eq!(
            seps,
            vec![
                ("a".to_string(), "d".to_string()),
                ("a".to_string(), "i".to_string()),
                ("e".to_string(), "i".to_string())
            ]
        );

        let g6 = fixtures::g6();
        let seps6 = separating_edges(&g6);
        assert_eq!(seps6.len(), 1);
        assert_eq!(g6.name(seps6[0].0), "c");
        assert_eq!(g6.name(seps6[0].1), "f");
    }

    #[test]
    fn four_cycle_has_no_separating_edge_or_vertex() {
        let g = parse_graph(
            "vertex a\nvertex b\nvertex c\nvertex d\n\
             edge a b 3\nedge b c 3\nedge c d 3\nedge d a 3\n",
        )
        .unwrap();
        assert!(separating_edges(&g).is_empty());
        assert!(separating_vertices(&g).is_empty());
    }

    #[test]
    fn decompositions_counts() {
        let g6 = fixtures::g6();
        let e = separating_edges(&g6)[0];
        let ds = decompositions_along(&g6, e).unwrap();
        assert_eq!(ds.len(), 1);
        let names = |vs: &[usize]| -> Vec<&str> { vs.iter().map(|&v| g6.name(v)).collect() };
        let mut sides = [names(&ds[0].gamma1), names(&ds[0].gamma2)];
        sides.sort();
        assert_eq!(sides[0], vec!["a", "b", "c", "f"]);
        assert_eq!(sides[1], vec!["c", "d", "e", "f"]);

        let g13 = fixtures::g13();
        let a = g13.index_of("a").unwrap();
        let i = g13.index_of("i").unwrap();
        let ds = decompositions_along(&g13, (a, i)).unwrap();
        assert_eq!(ds.len(), 3);

        // Non-separating edge is a precondition error.
        let b = g13.index_of("b").unwrap();
        assert!(decompositions_along(&g13, (a, b)).is_err());
    }

    #[test]
    fn isomorphisms_of_g13_and_g6() {
        let g13 = fixtures::g13();
        let autos = find_isomorphisms(&g13, &g13).unwrap();
        assert_eq!(autos.len(), 2);
        assert!(autos[0].is_identity() || autos[1].is_identity());
        let alpha0 = Perm::from_swaps(&g13, &[("j", "l"), ("k", "m")]);
        assert!(autos.contains(&alpha0));

        let g6 = fixtures::g6();
        let autos6 = find_isomorphisms(&g6, &g6).unwrap();
        assert_eq!(autos6.len(), 1);
        assert!(autos6[0].is_identity());
    }

    #[test]
    fn isomorphisms_respect_labels() {
        let g6 = fixtures::g6();
        let mut h = g6.clone();
        let a = h.index_of("a").unwrap();
        let b = h.index_of("b").unwrap();
        h.edges.insert((a.min(b), a.max(b)), 5);
        assert!(find_isomorphisms(&g6, &h).unwrap().is_empty());
    }

    #[test]
    fn apply_permutation_identity_and_auto() {
        let g13 = fixtures::g13();
        assert_eq!(
            apply_permutation(&Perm::identity(13), &g13),
            g13
        );
        let alpha0 = Perm::from_swaps(&g13, &[("j", "l"), ("k", "m")]);
        assert_eq!(apply_permutation(&alpha0, &g13), g13);
    }

    #[test]
    fn apply_permutation_swap_on_g6() {
        let g6 = fixtures::g6();
        let swap = Perm::from_swaps(&g6, &[("d", "e")]);
        let h = apply_permutation(&swap, &g6);
        assert_eq!(
            h.edge_summary(),
            vec!["a-b(4)", "a-f(4)", "b-c(6)", "c-e(6)", "c-f(3)", "d-e(4)", "d-f(6)"]
        );
    }

    #[test]
    fn permutation_composition_acts_contravariantly() {
        let g6 = fixtures::g6();
        let p = Perm::from_swaps(&g6, &[("a", "b")]);
        let q = Perm::from_swaps(&g6, &[("b", "c"), ("d", "e")]);
        let lhs = apply_permutation(&p.compose(&q), &g6);
        let rhs = apply_permutation(&p, &apply_permutation(&q, &g6));
        assert_eq!(lhs, rhs);
    }
}
