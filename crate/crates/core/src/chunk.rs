//! Chunks, the chunk tree, its center, and the inward/outward edge
//! classification that downstream twist machinery is indexed by.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{separating_edges, validate_clttf, LabeledGraph};

/// A chunk: the vertex support of a maximal indecomposable connected full
/// subgraph. The induced subgraph is implied.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Chunk {
    pub vertices: BTreeSet<usize>,
}

/// A node of the chunk tree: either a chunk or a separating edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NodeRef {
    Chunk(usize),
    SepEdge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Inward,
    Outward,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

/// A chunk-tree edge `(e, C)` with its cached cut data.
///
/// `v1` is the separating-edge side of the cut, `v2` the chunk side; both
/// contain the endpoints of `e`, and `scope = v2 \ e` is the vertex set a
/// twist along this edge rewires (and a partial conjugation moves).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistEdgeRef {
    /// 1-based canonical ordinal; part of the generator-naming contract.
    pub index: usize,
    pub sep: usize,
    pub chunk: usize,
    pub orientation: Orientation,
    pub parity: Parity,
    pub v1: BTreeSet<usize>,
    pub v2: BTreeSet<usize>,
    pub scope: BTreeSet<usize>,
    /// Distance of the farther endpoint (`max` of the two node depths).
    pub depth: usize,
}

/// The bipartite rooted tree of chunks and separating edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChunkTree {
    pub graph: LabeledGraph,
    pub chunks: Vec<Chunk>,
    /// Separating edges as `(s, t)` with `name(s) < name(t)`, sorted.
    pub sep_edges: Vec<(usize, usize)>,
    pub sep_labels: Vec<u32>,
    pub tree_edges: Vec<TwistEdgeRef>,
    pub center: NodeRef,
    pub chunk_depth: Vec<usize>,
    pub sep_depth: Vec<usize>,
    /// Indices into `tree_edges` for the outward subset, ascending.
    pub outward: Vec<usize>,
    pub inward: Vec<usize>,
    pub outward_even: Vec<usize>,
    pub outward_odd: Vec<usize>,
}

/// Compute all chunks of an accepted graph, in canonical order
/// (lexicographic on the sorted vertex-name sequence).
///
/// When there are no separating edges the whole graph is the single chunk.
/// Otherwise each pair (separating edge `e`, component `K` of `V \ e`)
/// determines exactly one chunk: the set of vertices of `K ∪ e` lying on
/// the `e`-side of every other separating edge.
pub fn chunks(g: &LabeledGraph) -> Result<Vec<Chunk>> {
    let report = validate_clttf(g);
    if !report.accepted() {
        return Err(Error::InvalidGraph(report.summary()));
    }
    Ok(chunks_unchecked(g))
}

fn chunks_unchecked(g: &LabeledGraph) -> Vec<Chunk> {
    let seps = separating_edges(g);
    if seps.is_empty() {
        return vec![Chunk {
            vertices: (0..g.vertex_count()).collect(),
        }];
    }

    // Closed side of `e2` containing `e1`: the component of V \ e2 that
    // holds e1's endpoints outside e2, plus e2's endpoints.
    let side_of = |e2: (usize, usize), e1: (usize, usize)| -> BTreeSet<usize> {
        let comps = g.components_without(&[e2.0, e2.1]);
        let probe = if e1.0 != e2.0 && e1.0 != e2.1 {
            e1.0
        } else {
            e1.1
        };
        let mut side: BTreeSet<usize> = comps
            .into_iter()
            .find(|c| c.contains(&probe))
            .expect("probe vertex survives the cut")
            .into_iter()
            .collect();
        side.insert(e2.0);
        side.insert(e2.1);
        side
    };

    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    for &e in &seps {
        for comp in g.components_without(&[e.0, e.1]) {
            let mut cand: BTreeSet<usize> = comp.into_iter().collect();
            cand.insert(e.0);
            cand.insert(e.1);
            for &e2 in &seps {
                if e2 == e {
                    continue;
                }
                let side = side_of(e2, e);
                cand = cand.intersection(&side).copied().collect();
            }
            assert!(cand.len() >= 3, "degenerate chunk candidate");
            assert!(is_connected_induced(g, &cand), "chunk candidate disconnected");
            found.insert(cand);
        }
    }
    let mut out: Vec<Chunk> = found
        .into_iter()
        .map(|vertices| Chunk { vertices })
        .collect();
    out.sort_by_key(|c| chunk_sort_key(g, &c.vertices));

    // Every edge of the graph must lie inside some chunk.
    debug_assert!(g.edges().all(|((u, v), _)| out
        .iter()
        .any(|c| c.vertices.contains(&u) && c.vertices.contains(&v))));
    out
}

fn chunk_sort_key(g: &LabeledGraph, vs: &BTreeSet<usize>) -> Vec<String> {
    let mut names: Vec<String> = vs.iter().map(|&v| g.name(v).to_string()).collect();
    names.sort();
    names
}

fn is_connected_induced(g: &LabeledGraph, vs: &BTreeSet<usize>) -> bool {
    let mut seen = BTreeSet::new();
    let start = match vs.iter().next() {
        Some(&v) => v,
        None => return true,
    };
    let mut stack = vec![start];
    seen.insert(start);
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if vs.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == vs.len()
}

/// Build the chunk tree of an accepted graph: nodes, adjacency, center,
/// depths, and the canonical edge indexing.
pub fn chunk_tree(g: &LabeledGraph) -> Result<ChunkTree> {
    let report = validate_clttf(g);
    if !report.accepted() {
        return Err(Error::InvalidGraph(report.summary()));
    }

    let chunks = chunks_unchecked(g);
    let sep_edges = separating_edges(g);
    let sep_labels: Vec<u32> = sep_edges
        .iter()
        .map(|&(u, v)| g.label(u, v).expect("separating edge is an edge"))
        .collect();

    // Adjacency (e, C) whenever e ⊆ C.
    let mut adj: BTreeMap<NodeRef, Vec<NodeRef>> = BTreeMap::new();
    for ci in 0..chunks.len() {
        adj.entry(NodeRef::Chunk(ci)).or_default();
    }
    for (si, &(s, t)) in sep_edges.iter().enumerate() {
        adj.entry(NodeRef::SepEdge(si)).or_default();
        for (ci, c) in chunks.iter().enumerate() {
            if c.vertices.contains(&s) && c.vertices.contains(&t) {
                adj.get_mut(&NodeRef::SepEdge(si)).unwrap().push(NodeRef::Chunk(ci));
                adj.get_mut(&NodeRef::Chunk(ci)).unwrap().push(NodeRef::SepEdge(si));
            }
        }
    }

    let node_count = chunks.len() + sep_edges.len();
    let edge_pairs: usize = adj.values().map(|v| v.len()).sum::<usize>() / 2;
    // A connected bipartite graph with n nodes and n-1 edges is a tree.
    assert_eq!(edge_pairs + 1, node_count, "chunk graph is not a tree");
    assert!(
        sep_edges
            .iter()
            .enumerate()
            .all(|(si, _)| adj[&NodeRef::SepEdge(si)].len() >= 2),
        "separating edge contained in fewer than two chunks"
    );

    let center = tree_center(&adj);
    assert!(
        sep_edges.is_empty() || matches!(center, NodeRef::Chunk(_)) || matches!(center, NodeRef::SepEdge(_))
    );
    // Leaves are chunks, so the diameter is even and the center unique; a
    // separating-edge leaf would be an upstream bug.
    for (si, _) in sep_edges.iter().enumerate() {
        assert!(adj[&NodeRef::SepEdge(si)].len() >= 2);
    }

    // Depths by BFS from the center.
    let mut chunk_depth = vec![usize::MAX; chunks.len()];
    let mut sep_depth = vec![usize::MAX; sep_edges.len()];
    let set_depth = |n: NodeRef, d: usize, cd: &mut Vec<usize>, sd: &mut Vec<usize>| match n {
        NodeRef::Chunk(i) => cd[i] = d,
        NodeRef::SepEdge(i) => sd[i] = d,
    };
    let get_depth = |n: NodeRef, cd: &[usize], sd: &[usize]| match n {
        NodeRef::Chunk(i) => cd[i],
        NodeRef::SepEdge(i) => sd[i],
    };

    // Canonical ε indexing: BFS from the center with children ordered by the
    // canonical key of the child node. Tree edges are numbered in discovery
    // order; this ordering is part of the generator-naming contract.
    let child_key = |n: NodeRef| -> Vec<String> {
        match n {
            NodeRef::Chunk(i) => chunk_sort_key(g, &chunks[i].vertices),
            NodeRef::SepEdge(i) => {
                let (s, t) = sep_edges[i];
                vec![g.name(s).to_string(), g.name(t).to_string()]
            }
        }
    };

    set_depth(center, 0, &mut chunk_depth, &mut sep_depth);
    let mut queue = std::collections::VecDeque::from([center]);
    let mut discovered: Vec<(NodeRef, NodeRef)> = Vec::new(); // (parent, child)
    let mut visited: BTreeSet<NodeRef> = BTreeSet::from([center]);
    while let Some(n) = queue.pop_front() {
        let mut kids: Vec<NodeRef> = adj[&n]
            .iter()
            .copied()
            .filter(|k| !visited.contains(k))
            .collect();
        kids.sort_by_key(|&k| child_key(k));
        for k in kids {
            visited.insert(k);
            let d = get_depth(n, &chunk_depth, &sep_depth) + 1;
            set_depth(k, d, &mut chunk_depth, &mut sep_depth);
            discovered.push((n, k));
            queue.push_back(k);
        }
    }
    assert_eq!(visited.len(), node_count, "chunk tree disconnected");

    let mut tree_edges = Vec::new();
    for (idx, &(parent, child)) in discovered.iter().enumerate() {
        let (sep, chunk, orientation) = match (parent, child) {
            (NodeRef::SepEdge(s), NodeRef::Chunk(c)) => (s, c, Orientation::Outward),
            (NodeRef::Chunk(c), NodeRef::SepEdge(s)) => (s, c, Orientation::Inward),
            _ => unreachable!("chunk graph is bipartite"),
        };
        let (s, t) = sep_edges[sep];
        let parity = if sep_labels[sep] % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        // Cut the tree edge; v2 collects vertices of chunks on the chunk
        // side, v1 the rest. Walk the tree from the chunk node without
        // crossing back through the separating-edge node.
        let v2 = cut_side(&adj, &chunks, NodeRef::Chunk(chunk), NodeRef::SepEdge(sep));
        let mut v1: BTreeSet<usize> = (0..g.vertex_count())
            .filter(|v| !v2.contains(v))
            .collect();
        v1.insert(s);
        v1.insert(t);
        let scope: BTreeSet<usize> =
            v2.iter().copied().filter(|&v| v != s && v != t).collect();
        let depth = get_depth(parent, &chunk_depth, &sep_depth)
            .max(get_depth(child, &chunk_depth, &sep_depth));
        tree_edges.push(TwistEdgeRef {
            index: idx + 1,
            sep,
            chunk,
            orientation,
            parity,
            v1,
            v2,
            scope,
            depth,
        });
    }

    // At most one inward edge is adjacent to any separating-edge node.
    for si in 0..sep_edges.len() {
        let inward = tree_edges
            .iter()
            .filter(|te| te.sep == si && te.orientation == Orientation::Inward)
            .count();
        assert!(inward <= 1);
    }

    let pick = |pred: &dyn Fn(&TwistEdgeRef) -> bool| -> Vec<usize> {
        tree_edges
            .iter()
            .enumerate()
            .filter(|(_, te)| pred(te))
            .map(|(i, _)| i)
            .collect()
    };
    let outward = pick(&|te| te.orientation == Orientation::Outward);
    let inward = pick(&|te| te.orientation == Orientation::Inward);
    let outward_even = pick(&|te| te.orientation == Orientation::Outward && te.parity == Parity::Even);
    let outward_odd = pick(&|te| te.orientation == Orientation::Outward && te.parity == Parity::Odd);

    // Scopes of outward edges are pairwise disjoint or nested.
    for &i in &outward {
        for &j in &outward {
            if i < j {
                let a = &tree_edges[i].scope;
                let b = &tree_edges[j].scope;
                let inter = a.intersection(b).count();
                assert!(
                    inter == 0 || inter == a.len().min(b.len()),
                    "outward scopes neither disjoint nor nested"
                );
            }
        }
    }

    Ok(ChunkTree {
        graph: g.clone(),
        chunks,
        sep_edges,
        sep_labels,
        tree_edges,
        center,
        chunk_depth,
        sep_depth,
        outward,
        inward,
        outward_even,
        outward_odd,
    })
}

/// Vertices of the union of chunks on the `from` side when the tree edge
/// `{from, via}` is cut.
fn cut_side(
    adj: &BTreeMap<NodeRef, Vec<NodeRef>>,
    chunks: &[Chunk],
    from: NodeRef,
    via: NodeRef,
) -> BTreeSet<usize> {
    let mut verts = BTreeSet::new();
    let mut stack = vec![from];
    let mut seen = BTreeSet::from([from, via]);
    while let Some(n) = stack.pop() {
        if let NodeRef::Chunk(c) = n {
            verts.extend(chunks[c].vertices.iter().copied());
        }
        for &k in &adj[&n] {
            if seen.insert(k) {
                stack.push(k);
            }
        }
    }
    verts
}

/// Iterative leaf stripping; exactly one node must remain.
fn tree_center(adj: &BTreeMap<NodeRef, Vec<NodeRef>>) -> NodeRef {
    let mut degree: BTreeMap<NodeRef, usize> =
        adj.iter().map(|(&n, ns)| (n, ns.len())).collect();
    let mut alive: BTreeSet<NodeRef> = adj.keys().copied().collect();
    while alive.len() > 1 {
        let leaves: Vec<NodeRef> = alive
            .iter()
            .copied()
            .filter(|n| degree[n] <= 1)
            .collect();
        assert!(
            leaves.len() < alive.len(),
            "leaf stripping stalled; not a tree"
        );
        for leaf in leaves {
            alive.remove(&leaf);
            for k in &adj[&leaf] {
                if alive.contains(k) {
                    *degree.get_mut(k).unwrap() -= 1;
                }
            }
        }
    }
    let center = *alive.iter().next().expect("nonempty tree");
    // All leaves are chunks, so the diameter is even and one node survives;
    // reaching a 2-node residue would have tripped the stall assertion.
    center
}

impl ChunkTree {
    pub fn node_count(&self) -> usize {
        self.chunks.len() + self.sep_edges.len()
    }

    pub fn center(&self) -> NodeRef {
        self.center
    }

    pub fn edge(&self, idx0: usize) -> &TwistEdgeRef {
        &self.tree_edges[idx0]
    }

    /// Locate a tree edge by its separating-edge vertex pair and chunk
    /// vertex set; both are class invariants.
    pub fn find_edge(&self, sep: (usize, usize), chunk: &BTreeSet<usize>) -> Option<usize> {
        let want = if sep.0 < sep.1 { sep } else { (sep.1, sep.0) };
        let canon: Vec<(usize, usize)> = self
            .sep_edges
            .iter()
            .map(|&(s, t)| if s < t { (s, t) } else { (t, s) })
            .collect();
        self.tree_edges.iter().position(|te| {
            canon[te.sep] == want && &self.chunks[te.chunk].vertices == chunk
        })
    }

    pub fn chunk_name(&self, ci: usize) -> String {
        let names: Vec<&str> = self.chunks[ci]
            .vertices
            .iter()
            .map(|&v| self.graph.name(v))
            .collect();
        format!("{{{}}}", names.join(","))
    }

    pub fn sep_name(&self, si: usize) -> String {
        let (s, t) = self.sep_edges[si];
        format!("{{{},{}}}", self.graph.name(s), self.graph.name(t))
    }

    pub fn node_name(&self, n: NodeRef) -> String {
        match n {
            NodeRef::Chunk(c) => self.chunk_name(c),
            NodeRef::SepEdge(s) => self.sep_name(s),
        }
    }

    pub fn edge_name(&self, idx0: usize) -> String {
        let te = &self.tree_edges[idx0];
        format!("e{}=({},{})", te.index, self.sep_name(te.sep), self.chunk_name(te.chunk))
    }

    /// DOT rendering: chunk nodes boxed, separating-edge nodes oval, arrows
    /// oriented away from the center, center marked.
    pub fn export_dot(&self) -> String {
        let mut s = String::from("digraph chunk_tree {\n");
        for (ci, _) in self.chunks.iter().enumerate() {
            let extra = if self.center == NodeRef::Chunk(ci) {
                ", peripheries=2, label=\"* "
            } else {
                ", label=\""
            };
            s.push_str(&format!(
                "  c{ci} [shape=box{extra}{}\"];\n",
                self.chunk_name(ci).replace('{', "").replace('}', "")
            ));
        }
        for (si, _) in self.sep_edges.iter().enumerate() {
            let extra = if self.center == NodeRef::SepEdge(si) {
                ", peripheries=2, label=\"* "
            } else {
                ", label=\""
            };
            s.push_str(&format!(
                "  s{si} [shape=oval{extra}{} ({})\"];\n",
                self.sep_name(si).replace('{', "").replace('}', ""),
                self.sep_labels[si]
            ));
        }
        for te in &self.tree_edges {
            let (from, to) = match te.orientation {
                Orientation::Outward => (format!("s{}", te.sep), format!("c{}", te.chunk)),
                Orientation::Inward => (format!("c{}", te.chunk), format!("s{}", te.sep)),
            };
            s.push_str(&format!("  {from} -> {to} [label=\"e{}\"];\n", te.index));
        }
        s.push_str("}\n");
        s
    }

    /// JSON dump: nodes, adjacency, center, orientation, parities.
    pub fn to_json(&self) -> Value {
        let g = &self.graph;
        let chunk_json: Vec<Value> = self
            .chunks
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                json!({
                    "id": format!("c{ci}"),
                    "kind": "chunk",
                    "vertices": c.vertices.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
                    "depth": self.chunk_depth[ci],
                })
            })
            .collect();
        let sep_json: Vec<Value> = self
            .sep_edges
            .iter()
            .enumerate()
            .map(|(si, &(s, t))| {
                json!({
                    "id": format!("s{si}"),
                    "kind": "sep_edge",
                    "vertices": [g.name(s), g.name(t)],
                    "label": self.sep_labels[si],
                    "depth": self.sep_depth[si],
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .tree_edges
            .iter()
            .map(|te| {
                json!({
                    "index": te.index,
                    "sep": format!("s{}", te.sep),
                    "chunk": format!("c{}", te.chunk),
                    "orientation": match te.orientation {
                        Orientation::Outward => "outward",
                        Orientation::Inward => "inward",
                    },
                    "parity": match te.parity {
                        Parity::Even => "even",
                        Parity::Odd => "odd",
                    },
                })
            })
            .collect();
        json!({
            "nodes": chunk_json.into_iter().chain(sep_json).collect::<Vec<_>>(),
            "tree_edges": edges,
            "center": match self.center {
                NodeRef::Chunk(c) => format!("c{c}"),
                NodeRef::SepEdge(s) => format!("s{s}"),
            },
        })
    }
}
