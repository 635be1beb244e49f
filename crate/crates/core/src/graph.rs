//! Graph representation, failure sets, BFS utilities, and the
//! vertex-to-edge failure reduction shared by all oracles.
//!
//! Edges carry dense integer identifiers (`EdgeId`) that are stable for the
//! lifetime of a graph. Failure sets, stored paths, and every serialized
//! oracle speak in terms of these identifiers, so a failure list written for
//! a graph file is meaningful to any oracle built from that file.

use std::collections::HashSet;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense edge identifier, `0..m`. For undirected graphs the two directions
/// of an edge share one id, so failing it kills both directions atomically.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Immutable graph with stable edge ids.
///
/// Undirected graphs are stored with their canonical (as-parsed) orientation
/// in `edges` plus a symmetric adjacency view; each undirected edge has a
/// single [`EdgeId`].
#[derive(Debug)]
pub struct Graph {
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<(usize, EdgeId)>>,
    /// Only populated for directed graphs; undirected graphs reuse `out_adj`.
    in_adj: Vec<Vec<(usize, EdgeId)>>,
    /// Counts adjacency-list reads, used to check that oracle queries do not
    /// touch the graph they were built from.
    adj_probe: AtomicU64,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            directed: self.directed,
            edges: self.edges.clone(),
            out_adj: self.out_adj.clone(),
            in_adj: self.in_adj.clone(),
            adj_probe: AtomicU64::new(0),
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        GraphSer {
            n: self.n,
            directed: self.directed,
            edges: self.edges.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let ser = GraphSer::deserialize(de)?;
        Graph::new(ser.n, ser.directed, ser.edges).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct GraphSer {
    n: usize,
    directed: bool,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
    /// (for undirected graphs a duplicate in either orientation), and
    /// out-of-range endpoints.
    pub fn new(n: usize, directed: bool, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            let key = if directed || u < v { (u, v) } else { (v, u) };
            if !seen.insert(key) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({u}, {v})")));
            }
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = if directed { vec![Vec::new(); n] } else { Vec::new() };
        for (i, &(u, v)) in edges.iter().enumerate() {
            let e = EdgeId(i);
            out_adj[u].push((v, e));
            if directed {
                in_adj[v].push((u, e));
            } else {
                out_adj[v].push((u, e));
            }
        }
        Ok(Graph {
            n,
            directed,
            edges,
            out_adj,
            in_adj,
            adj_probe: AtomicU64::new(0),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Endpoints in canonical orientation.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Out-neighbors of `v` as `(head, edge)` pairs in increasing edge order.
    /// For undirected graphs this is the full symmetric neighborhood.
    pub fn out_edges(&self, v: usize) -> &[(usize, EdgeId)] {
        self.adj_probe.fetch_add(1, Ordering::Relaxed);
        &self.out_adj[v]
    }

    /// In-neighbors of `v`; equals [`Graph::out_edges`] for undirected graphs.
    pub fn in_edges(&self, v: usize) -> &[(usize, EdgeId)] {
        self.adj_probe.fetch_add(1, Ordering::Relaxed);
        if self.directed {
            &self.in_adj[v]
        } else {
            &self.out_adj[v]
        }
    }

    /// How many adjacency lists have been read from this graph so far.
    /// Oracle-independence tests snapshot this around query batches.
    pub fn adjacency_reads(&self) -> u64 {
        self.adj_probe.load(Ordering::Relaxed)
    }

    /// Non-materializing view of this graph with the edges of `fs` removed.
    pub fn minus<'a>(&'a self, fs: &'a FailureSet) -> SubgraphView<'a> {
        self.without(fs.as_set())
    }

    /// Like [`Graph::minus`] but over a plain edge set.
    pub fn without<'a>(&'a self, removed: &'a HashSet<EdgeId>) -> SubgraphView<'a> {
        SubgraphView { g: self, removed }
    }

    /// Whether ignoring directions yields a simple graph. Undirected graphs
    /// always qualify; a directed graph fails iff it contains both
    /// orientations of some pair.
    pub fn underlying_is_simple(&self) -> bool {
        if !self.directed {
            return true;
        }
        let mut seen = HashSet::with_capacity(self.edges.len());
        self.edges.iter().all(|&(u, v)| {
            let key = if u < v { (u, v) } else { (v, u) };
            seen.insert(key)
        })
    }

    /// The directed arcs of the graph: one per edge for directed graphs,
    /// both orientations (with the shared id) for undirected ones.
    pub fn arcs(&self) -> Vec<(usize, usize, EdgeId)> {
        let mut arcs = Vec::with_capacity(if self.directed {
            self.edges.len()
        } else {
            2 * self.edges.len()
        });
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            arcs.push((u, v, EdgeId(i)));
            if !self.directed {
                arcs.push((v, u, EdgeId(i)));
            }
        }
        arcs
    }
}

/// Read-only adjacency interface shared by [`Graph`] and [`SubgraphView`],
/// so path solvers and BFS run unchanged on a graph with failures applied.
pub trait EdgeView {
    fn vertex_count(&self) -> usize;
    /// Upper bound (exclusive) on edge ids appearing in the view.
    fn edge_bound(&self) -> usize;
    fn is_directed(&self) -> bool;
    fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_;
    fn in_edges(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_;
    fn contains_edge(&self, e: EdgeId) -> bool;
    fn endpoints(&self, e: EdgeId) -> (usize, usize);
}

impl EdgeView for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    fn is_directed(&self) -> bool {
        self.directed
    }

    fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        Graph::out_edges(self, v).iter().copied()
    }

    fn in_edges(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        Graph::in_edges(self, v).iter().copied()
    }

    fn contains_edge(&self, e: EdgeId) -> bool {
        e.0 < self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }
}

/// View of a graph with a set of edges removed. Edge ids are preserved, and
/// nothing is copied: traversals simply skip removed edges.
#[derive(Clone, Copy)]
pub struct SubgraphView<'a> {
    g: &'a Graph,
    removed: &'a HashSet<EdgeId>,
}

impl EdgeView for SubgraphView<'_> {
    fn vertex_count(&self) -> usize {
        self.g.n
    }

    fn edge_bound(&self) -> usize {
        self.g.edges.len()
    }

    fn is_directed(&self) -> bool {
        self.g.directed
    }

    fn out_edges(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.g
            .out_edges(v)
            .iter()
            .copied()
            .filter(move |(_, e)| !self.removed.contains(e))
    }

    fn in_edges(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.g
            .in_edges(v)
            .iter()
            .copied()
            .filter(move |(_, e)| !self.removed.contains(e))
    }

    fn contains_edge(&self, e: EdgeId) -> bool {
        e.0 < self.g.edges.len() && !self.removed.contains(&e)
    }

    fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.g.edges[e.0]
    }
}

/// A set of at most `capacity` failing edges with constant expected-time
/// membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureSet {
    edges: HashSet<EdgeId>,
    capacity: usize,
}

impl FailureSet {
    pub fn new(capacity: usize) -> FailureSet {
        FailureSet {
            edges: HashSet::new(),
            capacity,
        }
    }

    /// Builds a failure set, rejecting more than `capacity` distinct edges.
    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(
        edges: I,
        capacity: usize,
    ) -> Result<FailureSet> {
        let set: HashSet<EdgeId> = edges.into_iter().collect();
        if set.len() > capacity {
            return Err(Error::CapacityExceeded {
                got: set.len(),
                capacity,
            });
        }
        Ok(FailureSet {
            edges: set,
            capacity,
        })
    }

    pub fn insert(&mut self, e: EdgeId) -> Result<()> {
        if !self.edges.contains(&e) && self.edges.len() == self.capacity {
            return Err(Error::CapacityExceeded {
                got: self.edges.len() + 1,
                capacity: self.capacity,
            });
        }
        self.edges.insert(e);
        Ok(())
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn as_set(&self) -> &HashSet<EdgeId> {
        &self.edges
    }

    /// Members in increasing id order.
    pub fn sorted(&self) -> Vec<EdgeId> {
        let mut v: Vec<EdgeId> = self.edges.iter().copied().collect();
        v.sort_unstable();
        v
    }
}

/// Parses the edge-list text format: a header line `n m d|u` followed by
/// `m` lines `tail head` with 0-based vertex ids. The line order defines
/// the edge ids.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Parse {
            line: 1,
            msg: "empty document".into(),
        })?;
    let mut parts = header.split_whitespace();
    let parse_num = |tok: Option<&str>, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse {
            line: 1,
            msg: format!("missing {what} in header"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line: 1,
            msg: format!("malformed {what} in header"),
        })
    };
    let n = parse_num(parts.next(), "vertex count")?;
    let m = parse_num(parts.next(), "edge count")?;
    let directed = match parts.next() {
        Some("d") => true,
        Some("u") => false,
        other => {
            return Err(Error::Parse {
                line: 1,
                msg: format!("expected direction flag d|u, got {other:?}"),
            })
        }
    };
    if parts.next().is_some() {
        return Err(Error::Parse {
            line: 1,
            msg: "trailing tokens in header".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("more than {m} edges"),
            });
        }
        let mut toks = line.split_whitespace();
        let mut vert = |what: &str| -> Result<usize> {
            let tok = toks.next().ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("missing {what}"),
            })?;
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("malformed {what} '{tok}'"),
            })?;
            if v >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex {v} out of range"),
                });
            }
            Ok(v)
        };
        let u = vert("tail")?;
        let v = vert("head")?;
        if toks.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: "trailing tokens on edge line".into(),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        let key = if directed || u < v { (u, v) } else { (v, u) };
        if !seen.insert(key) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate edge ({u}, {v})"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, directed, edges)
}

/// Renders a graph in the format accepted by [`parse_graph`].
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!(
        "{} {} {}\n",
        g.vertex_count(),
        g.edge_count(),
        if g.is_directed() { "d" } else { "u" }
    );
    for &(u, v) in g.edge_list() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses one failure-set line: whitespace-separated edge ids.
/// Validates ids against `edge_bound` and builds a set of capacity `f`.
pub fn parse_failure_line(line: &str, edge_bound: usize, f: usize) -> Result<FailureSet> {
    let mut ids = Vec::new();
    for tok in line.split_whitespace() {
        let id: usize = tok.parse().map_err(|_| {
            Error::InvalidArgument(format!("malformed edge id '{tok}' in failure set"))
        })?;
        if id >= edge_bound {
            return Err(Error::InvalidArgument(format!(
                "edge id {id} out of range (graph has {edge_bound} edges)"
            )));
        }
        ids.push(EdgeId(id));
    }
    FailureSet::from_edges(ids, f)
}

/// Maps each original vertex to its split images and bridge edge.
///
/// The split graph of a directed graph on `n` vertices and `m` arcs has `2n`
/// vertices and `m + n` edges: original arc `(u, v)` becomes
/// `(out(u), in(v))` with its id preserved, and each vertex `v` contributes
/// a bridge edge `(in(v), out(v))` with id `m + v`. Failing a vertex set in
/// the original graph is equivalent to failing its bridge edges here.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexSplitMap {
    /// Number of vertices in the original graph.
    pub original_n: usize,
    /// Number of arcs of the (symmetrized) original graph.
    pub arc_count: usize,
    /// Split edge id -> original edge id; `None` for bridge edges.
    pub arc_origin: Vec<Option<EdgeId>>,
}

impl VertexSplitMap {
    pub fn in_copy(&self, v: usize) -> usize {
        2 * v
    }

    pub fn out_copy(&self, v: usize) -> usize {
        2 * v + 1
    }

    pub fn bridge_edge(&self, v: usize) -> EdgeId {
        EdgeId(self.arc_count + v)
    }

    /// The original vertex of a bridge edge, if `e` is one.
    pub fn bridge_origin(&self, e: EdgeId) -> Option<usize> {
        if e.0 >= self.arc_count && e.0 < self.arc_count + self.original_n {
            Some(e.0 - self.arc_count)
        } else {
            None
        }
    }
}

/// Splits every vertex `v` into `in(v)` and `out(v)` joined by a bridge
/// edge, turning vertex failures into edge failures. Undirected inputs are
/// symmetrized to two arcs first (both arcs map back to the one original
/// edge id via the returned map).
pub fn split_vertices(g: &Graph) -> (Graph, VertexSplitMap) {
    let arcs = g.arcs();
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(arcs.len() + n);
    let mut arc_origin = Vec::with_capacity(arcs.len() + n);
    for &(u, v, id) in &arcs {
        edges.push((2 * u + 1, 2 * v));
        arc_origin.push(Some(id));
    }
    for v in 0..n {
        edges.push((2 * v, 2 * v + 1));
        arc_origin.push(None);
    }
    let split = Graph::new(2 * n, true, edges).expect("split of a valid graph is valid");
    let map = VertexSplitMap {
        original_n: n,
        arc_count: arcs.len(),
        arc_origin,
    };
    (split, map)
}

/// BFS levels from a source plus one shortest-path tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    /// `level[v] = d(s, v)`; `None` when unreachable.
    pub level: Vec<Option<usize>>,
    /// Parent edge in the tree; among all edges `(a, v)` with
    /// `level[a] + 1 == level[v]` the one with the smallest id is chosen.
    pub parent_edge: Vec<Option<EdgeId>>,
}

impl BfsTree {
    /// Vertices of the tree path from the source to `v`, if reachable.
    pub fn path_to<V: EdgeView>(&self, view: &V, v: usize) -> Option<Vec<usize>> {
        self.level[v]?;
        let mut path = vec![v];
        let mut cur = v;
        while let Some(e) = self.parent_edge[cur] {
            let (a, b) = view.endpoints(e);
            cur = if b == cur { a } else { b };
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }
}

/// BFS from `s`: levels are exact distances, unreachable vertices get
/// `None`, and tree parents are tie-broken by smallest edge id.
pub fn bfs_levels<V: EdgeView>(view: &V, s: usize) -> BfsTree {
    let n = view.vertex_count();
    assert!(s < n, "source {s} out of range for n = {n}");
    let mut level = vec![None; n];
    level[s] = Some(0);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let next = level[u].unwrap() + 1;
        for (w, _) in view.out_edges(u) {
            if level[w].is_none() {
                level[w] = Some(next);
                queue.push_back(w);
            }
        }
    }
    let mut parent_edge = vec![None; n];
    for v in 0..n {
        let Some(lv) = level[v] else { continue };
        if lv == 0 {
            continue;
        }
        parent_edge[v] = view
            .in_edges(v)
            .filter(|&(a, _)| level[a] == Some(lv - 1))
            .map(|(_, e)| e)
            .min();
    }
    BfsTree { level, parent_edge }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        parse_graph("3 2 d\n0 1\n1 2").unwrap()
    }

    #[test]
    fn parse_directed_path() {
        let g = path3();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.is_directed());
        assert_eq!(g.endpoints(EdgeId(0)), (0, 1));
    }

    #[test]
    fn parse_undirected_single_edge() {
        let g = parse_graph("2 1 u\n0 1").unwrap();
        assert_eq!(g.edge_count(), 1);
        // Symmetric adjacency with a single shared id.
        assert_eq!(g.out_edges(0), &[(1, EdgeId(0))]);
        assert_eq!(g.out_edges(1), &[(0, EdgeId(0))]);
        assert_eq!(g.in_edges(0), g.out_edges(0));
    }

    #[test]
    fn parse_out_of_range_vertex() {
        let err = parse_graph("2 1 d\n0 5").unwrap_err();
        assert_eq!(err.to_string(), "vertex 5 out of range at line 2");
    }

    #[test]
    fn parse_rejects_duplicates_and_loops() {
        assert!(parse_graph("3 2 d\n0 1\n0 1").is_err());
        assert!(parse_graph("3 2 u\n0 1\n1 0").is_err());
        assert!(parse_graph("2 1 d\n1 1").is_err());
        assert!(parse_graph("2 2 d\n0 1").is_err());
    }

    #[test]
    fn split_path_counts() {
        let (sp, map) = split_vertices(&path3());
        assert_eq!(sp.vertex_count(), 6);
        assert_eq!(sp.edge_count(), 5); // 2 original images + 3 bridges
        assert_eq!(map.bridge_edge(0), EdgeId(2));
        assert_eq!(map.bridge_origin(EdgeId(2)), Some(0));
        assert_eq!(map.arc_origin[0], Some(EdgeId(0)));
    }

    #[test]
    fn split_single_vertex() {
        let g = Graph::new(1, true, vec![]).unwrap();
        let (sp, _) = split_vertices(&g);
        assert_eq!(sp.vertex_count(), 2);
        assert_eq!(sp.edge_count(), 1);
    }

    #[test]
    fn split_roundtrip_recovers_edges() {
        let g = parse_graph("4 4 d\n0 1\n1 2\n2 3\n3 0").unwrap();
        let (sp, map) = split_vertices(&g);
        let mut recovered = Vec::new();
        for (i, &(u, v)) in sp.edge_list().iter().enumerate() {
            if let Some(orig) = map.arc_origin[i] {
                // in/out copies encode the original endpoints
                recovered.push((orig, (u / 2, v / 2)));
            }
        }
        recovered.sort();
        let expect: Vec<_> = g
            .edge_list()
            .iter()
            .enumerate()
            .map(|(i, &e)| (EdgeId(i), e))
            .collect();
        assert_eq!(recovered, expect);
    }

    #[test]
    fn bfs_star_levels() {
        let g = parse_graph("4 3 d\n0 1\n0 2\n0 3").unwrap();
        let t = bfs_levels(&g, 0);
        assert_eq!(t.level, vec![Some(0), Some(1), Some(1), Some(1)]);
    }

    #[test]
    fn bfs_path_and_unreachable() {
        let g = parse_graph("4 2 d\n0 1\n1 2").unwrap();
        let t = bfs_levels(&g, 0);
        assert_eq!(t.level, vec![Some(0), Some(1), Some(2), None]);
        assert_eq!(t.parent_edge[2], Some(EdgeId(1)));
        assert_eq!(t.parent_edge[3], None);
        assert_eq!(t.path_to(&g, 2), Some(vec![0, 1, 2]));
    }

    #[test]
    fn subgraph_minus_views() {
        let g = parse_graph("3 3 u\n0 1\n1 2\n0 2").unwrap();
        let empty = FailureSet::new(3);
        let view = g.minus(&empty);
        assert_eq!(view.out_edges(0).count(), 2);

        let all = FailureSet::from_edges((0..3).map(EdgeId), 3).unwrap();
        let view = g.minus(&all);
        for v in 0..3 {
            assert_eq!(view.out_edges(v).count(), 0);
        }

        let one = FailureSet::from_edges([EdgeId(1)], 3).unwrap();
        let view = g.minus(&one);
        assert_eq!(view.out_edges(1).count(), 1);
        assert!(!view.contains_edge(EdgeId(1)));
        assert!(view.contains_edge(EdgeId(0)));
    }

    #[test]
    fn failure_set_capacity() {
        let mut fs = FailureSet::new(1);
        fs.insert(EdgeId(0)).unwrap();
        fs.insert(EdgeId(0)).unwrap(); // re-inserting is fine
        assert!(fs.insert(EdgeId(1)).is_err());
        assert!(FailureSet::from_edges([EdgeId(0), EdgeId(1)], 1).is_err());
    }

    #[test]
    fn failure_line_parsing() {
        let fs = parse_failure_line(" 3 1 ", 5, 3).unwrap();
        assert_eq!(fs.sorted(), vec![EdgeId(1), EdgeId(3)]);
        assert!(parse_failure_line("7", 5, 3).is_err());
        assert!(parse_failure_line("x", 5, 3).is_err());
        assert!(parse_failure_line("", 5, 0).unwrap().is_empty());
    }
}
