//! Small mutable incidence structure used by the vertex-cover solver,
//! kernelization, and the branching oracles. Tracks alive edges and
//! explicitly deleted vertices over the underlying undirected graph.

use std::collections::HashSet;

use crate::graph::{EdgeId, FailureSet, Graph};

#[derive(Debug, Clone)]
pub(crate) struct WorkGraph {
    /// Endpoints plus the external edge id, in increasing external order.
    edges: Vec<(usize, usize, EdgeId)>,
    /// Incident edge indexes per vertex (alive or not).
    adj: Vec<Vec<usize>>,
    edge_alive: Vec<bool>,
    /// A vertex is alive until explicitly deleted; vertices isolated from
    /// the start are never alive.
    vertex_alive: Vec<bool>,
    degree: Vec<usize>,
    alive_edges: usize,
    alive_vertices: usize,
}

impl WorkGraph {
    pub fn new(g: &Graph) -> WorkGraph {
        Self::new_minus_set(g, &HashSet::new())
    }

    pub fn new_minus(g: &Graph, fails: &FailureSet) -> WorkGraph {
        Self::new_minus_set(g, fails.as_set())
    }

    pub fn new_minus_set(g: &Graph, removed: &HashSet<EdgeId>) -> WorkGraph {
        let n = g.vertex_count();
        let mut edges = Vec::new();
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in g.edge_list().iter().enumerate() {
            if removed.contains(&EdgeId(i)) {
                continue;
            }
            let idx = edges.len();
            edges.push((u, v, EdgeId(i)));
            adj[u].push(idx);
            adj[v].push(idx);
        }
        let degree: Vec<usize> = adj.iter().map(Vec::len).collect();
        let vertex_alive: Vec<bool> = degree.iter().map(|&d| d > 0).collect();
        let alive_vertices = vertex_alive.iter().filter(|&&a| a).count();
        let alive_edges = edges.len();
        WorkGraph {
            edge_alive: vec![true; alive_edges],
            edges,
            adj,
            degree,
            vertex_alive,
            alive_edges,
            alive_vertices,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn alive_edge_count(&self) -> usize {
        self.alive_edges
    }

    pub fn alive_vertex_count(&self) -> usize {
        self.alive_vertices
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn endpoints(&self, idx: usize) -> (usize, usize) {
        (self.edges[idx].0, self.edges[idx].1)
    }

    pub fn external_id(&self, idx: usize) -> EdgeId {
        self.edges[idx].2
    }

    pub fn is_edge_alive(&self, idx: usize) -> bool {
        self.edge_alive[idx]
    }

    pub fn delete_edge(&mut self, idx: usize) {
        if !self.edge_alive[idx] {
            return;
        }
        self.edge_alive[idx] = false;
        self.alive_edges -= 1;
        let (u, v, _) = self.edges[idx];
        self.degree[u] -= 1;
        self.degree[v] -= 1;
    }

    pub fn delete_vertex(&mut self, v: usize) {
        if !self.vertex_alive[v] {
            return;
        }
        self.vertex_alive[v] = false;
        self.alive_vertices -= 1;
        for idx in self.adj[v].clone() {
            self.delete_edge(idx);
        }
    }

    /// Alive incident edge indexes of `v`.
    pub fn incident_alive(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied().filter(|&i| self.edge_alive[i])
    }

    /// Distinct alive neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .incident_alive(v)
            .map(|i| {
                let (a, b, _) = self.edges[i];
                if a == v {
                    b
                } else {
                    a
                }
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Alive vertex of maximum degree (smallest id on ties).
    pub fn max_degree_vertex(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.adj.len() {
            if self.degree[v] == 0 {
                continue;
            }
            if best.is_none_or(|b| self.degree[v] > self.degree[b]) {
                best = Some(v);
            }
        }
        best
    }

    /// Smallest-id alive vertex with positive degree and degree exactly 1.
    pub fn degree_one_vertex(&self) -> Option<usize> {
        (0..self.adj.len()).find(|&v| self.degree[v] == 1)
    }

    /// First alive edge by external id, skipping ids in `excluded`.
    pub fn first_alive_edge_not_in(&self, excluded: &HashSet<EdgeId>) -> Option<usize> {
        (0..self.edges.len())
            .find(|&i| self.edge_alive[i] && !excluded.contains(&self.edges[i].2))
    }

    /// First alive edge by external id.
    pub fn first_alive_edge(&self) -> Option<usize> {
        self.edge_alive.iter().position(|&a| a)
    }

    /// Alive edges incident to `v` whose external id is in `set`.
    pub fn incident_count_in(&self, v: usize, set: &HashSet<EdgeId>) -> usize {
        self.incident_alive(v)
            .filter(|&i| set.contains(&self.edges[i].2))
            .count()
    }
}
