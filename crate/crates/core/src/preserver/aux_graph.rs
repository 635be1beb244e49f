//! Layered auxiliary graph for one detour signature.
//!
//! For `Y = (y_1 .. y_t)` the graph has `t + 1` copies of the vertex set
//! (copy `i` of `v` is aux vertex `i * n + v`). Level-increasing edges are
//! replicated inside every layer; an edge whose signature value equals
//! `y_i` crosses from layer `i - 1` to layer `i`. A path from the source
//! copy in layer 0 to `v` in layer `t` exists exactly when the original
//! graph minus the (lifted) failures has an `s -> v` walk with positive
//! signature `Y`.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::{bfs_levels, EdgeId, FailureSet, Graph};

use super::LevelSequence;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(from = "AuxGraphSer", into = "AuxGraphSer")]
pub struct AuxGraph {
    pub y: LevelSequence,
    pub base_n: usize,
    /// `t + 1`.
    pub layers: usize,
    /// Aux id of the source copy in layer 0.
    pub source: usize,
    /// Aux arcs in creation order (= arc id).
    pub edges: Vec<(usize, usize)>,
    /// Arc id -> original edge id.
    pub phi: Vec<EdgeId>,
    /// Original edge id -> arc ids (the inverse projection).
    pub phi_inv: Vec<Vec<usize>>,
    out_adj: Vec<Vec<(usize, usize)>>,
    in_adj: Vec<Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct AuxGraphSer {
    y: LevelSequence,
    base_n: usize,
    layers: usize,
    source: usize,
    edges: Vec<(usize, usize)>,
    phi: Vec<EdgeId>,
    edge_count: usize,
}

impl From<AuxGraph> for AuxGraphSer {
    fn from(a: AuxGraph) -> Self {
        AuxGraphSer {
            y: a.y,
            base_n: a.base_n,
            layers: a.layers,
            source: a.source,
            edges: a.edges,
            phi: a.phi,
            edge_count: a.phi_inv.len(),
        }
    }
}

impl From<AuxGraphSer> for AuxGraph {
    fn from(s: AuxGraphSer) -> Self {
        AuxGraph::assemble(
            s.y, s.base_n, s.layers, s.source, s.edges, s.phi, s.edge_count,
        )
    }
}

/// Builds the auxiliary graph for `(g, s, y)`; levels are recomputed.
pub fn build_aux_graph(g: &Graph, s: usize, y: &LevelSequence) -> AuxGraph {
    let levels = bfs_levels(g, s);
    build_aux_graph_with_levels(g, s, y, &levels.level)
}

/// Same with precomputed BFS levels of `g` from `s`.
pub fn build_aux_graph_with_levels(
    g: &Graph,
    s: usize,
    y: &LevelSequence,
    level: &[Option<usize>],
) -> AuxGraph {
    let n = g.vertex_count();
    let t = y.len();
    let arcs = g.arcs();
    let mut edges = Vec::new();
    let mut phi = Vec::new();
    // Level-increasing arcs live in every layer.
    for layer in 0..=t {
        for &(a, b, id) in &arcs {
            let (Some(la), Some(lb)) = (level[a], level[b]) else {
                continue;
            };
            if lb == la + 1 {
                edges.push((layer * n + a, layer * n + b));
                phi.push(id);
            }
        }
    }
    // Arcs whose signature value is y_i cross from layer i-1 into layer i.
    for (i, &yi) in y.parts().iter().enumerate() {
        let layer = i + 1;
        for &(a, b, id) in &arcs {
            let (Some(la), Some(lb)) = (level[a], level[b]) else {
                continue;
            };
            if 1 + la == lb + yi {
                edges.push(((layer - 1) * n + a, layer * n + b));
                phi.push(id);
            }
        }
    }
    AuxGraph::assemble(y.clone(), n, t + 1, s, edges, phi, g.edge_count())
}

impl AuxGraph {
    fn assemble(
        y: LevelSequence,
        base_n: usize,
        layers: usize,
        source: usize,
        edges: Vec<(usize, usize)>,
        phi: Vec<EdgeId>,
        edge_count: usize,
    ) -> AuxGraph {
        let total = base_n * layers;
        let mut out_adj = vec![Vec::new(); total];
        let mut in_adj = vec![Vec::new(); total];
        let mut phi_inv = vec![Vec::new(); edge_count];
        for (arc, &(a, b)) in edges.iter().enumerate() {
            out_adj[a].push((b, arc));
            in_adj[b].push((a, arc));
            phi_inv[phi[arc].0].push(arc);
        }
        AuxGraph {
            y,
            base_n,
            layers,
            source,
            edges,
            phi,
            phi_inv,
            out_adj,
            in_adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.base_n * self.layers
    }

    pub fn aux_id(&self, layer: usize, v: usize) -> usize {
        layer * self.base_n + v
    }

    /// Target copy of `v` (top layer).
    pub fn target(&self, v: usize) -> usize {
        self.aux_id(self.layers - 1, v)
    }

    /// Arc ids whose projection lies in `fails`.
    pub fn lift_failures(&self, fails: &FailureSet) -> Vec<usize> {
        let mut out: Vec<usize> = fails
            .as_set()
            .iter()
            .flat_map(|e| self.phi_inv[e.0].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Which aux vertices the source reaches once `fails` is lifted and
    /// removed.
    pub fn reachable_minus(&self, fails: &FailureSet) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count()];
        seen[self.source] = true;
        let mut queue = VecDeque::new();
        queue.push_back(self.source);
        while let Some(u) = queue.pop_front() {
            for &(w, arc) in &self.out_adj[u] {
                if seen[w] || fails.contains(self.phi[arc]) {
                    continue;
                }
                seen[w] = true;
                queue.push_back(w);
            }
        }
        seen
    }

    /// One reachability tree (BFS levels, parent arcs tie-broken by the
    /// smallest arc id) of the graph minus the lifted failures. Entry `v`
    /// is the parent arc of aux vertex `v`, `None` for the source and
    /// unreachable vertices.
    pub fn reach_tree_minus(&self, fails: &FailureSet) -> Vec<Option<usize>> {
        let total = self.vertex_count();
        let mut level: Vec<Option<usize>> = vec![None; total];
        level[self.source] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(self.source);
        while let Some(u) = queue.pop_front() {
            let next = level[u].unwrap() + 1;
            for &(w, arc) in &self.out_adj[u] {
                if level[w].is_some() || fails.contains(self.phi[arc]) {
                    continue;
                }
                level[w] = Some(next);
                queue.push_back(w);
            }
        }
        let mut parent = vec![None; total];
        for v in 0..total {
            let Some(lv) = level[v] else { continue };
            if lv == 0 {
                continue;
            }
            parent[v] = self.in_adj[v]
                .iter()
                .filter(|&&(a, arc)| {
                    level[a] == Some(lv - 1) && !fails.contains(self.phi[arc])
                })
                .map(|&(_, arc)| arc)
                .min();
        }
        parent
    }

    /// Projects the tree path to `target` back to a walk of the original
    /// graph (a list of original vertices).
    pub fn project_path(&self, parent: &[Option<usize>], target: usize) -> Option<Vec<usize>> {
        let mut walk = vec![target % self.base_n];
        let mut cur = target;
        while cur != self.source {
            let arc = parent[cur]?;
            let (a, _) = self.edges[arc];
            cur = a;
            walk.push(cur % self.base_n);
        }
        walk.reverse();
        Some(walk)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::parse_graph;
    use crate::ground_truth::{bf_signature_walk, enumerate_failure_sets};
    use crate::preserver::{enumerate_y, x_sequence};

    fn fails(ids: &[usize], cap: usize) -> FailureSet {
        FailureSet::from_edges(ids.iter().map(|&i| EdgeId(i)), cap).unwrap()
    }

    #[test]
    fn empty_signature_is_the_level_increasing_subgraph() {
        let g = parse_graph("4 4 d\n0 1\n1 2\n2 3\n0 2").unwrap();
        let aux = build_aux_graph(&g, 0, &LevelSequence::empty());
        assert_eq!(aux.layers, 1);
        assert_eq!(aux.vertex_count(), 4);
        // levels: 0,1,1,2 -- edges (0,1),(0,2) raise by one, (2,3) raises,
        // (1,2) stays level
        let kept: Vec<usize> = aux.phi.iter().map(|e| e.0).collect();
        assert_eq!(kept, vec![0, 2, 3]);
        let reach = aux.reachable_minus(&fails(&[], 1));
        assert!(reach.iter().all(|&r| r));
    }

    #[test]
    fn lifted_failures_stay_within_the_layer_bound() {
        for seed in 0..10u64 {
            let g = gen::gnm(8, 12, true, seed).unwrap();
            for y in enumerate_y(2) {
                let aux = build_aux_graph(&g, 0, &y);
                let t = y.len();
                for ids in enumerate_failure_sets(g.edge_count(), 2) {
                    let fs = FailureSet::from_edges(ids.clone(), 2).unwrap();
                    assert!(aux.lift_failures(&fs).len() <= (t + 1) * ids.len());
                }
            }
        }
    }

    #[test]
    fn reachability_in_layers_equals_signature_walk_existence() {
        // Both directions of the equivalence, exhaustively.
        for seed in 0..12u64 {
            let g = gen::gnm(7, 11, seed % 2 == 0, seed).unwrap();
            let base = crate::graph::bfs_levels(&g, 0);
            for y in enumerate_y(2) {
                let aux = build_aux_graph(&g, 0, &y);
                for ids in enumerate_failure_sets(g.edge_count(), 2) {
                    let fs = FailureSet::from_edges(ids.clone(), 2).unwrap();
                    let reach = aux.reachable_minus(&fs);
                    for v in 0..g.vertex_count() {
                        let direct =
                            bf_signature_walk(&g, &fs, 0, v, &base.level, y.parts());
                        assert_eq!(
                            reach[aux.target(v)],
                            direct,
                            "seed {seed} v={v} Y={:?} F={ids:?}",
                            y.parts()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn projected_tree_paths_are_valid_witness_walks() {
        for seed in 0..6u64 {
            let g = gen::gnm(7, 11, true, seed).unwrap();
            let base = crate::graph::bfs_levels(&g, 0);
            for y in enumerate_y(2) {
                let aux = build_aux_graph(&g, 0, &y);
                for ids in enumerate_failure_sets(g.edge_count(), 1) {
                    let fs = FailureSet::from_edges(ids.clone(), 1).unwrap();
                    let parents = aux.reach_tree_minus(&fs);
                    for v in 0..g.vertex_count() {
                        let target = aux.target(v);
                        if parents[target].is_none() && target != aux.source {
                            continue;
                        }
                        let walk = aux.project_path(&parents, target).unwrap();
                        // consecutive walk vertices are joined by surviving edges
                        for step in walk.windows(2) {
                            let ok = g.out_edges(step[0]).iter().any(|&(w, e)| {
                                w == step[1] && !fs.contains(e)
                            });
                            assert!(ok, "seed {seed}: walk step {step:?} missing");
                        }
                        let (_, pos) = x_sequence(&walk, &base.level).unwrap();
                        assert_eq!(pos, y.parts(), "projected signature matches");
                    }
                }
            }
        }
    }

    #[test]
    fn serialization_reassembles_adjacency() {
        let g = parse_graph("4 4 d\n0 1\n1 2\n2 3\n0 2").unwrap();
        let aux = build_aux_graph(&g, 0, &LevelSequence::new(vec![1]).unwrap());
        let json = serde_json::to_string(&aux).unwrap();
        let back: AuxGraph = serde_json::from_str(&json).unwrap();
        assert_eq!(back.edges, aux.edges);
        let f = FailureSet::new(1);
        assert_eq!(back.reachable_minus(&f), aux.reachable_minus(&f));
    }
}
