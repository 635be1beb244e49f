//! Failure-aware high-degree kernelization: any vertex of degree above
//! `k + f` belongs to every small cover of every `G - F`, so it can be
//! forced and removed up front. What remains has at most
//! `f + k'(f + k')` edges, or the instance is a no-instance for every
//! failure set.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FailureSet, Graph};

use super::WorkGraph;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VcKernel {
    /// The kernel graph `H` (compacted; no isolated vertices).
    pub kernel: Graph,
    /// Kernel vertex -> original vertex.
    pub vertex_map: Vec<usize>,
    /// Kernel edge -> original edge.
    pub edge_map: Vec<EdgeId>,
    /// Original edge -> kernel edge, `None` for edges deleted with forced
    /// vertices.
    pub g_to_h: Vec<Option<EdgeId>>,
    /// Residual cover budget `k'`.
    pub k_prime: usize,
    /// Vertices removed by the degree rule, in removal order.
    pub forced: Vec<usize>,
    /// The instance has no k-cover for any failure set of size <= f.
    pub global_no: bool,
    pub f: usize,
    pub k: usize,
}

/// Applies the degree rule exhaustively (threshold `current budget + f`,
/// smallest qualifying vertex first) and packages the remainder. For every
/// `|F| <= f`: `G - F` has a k-cover iff `H - F` has a k'-cover.
///
/// The degree arguments count incident edges, so the input must be simple
/// when directions are ignored; directed graphs with anti-parallel pairs
/// are rejected.
pub fn vc_kernel(g: &Graph, f: usize, k: usize) -> Result<VcKernel> {
    if !g.underlying_is_simple() {
        return Err(Error::InvalidArgument(
            "vertex-cover structures need a simple underlying graph \
             (both orientations of an edge are present)"
                .into(),
        ));
    }
    let mut wg = WorkGraph::new(g);
    let mut forced = Vec::new();
    let mut budget = k as i64;
    let mut global_no = false;
    loop {
        let threshold = budget.max(0) as usize + f;
        let Some(v) =
            (0..wg.vertex_count()).find(|&v| wg.degree(v) > threshold)
        else {
            break;
        };
        wg.delete_vertex(v);
        forced.push(v);
        budget -= 1;
        if budget < 0 {
            global_no = true;
            break;
        }
    }
    let k_prime = budget.max(0) as usize;
    if !global_no && wg.alive_edge_count() > f + k_prime * (f + k_prime) {
        global_no = true;
    }
    if global_no {
        return Ok(VcKernel {
            kernel: Graph::new(0, g.is_directed(), vec![]).expect("empty graph"),
            vertex_map: vec![],
            edge_map: vec![],
            g_to_h: vec![None; g.edge_count()],
            k_prime: 0,
            forced,
            global_no,
            f,
            k,
        });
    }

    // Compact the surviving edges; isolated vertices drop out.
    let mut vertex_map = Vec::new();
    let mut to_new = vec![None; g.vertex_count()];
    let mut edges = Vec::new();
    let mut edge_map = Vec::new();
    let mut g_to_h = vec![None; g.edge_count()];
    let remap = |v: usize, vertex_map: &mut Vec<usize>, to_new: &mut Vec<Option<usize>>| {
        *to_new[v].get_or_insert_with(|| {
            vertex_map.push(v);
            vertex_map.len() - 1
        })
    };
    for idx in 0..g.edge_count() {
        if !wg.is_edge_alive(idx) {
            continue;
        }
        let (u, v) = wg.endpoints(idx);
        let ext = wg.external_id(idx);
        let nu = remap(u, &mut vertex_map, &mut to_new);
        let nv = remap(v, &mut vertex_map, &mut to_new);
        g_to_h[ext.0] = Some(EdgeId(edges.len()));
        edges.push((nu, nv));
        edge_map.push(ext);
    }
    let kernel =
        Graph::new(vertex_map.len(), g.is_directed(), edges).expect("subgraph of a valid graph");
    Ok(VcKernel {
        kernel,
        vertex_map,
        edge_map,
        g_to_h,
        k_prime,
        forced,
        global_no,
        f,
        k,
    })
}

impl VcKernel {
    /// Maps an original failure set into the kernel, dropping edges that
    /// were deleted together with forced vertices (those are covered for
    /// every admissible failure set).
    pub fn map_failures(&self, fails: &FailureSet) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = fails
            .as_set()
            .iter()
            .filter_map(|e| self.g_to_h.get(e.0).copied().flatten())
            .collect();
        out.sort_unstable();
        out
    }

    /// Decides whether `G - F` has a k-cover through the kernel.
    pub fn decide(&self, fails: &FailureSet) -> bool {
        if self.global_no {
            return false;
        }
        if self.kernel.edge_count() == 0 {
            return true;
        }
        let mapped: std::collections::HashSet<EdgeId> =
            self.map_failures(fails).into_iter().collect();
        let wg = WorkGraph::new_minus_set(&self.kernel, &mapped);
        super::solve::solve_work(&wg, self.k_prime).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::ground_truth::{bf_vc, enumerate_failure_sets};
    use crate::vc::vc_solve_minus;

    #[test]
    fn star_forces_its_center() {
        for (f, k) in [(0usize, 1usize), (1, 1), (2, 2), (3, 1)] {
            let g = gen::star(f + k + 2);
            let ker = vc_kernel(&g, f, k).unwrap();
            assert_eq!(ker.forced, vec![0]);
            assert_eq!(ker.k_prime, k - 1);
            assert!(!ker.global_no);
            assert_eq!(ker.kernel.edge_count(), 0);
            // empty kernel with a non-negative residual: yes for every F
            for ids in enumerate_failure_sets(g.edge_count(), f) {
                let fails = FailureSet::from_edges(ids, f).unwrap();
                assert!(ker.decide(&fails));
            }
        }
        // with k = 0 the forced deletion overdraws the budget
        let g = gen::star(2);
        let ker = vc_kernel(&g, 0, 0).unwrap();
        assert!(ker.global_no);
    }

    #[test]
    fn c4_with_pendants_is_its_own_kernel() {
        let g = gen::c4_pendant();
        let ker = vc_kernel(&g, 2, 2).unwrap();
        assert!(!ker.global_no);
        assert!(ker.forced.is_empty());
        assert_eq!(ker.k_prime, 2);
        assert_eq!(ker.kernel.edge_count(), g.edge_count());
    }

    #[test]
    fn star_forest_keeps_every_edge() {
        // Two stars with two leaves each; max degree 2 <= k + f = 3, so the
        // kernel is the graph itself and the answer is yes exactly when one
        // whole star fails.
        let g = gen::star_forest(1, 2);
        let ker = vc_kernel(&g, 2, 1).unwrap();
        assert_eq!(ker.kernel.edge_count(), 4);
        assert_eq!(ker.k_prime, 1);
        for ids in enumerate_failure_sets(4, 2) {
            let fails = FailureSet::from_edges(ids.clone(), 2).unwrap();
            let expect = ids == vec![EdgeId(0), EdgeId(1)] || ids == vec![EdgeId(2), EdgeId(3)];
            assert_eq!(ker.decide(&fails), expect, "F = {ids:?}");
            assert_eq!(bf_vc(&g, &fails, 1), expect);
        }
    }

    #[test]
    fn kernel_is_equivalent_on_random_instances() {
        for seed in 0..25u64 {
            let g = gen::gnm(8, 12, false, seed).unwrap();
            for (f, k) in [(1usize, 2usize), (2, 2), (2, 3)] {
                let ker = vc_kernel(&g, f, k).unwrap();
                if !ker.global_no {
                    assert!(
                        ker.kernel.edge_count() <= f + ker.k_prime * (f + ker.k_prime),
                        "kernel edge bound"
                    );
                }
                for ids in enumerate_failure_sets(g.edge_count(), f) {
                    let fails = FailureSet::from_edges(ids, f).unwrap();
                    let direct = vc_solve_minus(&g, &fails, k).is_some();
                    assert_eq!(ker.decide(&fails), direct, "seed {seed} f={f} k={k}");
                }
            }
        }
    }

    #[test]
    fn clique_is_globally_no() {
        let g = gen::clique(6);
        let ker = vc_kernel(&g, 1, 1).unwrap();
        assert!(ker.global_no);
        for ids in enumerate_failure_sets(g.edge_count(), 1) {
            let fails = FailureSet::from_edges(ids, 1).unwrap();
            assert!(!ker.decide(&fails));
            assert!(!bf_vc(&g, &fails, 1));
        }
    }
}
