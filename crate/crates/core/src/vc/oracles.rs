//! The three vertex-cover sensitivity oracles.
//!
//! - [`VcSubsetOracle`]: branch `(take u | take v | fail edge)` on the
//!   kernel and store the failure sets of successful leaves; a query checks
//!   all subsets of `F` against the store.
//! - [`VcTreeOracle`]: binary lookup tree over edge decisions
//!   (failing / safe) with a degree reduction on safe edges; a query walks
//!   one root-leaf path.
//! - [`VcKernelOracle`]: the kernel plus an exact solver call per query.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FailureSet, Graph};

use super::kernel::{vc_kernel, VcKernel};
use super::WorkGraph;

/// Upper bound `3^(f+k)` on the number of stored sets.
pub fn subset_store_bound(f: usize, k: usize) -> u64 {
    3u64.saturating_pow((f + k) as u32)
}

/// Upper bound `2^(f + k(k+1) + 1)` on the lookup-tree node count.
pub fn vctree_size_bound(f: usize, k: usize) -> u64 {
    let depth = (f + k * (k + 1) + 1) as u32;
    2u64.saturating_pow(depth)
}

// ---------------------------------------------------------------------------
// Subset-store oracle

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(from = "VcSubsetOracleSer", into = "VcSubsetOracleSer")]
pub struct VcSubsetOracle {
    /// Failure sets (canonical sorted tuples of original edge ids) whose
    /// removal leaves a k-coverable graph.
    pub sets: HashSet<Vec<EdgeId>>,
    pub f: usize,
    pub k: usize,
    pub edge_count: usize,
}

/// Serialized form keeps the store as a sorted list.
#[derive(Serialize, Deserialize)]
struct VcSubsetOracleSer {
    sets: Vec<Vec<EdgeId>>,
    f: usize,
    k: usize,
    edge_count: usize,
}

impl From<VcSubsetOracle> for VcSubsetOracleSer {
    fn from(o: VcSubsetOracle) -> Self {
        let mut sets: Vec<Vec<EdgeId>> = o.sets.into_iter().collect();
        sets.sort();
        VcSubsetOracleSer {
            sets,
            f: o.f,
            k: o.k,
            edge_count: o.edge_count,
        }
    }
}

impl From<VcSubsetOracleSer> for VcSubsetOracle {
    fn from(s: VcSubsetOracleSer) -> Self {
        VcSubsetOracle {
            sets: s.sets.into_iter().collect(),
            f: s.f,
            k: s.k,
            edge_count: s.edge_count,
        }
    }
}

pub fn build_subset_oracle(g: &Graph, f: usize, k: usize) -> Result<VcSubsetOracle> {
    let kernel = vc_kernel(g, f, k)?;
    let mut sets = HashSet::new();
    if !kernel.global_no {
        let wg = WorkGraph::new(&kernel.kernel);
        let mut fails = Vec::new();
        collect_sets(&wg, kernel.k_prime, f, &kernel, &mut fails, &mut sets);
    }
    Ok(VcSubsetOracle {
        sets,
        f,
        k,
        edge_count: g.edge_count(),
    })
}

fn collect_sets(
    wg: &WorkGraph,
    cover_budget: usize,
    fail_budget: usize,
    kernel: &VcKernel,
    fails: &mut Vec<EdgeId>,
    sets: &mut HashSet<Vec<EdgeId>>,
) {
    if wg.alive_edge_count() == 0 {
        let mut key: Vec<EdgeId> = fails.iter().map(|e| kernel.edge_map[e.0]).collect();
        key.sort_unstable();
        sets.insert(key);
        return;
    }
    let idx = wg.first_alive_edge().expect("edges remain");
    let (u, v) = wg.endpoints(idx);
    if cover_budget > 0 {
        for side in [u, v] {
            let mut next = wg.clone();
            next.delete_vertex(side);
            collect_sets(&next, cover_budget - 1, fail_budget, kernel, fails, sets);
        }
    }
    if fail_budget > 0 {
        let mut next = wg.clone();
        next.delete_edge(idx);
        fails.push(wg.external_id(idx));
        collect_sets(&next, cover_budget, fail_budget - 1, kernel, fails, sets);
        fails.pop();
    }
}

impl VcSubsetOracle {
    pub fn store_size(&self) -> usize {
        self.sets.len()
    }

    /// Yes iff some subset of `F` is in the store.
    pub fn query(&self, fails: &FailureSet) -> Result<bool> {
        if fails.len() > self.f {
            return Err(Error::CapacityExceeded {
                got: fails.len(),
                capacity: self.f,
            });
        }
        let edges = fails.sorted();
        for mask in 0u32..(1 << edges.len()) {
            let subset: Vec<EdgeId> = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            if self.sets.contains(&subset) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

// ---------------------------------------------------------------------------
// Binary lookup-tree oracle

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum VcTreeNode {
    Leaf {
        yes: bool,
    },
    Branch {
        edge: EdgeId,
        /// Child when the branching edge fails; absent only when the
        /// failure budget is exhausted, in which case no admissible query
        /// walks there.
        zero: Option<usize>,
        /// Child when the branching edge is safe; absent when the safe
        /// budget `k(k+1)` is exhausted, which decides the query as "no"
        /// (a small cover would have been wiped out by the reductions).
        one: Option<usize>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VcTreeOracle {
    /// Node arena; the root is node 0.
    pub nodes: Vec<VcTreeNode>,
    pub f: usize,
    pub k: usize,
    pub edge_count: usize,
}

pub fn build_vctree_oracle(g: &Graph, f: usize, k: usize) -> Result<VcTreeOracle> {
    if !g.underlying_is_simple() {
        return Err(Error::InvalidArgument(
            "vertex-cover structures need a simple underlying graph \
             (both orientations of an edge are present)"
                .into(),
        ));
    }
    let mut nodes = Vec::new();
    let wg = WorkGraph::new(g);
    build_vctree_node(g, wg, HashSet::new(), 0, Vec::new(), f, k, &mut nodes);
    Ok(VcTreeOracle {
        nodes,
        f,
        k,
        edge_count: g.edge_count(),
    })
}

/// Expands one node and returns its arena index.
#[allow(clippy::too_many_arguments)]
fn build_vctree_node(
    g: &Graph,
    wg: WorkGraph,
    safe: HashSet<EdgeId>,
    safe_count: usize,
    fails: Vec<EdgeId>,
    f: usize,
    k: usize,
    nodes: &mut Vec<VcTreeNode>,
) -> usize {
    let Some(idx) = wg.first_alive_edge_not_in(&safe) else {
        // Branchless: the reductions emptied the graph (trivial yes), or we
        // decide the remaining instance exactly.
        let yes = if wg.alive_vertex_count() == 0 {
            true
        } else {
            let fs = FailureSet::from_edges(fails.iter().copied(), fails.len())
                .expect("capacity equals length");
            super::solve::vc_solve_minus(g, &fs, k).is_some()
        };
        nodes.push(VcTreeNode::Leaf { yes });
        return nodes.len() - 1;
    };
    let edge = wg.external_id(idx);

    let zero = if fails.len() < f {
        let mut next = wg.clone();
        next.delete_edge(idx);
        let mut next_fails = fails.clone();
        next_fails.push(edge);
        Some(build_vctree_node(
            g, next, safe.clone(), safe_count, next_fails, f, k, nodes,
        ))
    } else {
        None
    };

    let one = if safe_count < k * (k + 1) {
        let mut next = wg.clone();
        let mut next_safe = safe;
        next_safe.insert(edge);
        // A vertex incident to more than k safe edges is in every small
        // cover of the safe subgraph; delete it before branching further
        // (smallest such vertex first, until none remains).
        while let Some(w) =
            (0..next.vertex_count()).find(|&w| next.incident_count_in(w, &next_safe) > k)
        {
            next.delete_vertex(w);
        }
        Some(build_vctree_node(
            g,
            next,
            next_safe,
            safe_count + 1,
            fails,
            f,
            k,
            nodes,
        ))
    } else {
        None
    };

    nodes.push(VcTreeNode::Branch { edge, zero, one });
    nodes.len() - 1
}

impl VcTreeOracle {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// The root is the last node pushed.
    fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Maximum root-leaf depth.
    pub fn depth(&self) -> usize {
        fn depth_of(nodes: &[VcTreeNode], id: usize) -> usize {
            match &nodes[id] {
                VcTreeNode::Leaf { .. } => 0,
                VcTreeNode::Branch { zero, one, .. } => {
                    let z = zero.map(|z| 1 + depth_of(nodes, z)).unwrap_or(0);
                    let o = one.map(|o| 1 + depth_of(nodes, o)).unwrap_or(0);
                    z.max(o)
                }
            }
        }
        depth_of(&self.nodes, self.root())
    }

    /// Walks the decision path for `F` and returns the leaf answer.
    pub fn query(&self, fails: &FailureSet) -> Result<bool> {
        if fails.len() > self.f {
            return Err(Error::CapacityExceeded {
                got: fails.len(),
                capacity: self.f,
            });
        }
        let mut cur = self.root();
        loop {
            match &self.nodes[cur] {
                VcTreeNode::Leaf { yes } => return Ok(*yes),
                VcTreeNode::Branch { edge, zero, one } => {
                    if fails.contains(*edge) {
                        cur = zero.expect(
                            "0-arc missing implies the failure budget was spent on F itself",
                        );
                    } else {
                        match one {
                            Some(id) => cur = *id,
                            // safe budget exhausted during the build: any
                            // small cover would have emptied the graph
                            None => return Ok(false),
                        }
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Kernel-plus-solver oracle

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VcKernelOracle {
    pub kernel: VcKernel,
    pub edge_count: usize,
}

pub fn build_kernel_oracle(g: &Graph, f: usize, k: usize) -> Result<VcKernelOracle> {
    Ok(VcKernelOracle {
        kernel: vc_kernel(g, f, k)?,
        edge_count: g.edge_count(),
    })
}

impl VcKernelOracle {
    pub fn query(&self, fails: &FailureSet) -> Result<bool> {
        if fails.len() > self.kernel.f {
            return Err(Error::CapacityExceeded {
                got: fails.len(),
                capacity: self.kernel.f,
            });
        }
        Ok(self.kernel.decide(fails))
    }
}
