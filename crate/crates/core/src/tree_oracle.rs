//! Fault-tolerant lookup tree for the k-path problem: preprocess once,
//! answer "does `G - F` contain a k-path" for any `|F| <= f`, in time
//! depending only on `f` and `k`.
//!
//! Every node stores a k-path of `G - S`, where `S` is the set of edges on
//! the node's root path (or nothing, marking that `G - S` has no k-path).
//! An internal node has one child per edge of its stored path. Queries walk
//! down along failed edges; the first node whose path avoids `F` yields a
//! witness, and an empty node proves absence.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FailureSet, Graph};
use crate::kpath::{find_k_path, KPath, SolverConfig};

/// How path-vs-failure intersections are computed at query time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QueryMode {
    /// Each node keeps a membership structure over its path edges; the
    /// failed edges are checked against it (`O(f)` per node).
    PathDictionary,
    /// A membership structure over `F` is built once per query and each
    /// node's path edges are scanned against it (`O(k)` per node).
    FailureDictionary,
}

impl QueryMode {
    /// Picks the mode minimizing the query bound: walking costs `O(f)`
    /// nodes either way, with `O(f)` per node for path dictionaries versus
    /// `O(log f + k)` for a failure dictionary.
    pub fn auto(f: usize, k: usize) -> QueryMode {
        let log_f = (f.max(1) as f64).log2();
        if log_f + k as f64 <= f as f64 {
            QueryMode::FailureDictionary
        } else {
            QueryMode::PathDictionary
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeNode {
    /// A k-path of `G - S`; `None` encodes that none exists.
    pub path: Option<KPath>,
    /// Membership structure over `path`'s edges.
    pub edge_set: HashSet<EdgeId>,
    /// Children keyed by the failed edge they account for, in increasing
    /// edge order. Keys are always edges of `path`.
    pub children: Vec<(EdgeId, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FtLookupTree {
    pub nodes: Vec<TreeNode>,
    pub f: usize,
    pub k: usize,
    pub mode: QueryMode,
    /// Edge-id bound of the source graph, for failure-list validation.
    pub edge_count: usize,
    /// Whether every solver call during the build was exact. When false,
    /// empty nodes may be false negatives.
    pub exact: bool,
}

/// Upper bound on the node count: `sum_{i=0..f} (k-1)^i`.
pub fn tree_size_bound(f: usize, k: usize) -> u64 {
    let base = k.saturating_sub(1) as u64;
    let mut total = 0u64;
    let mut pow = 1u64;
    for _ in 0..=f {
        total = total.saturating_add(pow);
        pow = pow.saturating_mul(base);
    }
    total
}

/// Builds the lookup tree for `g` with sensitivity `f` and parameter `k`.
pub fn build_tree_oracle(
    g: &Graph,
    f: usize,
    k: usize,
    config: &SolverConfig,
) -> Result<FtLookupTree> {
    build_tree_oracle_with_mode(g, f, k, config, QueryMode::auto(f, k))
}

pub fn build_tree_oracle_with_mode(
    g: &Graph,
    f: usize,
    k: usize,
    config: &SolverConfig,
    mode: QueryMode,
) -> Result<FtLookupTree> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let exact = config.is_exact_for(k, g.vertex_count());
    let mut nodes = Vec::new();
    let root_path = find_k_path(g, k, config)?;
    nodes.push(new_node(root_path));
    // Depth-first expansion; `removed` is the edge set S of the node.
    let mut stack: Vec<(usize, Vec<EdgeId>)> = vec![(0, Vec::new())];
    while let Some((id, removed)) = stack.pop() {
        if removed.len() >= f {
            continue;
        }
        let Some(path) = nodes[id].path.clone() else {
            continue;
        };
        for &e in &path.edges {
            let mut child_removed = removed.clone();
            child_removed.push(e);
            let removed_set: HashSet<EdgeId> = child_removed.iter().copied().collect();
            let child_path = find_k_path(&g.without(&removed_set), k, config)?;
            debug_assert!(child_path
                .as_ref()
                .is_none_or(|p| p.edges.iter().all(|pe| !removed_set.contains(pe))));
            let child_id = nodes.len();
            nodes.push(new_node(child_path));
            nodes[id].children.push((e, child_id));
            stack.push((child_id, child_removed));
        }
        nodes[id].children.sort_unstable_by_key(|&(e, _)| e);
    }
    Ok(FtLookupTree {
        nodes,
        f,
        k,
        mode,
        edge_count: g.edge_count(),
        exact,
    })
}

fn new_node(path: Option<KPath>) -> TreeNode {
    let edge_set = path.as_ref().map(KPath::edge_set).unwrap_or_default();
    TreeNode {
        path,
        edge_set,
        children: Vec::new(),
    }
}

impl FtLookupTree {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Answers whether `G - F` contains a k-path, returning a witness path
    /// when it does. Exact whenever the build was exact.
    pub fn query(&self, fails: &FailureSet) -> Result<Option<&KPath>> {
        if fails.len() > self.f {
            return Err(Error::CapacityExceeded {
                got: fails.len(),
                capacity: self.f,
            });
        }
        let mut cur = 0usize;
        loop {
            let node = &self.nodes[cur];
            let Some(path) = &node.path else {
                return Ok(None);
            };
            // Smallest failed edge on the stored path, or a clean witness.
            let hit = match self.mode {
                QueryMode::PathDictionary => fails
                    .sorted()
                    .into_iter()
                    .find(|e| node.edge_set.contains(e)),
                QueryMode::FailureDictionary => {
                    let mut best: Option<EdgeId> = None;
                    for &e in &path.edges {
                        if fails.contains(e) && best.is_none_or(|b| e < b) {
                            best = Some(e);
                        }
                    }
                    best
                }
            };
            match hit {
                None => return Ok(Some(path)),
                Some(e) => {
                    let child = node
                        .children
                        .iter()
                        .find(|&&(key, _)| key == e)
                        .map(|&(_, id)| id)
                        .expect("child exists for every stored-path edge above depth f");
                    cur = child;
                }
            }
        }
    }
}
