//! Bounded-stretch fault-tolerant distance preservation.
//!
//! Replacement paths are classified by their detour signature: per edge
//! `(a, b)` the value `1 + level(a) - level(b)` (levels from a BFS of the
//! intact graph), restricted to its positive entries. The signature's sum
//! is exactly the distance increase, so signatures of interest are the
//! positive-integer sequences with sum at most `k`. Each signature `Y`
//! yields a layered auxiliary graph whose `s -> v` reachability (with
//! failures lifted through the projection) matches the existence of a path
//! with that signature; unions of per-failure-set reachability trees,
//! projected back, form the preserving subgraph, and per-`Y` reachability
//! oracles answer detour-decision queries.

mod aux_graph;
mod detour;

pub use aux_graph::{build_aux_graph, AuxGraph};
pub use detour::{
    build_detour_oracle, build_detour_oracle_seq, DetourBackend, DetourEntry, DetourOracle,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{bfs_levels, EdgeId, FailureSet, Graph};
use crate::ground_truth::{count_failure_sets, enumerate_failure_sets};

/// A sequence of positive integers; detour signatures sum to at most `k`.
/// The empty sequence is admitted and stands for "distance unchanged".
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LevelSequence(Vec<usize>);

impl LevelSequence {
    pub fn new(parts: Vec<usize>) -> Result<LevelSequence> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "level sequences contain positive entries only".into(),
            ));
        }
        Ok(LevelSequence(parts))
    }

    pub fn empty() -> LevelSequence {
        LevelSequence(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of entries `t` (= number of extra layers).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

/// All `2^k` level sequences with sum at most `k` (the empty one plus the
/// `2^k - 1` nonempty compositions), ordered by total and then
/// lexicographically.
pub fn enumerate_y(k: usize) -> Vec<LevelSequence> {
    let mut out = vec![LevelSequence::empty()];
    for total in 1..=k {
        let mut prefix = Vec::new();
        compositions(total, &mut prefix, &mut out);
    }
    out
}

fn compositions(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<LevelSequence>) {
    if rest == 0 {
        out.push(LevelSequence(prefix.clone()));
        return;
    }
    for first in 1..=rest {
        prefix.push(first);
        compositions(rest - first, prefix, out);
        prefix.pop();
    }
}

/// Detour signature of a walk: `X` has one entry `1 + level(a) - level(b)`
/// per step, and `X+` keeps the positive ones. Requires finite levels along
/// the walk (which BFS levels guarantee for any walk out of the source).
pub fn x_sequence(
    walk: &[usize],
    level: &[Option<usize>],
) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut xs = Vec::new();
    for step in walk.windows(2) {
        let (a, b) = (step[0], step[1]);
        let (Some(la), Some(lb)) = (level[a], level[b]) else {
            return Err(Error::InvalidArgument(format!(
                "walk visits a vertex with infinite level ({a} -> {b})"
            )));
        };
        let x = 1 + la as isize - lb as isize;
        if x < 0 {
            return Err(Error::InvalidArgument(format!(
                "levels are not BFS levels: edge ({a}, {b}) drops {} levels",
                lb as isize - la as isize
            )));
        }
        xs.push(x as usize);
    }
    let positive = xs.iter().copied().filter(|&x| x > 0).collect();
    Ok((xs, positive))
}

/// Caps for the brute-force preserver builder, which enumerates every
/// failure set of size up to `f`.
#[derive(Debug, Clone, Copy)]
pub struct PreserverCaps {
    pub max_edges: usize,
    pub max_failure_sets: u64,
}

impl Default for PreserverCaps {
    fn default() -> Self {
        PreserverCaps {
            max_edges: 64,
            max_failure_sets: 2_000_000,
        }
    }
}

/// Per-signature build statistics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct YStat {
    pub y: LevelSequence,
    pub aux_vertices: usize,
    pub aux_arcs: usize,
    pub kept_edges: usize,
}

/// A subgraph (as a kept-edge set) preserving every `s -> v` distance that
/// grows by at most `k` under any failure set of size at most `f`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Preserver {
    /// Kept edges, sorted ascending.
    pub kept: Vec<EdgeId>,
    pub s: usize,
    pub f: usize,
    pub k: usize,
    pub edge_count: usize,
    pub per_y: Vec<YStat>,
}

/// Reference size formula `2^(fk+f+k) * k * n` reported alongside builds;
/// the exhaustive builder is exact but carries no sparsity guarantee of its
/// own.
pub fn preserver_size_formula(f: usize, k: usize, n: usize) -> u64 {
    2u64.saturating_pow((f * k + f + k) as u32)
        .saturating_mul(k.max(1) as u64)
        .saturating_mul(n as u64)
}

/// Builds the preserver: for every signature `Y` and every failure set
/// `|F| <= f`, one reachability tree of the auxiliary graph minus the
/// lifted failures is kept; everything projects back to original edges.
pub fn build_preserver(g: &Graph, s: usize, f: usize, k: usize) -> Result<Preserver> {
    build_preserver_caps(g, s, f, k, PreserverCaps::default(), false)
}

/// Sequential reference build with identical output, for benchmarks.
pub fn build_preserver_seq(g: &Graph, s: usize, f: usize, k: usize) -> Result<Preserver> {
    build_preserver_caps(g, s, f, k, PreserverCaps::default(), true)
}

pub fn build_preserver_caps(
    g: &Graph,
    s: usize,
    f: usize,
    k: usize,
    caps: PreserverCaps,
    force_seq: bool,
) -> Result<Preserver> {
    let m = g.edge_count();
    if m > caps.max_edges {
        return Err(Error::CapViolation {
            what: "preserver edge count",
            got: m as u64,
            cap: caps.max_edges as u64,
        });
    }
    let sets = count_failure_sets(m as u64, f as u64);
    if sets > caps.max_failure_sets {
        return Err(Error::CapViolation {
            what: "preserver failure-set count",
            got: sets,
            cap: caps.max_failure_sets,
        });
    }
    let levels = bfs_levels(g, s);
    let ys = enumerate_y(k);
    let failure_sets = enumerate_failure_sets(m, f);

    let per_y_job = |i: usize| {
        let aux = aux_graph::build_aux_graph_with_levels(g, s, &ys[i], &levels.level);
        let mut kept_arcs: std::collections::HashSet<usize> = std::collections::HashSet::new();
        for ids in &failure_sets {
            let fails = FailureSet::from_edges(ids.iter().copied(), f)
                .expect("enumerated sets respect f");
            for arc in aux.reach_tree_minus(&fails).into_iter().flatten() {
                kept_arcs.insert(arc);
            }
        }
        let mut kept: Vec<EdgeId> = kept_arcs.iter().map(|&a| aux.phi[a]).collect();
        kept.sort_unstable();
        kept.dedup();
        let stat = YStat {
            y: ys[i].clone(),
            aux_vertices: aux.vertex_count(),
            aux_arcs: aux.edges.len(),
            kept_edges: kept.len(),
        };
        (kept, stat)
    };

    let results: Vec<(Vec<EdgeId>, YStat)> = if force_seq {
        exec::map_indexed_seq(ys.len(), per_y_job)
    } else {
        exec::map_indexed(ys.len(), per_y_job)
    };

    let mut kept: Vec<EdgeId> = Vec::new();
    let mut per_y = Vec::with_capacity(results.len());
    for (edges, stat) in results {
        kept.extend(edges);
        per_y.push(stat);
    }
    kept.sort_unstable();
    kept.dedup();
    Ok(Preserver {
        kept,
        s,
        f,
        k,
        edge_count: m,
        per_y,
    })
}

/// One distance-preservation violation.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Violation {
    pub v: usize,
    pub fails: Vec<EdgeId>,
    pub expected: usize,
    pub got: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PreserverReport {
    pub checked_pairs: usize,
    pub violations: Vec<Violation>,
    pub kept_edges: usize,
    /// The reference size formula for comparison (informational).
    pub size_formula: u64,
}

/// Exhaustively checks the preserver property of `kept` over every vertex
/// and every failure set of size at most `f`.
pub fn verify_preserver(
    g: &Graph,
    s: usize,
    f: usize,
    k: usize,
    kept: &[EdgeId],
) -> PreserverReport {
    let n = g.vertex_count();
    let m = g.edge_count();
    let base = bfs_levels(g, s);
    let kept_set: std::collections::HashSet<EdgeId> = kept.iter().copied().collect();
    let dropped: Vec<EdgeId> = (0..m).map(EdgeId).filter(|e| !kept_set.contains(e)).collect();
    let mut report = PreserverReport {
        checked_pairs: 0,
        violations: Vec::new(),
        kept_edges: kept.len(),
        size_formula: preserver_size_formula(f, k, n),
    };
    for ids in enumerate_failure_sets(m, f) {
        let fails = FailureSet::from_edges(ids.iter().copied(), f).expect("within f");
        let in_g = bfs_levels(&g.minus(&fails), s);
        let mut removed: std::collections::HashSet<EdgeId> = dropped.iter().copied().collect();
        removed.extend(ids.iter().copied());
        let in_kept = bfs_levels(&g.without(&removed), s);
        for v in 0..n {
            let (Some(dv), Some(d0)) = (in_g.level[v], base.level[v]) else {
                continue;
            };
            if dv > d0 + k {
                continue;
            }
            report.checked_pairs += 1;
            if in_kept.level[v] != Some(dv) {
                if report.violations.len() < 20 {
                    report.violations.push(Violation {
                        v,
                        fails: ids.clone(),
                        expected: dv,
                        got: in_kept.level[v],
                    });
                } else {
                    report.violations.push(Violation {
                        v,
                        fails: Vec::new(),
                        expected: dv,
                        got: in_kept.level[v],
                    });
                }
            }
        }
    }
    report
}
