//! Exhaustive reference oracles that every data structure in this crate is
//! tested against. Each routine recomputes its answer from scratch on the
//! failed graph; none of them share code with the structures they check.
//!
//! All routines refuse instances above the configured caps instead of
//! silently taking forever.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FailureSet, Graph};

/// Hard caps for the reference oracles.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    pub max_n: usize,
    pub max_m: usize,
    pub max_f: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_n: 12,
            max_m: 16,
            max_f: 3,
        }
    }
}

impl Caps {
    pub fn check(&self, g: &Graph, f: usize) -> Result<()> {
        if g.vertex_count() > self.max_n {
            return Err(Error::CapViolation {
                what: "reference-oracle vertex count",
                got: g.vertex_count() as u64,
                cap: self.max_n as u64,
            });
        }
        if g.edge_count() > self.max_m {
            return Err(Error::CapViolation {
                what: "reference-oracle edge count",
                got: g.edge_count() as u64,
                cap: self.max_m as u64,
            });
        }
        if f > self.max_f {
            return Err(Error::CapViolation {
                what: "reference-oracle failure bound",
                got: f as u64,
                cap: self.max_f as u64,
            });
        }
        Ok(())
    }
}

/// Does `g - F` contain a simple path on exactly `k` vertices?
pub fn bf_kpath(g: &Graph, fails: &FailureSet, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    let n = g.vertex_count();
    if k > n {
        return false;
    }
    if k == 1 {
        return n >= 1;
    }
    let mut visited = vec![false; n];
    for start in 0..n {
        visited[start] = true;
        if kpath_dfs(g, fails, start, 1, k, &mut visited) {
            return true;
        }
        visited[start] = false;
    }
    false
}

fn kpath_dfs(
    g: &Graph,
    fails: &FailureSet,
    cur: usize,
    len: usize,
    k: usize,
    visited: &mut [bool],
) -> bool {
    if len == k {
        return true;
    }
    for &(w, e) in g.out_edges(cur) {
        if visited[w] || fails.contains(e) {
            continue;
        }
        visited[w] = true;
        if kpath_dfs(g, fails, w, len + 1, k, visited) {
            return true;
        }
        visited[w] = false;
    }
    false
}

/// Does `g - F` have a vertex cover of size at most `k`? Decided by
/// enumerating all vertex subsets of size up to `k` (edges are covered when
/// either endpoint is chosen, regardless of direction).
pub fn bf_vc(g: &Graph, fails: &FailureSet, k: usize) -> bool {
    let n = g.vertex_count();
    let surviving: Vec<(usize, usize)> = g
        .edge_list()
        .iter()
        .enumerate()
        .filter(|(i, _)| !fails.contains(EdgeId(*i)))
        .map(|(_, &e)| e)
        .collect();
    if surviving.is_empty() {
        return true;
    }
    if k >= n {
        return true;
    }
    assert!(n <= 20, "subset enumeration supports at most 20 vertices");
    for mask in 0u32..(1 << n) {
        if (mask.count_ones() as usize) > k {
            continue;
        }
        if surviving
            .iter()
            .all(|&(u, v)| mask & (1 << u) != 0 || mask & (1 << v) != 0)
        {
            return true;
        }
    }
    false
}

/// BFS distance from `s` to `t` in `g - F`; `None` when disconnected.
pub fn bf_dist(g: &Graph, fails: &FailureSet, s: usize, t: usize) -> Option<usize> {
    bf_all_dist(g, fails, s)[t]
}

/// BFS distances from `s` to every vertex in `g - F`.
pub fn bf_all_dist(g: &Graph, fails: &FailureSet, s: usize) -> Vec<Option<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    dist[s] = Some(0);
    let mut queue = VecDeque::new();
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        let next = dist[u].unwrap() + 1;
        for &(w, e) in g.out_edges(u) {
            if fails.contains(e) || dist[w].is_some() {
                continue;
            }
            dist[w] = Some(next);
            queue.push_back(w);
        }
    }
    dist
}

/// Is `d(s, v, g - F)` finite and at most `d(s, v, g) + k`?
pub fn bf_detour(g: &Graph, s: usize, v: usize, fails: &FailureSet, k: usize) -> bool {
    let base = bf_dist(g, &FailureSet::new(0), s, v);
    let failed = bf_dist(g, fails, s, v);
    match (failed, base) {
        (Some(df), Some(d0)) => df <= d0 + k,
        // removing edges cannot create reachability, so failed is None here
        _ => false,
    }
}

/// Is there an `s -> v` walk in `g - F` whose positive detour signature
/// (the positive values of `1 + level(a) - level(b)` per edge, in walk
/// order) equals `y`? Walks with that signature have length exactly
/// `level(v) + sum(y)`, so the DFS below is finite; it prunes any prefix
/// whose signature stops being a prefix of `y`.
pub fn bf_signature_walk(
    g: &Graph,
    fails: &FailureSet,
    s: usize,
    v: usize,
    level: &[Option<usize>],
    y: &[usize],
) -> bool {
    let Some(lv) = level[v] else { return false };
    if level[s] != Some(0) {
        return false;
    }
    let target_len = lv + y.iter().sum::<usize>();
    signature_dfs(g, fails, s, v, level, y, 0, 0, target_len)
}

#[allow(clippy::too_many_arguments)]
fn signature_dfs(
    g: &Graph,
    fails: &FailureSet,
    cur: usize,
    v: usize,
    level: &[Option<usize>],
    y: &[usize],
    matched: usize,
    len: usize,
    target_len: usize,
) -> bool {
    if len == target_len {
        return cur == v && matched == y.len();
    }
    let Some(lc) = level[cur] else { return false };
    for &(w, e) in g.out_edges(cur) {
        if fails.contains(e) {
            continue;
        }
        let Some(lw) = level[w] else { continue };
        let x = 1 + lc as isize - lw as isize;
        debug_assert!(x >= 0, "levels violate the BFS triangle property");
        let x = x as usize;
        let next_matched = if x == 0 {
            matched
        } else if matched < y.len() && y[matched] == x {
            matched + 1
        } else {
            continue;
        };
        if signature_dfs(g, fails, w, v, level, y, next_matched, len + 1, target_len) {
            return true;
        }
    }
    false
}

/// All failure sets of size `0..=f` over edge ids `0..m`, ordered by size
/// and then lexicographically.
pub fn enumerate_failure_sets(m: usize, f: usize) -> Vec<Vec<EdgeId>> {
    let mut out = vec![vec![]];
    let mut current: Vec<Vec<EdgeId>> = vec![vec![]];
    for _ in 0..f.min(m) {
        let mut next = Vec::new();
        for set in &current {
            let start = set.last().map_or(0, |e| e.0 + 1);
            for id in start..m {
                let mut bigger = set.clone();
                bigger.push(EdgeId(id));
                next.push(bigger);
            }
        }
        out.extend(next.iter().cloned());
        current = next;
    }
    out
}

/// Number of failure sets [`enumerate_failure_sets`] would produce.
pub fn count_failure_sets(m: u64, f: u64) -> u64 {
    let mut total = 1u64; // the empty set
    let mut binom = 1u64;
    for i in 1..=f.min(m) {
        binom = binom.saturating_mul(m - i + 1) / i;
        total = total.saturating_add(binom);
    }
    total
}

/// Outcome of a differential sweep.
#[derive(Debug, Clone, Default)]
pub struct SweepReport {
    pub instances: usize,
    pub queries: usize,
    pub mismatches: usize,
    /// Human-readable descriptions of the first few mismatches.
    pub samples: Vec<String>,
    /// Free-form per-kind statistics (false-negative rates etc.).
    pub notes: Vec<String>,
}

impl SweepReport {
    pub fn record_mismatch(&mut self, desc: String) {
        self.mismatches += 1;
        if self.samples.len() < 10 {
            self.samples.push(desc);
        }
    }

    pub fn merge(&mut self, other: SweepReport) {
        self.instances += other.instances;
        self.queries += other.queries;
        self.mismatches += other.mismatches;
        for s in other.samples {
            if self.samples.len() < 10 {
                self.samples.push(s);
            }
        }
        self.notes.extend(other.notes);
    }
}
