//! Detection of simple paths on exactly `k` vertices, the subroutine both
//! k-path oracles are built from.
//!
//! Two engines are provided: an exhaustive DFS that is exact, and color
//! coding with enough repetitions to make the one-sided miss probability
//! negligible. The oracles only depend on the [`find_k_path`] contract, so
//! the engine can be swapped without touching them.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeView};

/// A simple path on exactly `k` vertices (`k - 1` edges).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPath {
    /// Vertices in path order; all distinct.
    pub vertices: Vec<usize>,
    /// The edges along the path, in path order.
    pub edges: Vec<EdgeId>,
}

impl KPath {
    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_set(&self) -> HashSet<EdgeId> {
        self.edges.iter().copied().collect()
    }

    /// Edge ids sorted ascending; used as a canonical dedup key.
    pub fn sorted_edges(&self) -> Vec<EdgeId> {
        let mut v = self.edges.clone();
        v.sort_unstable();
        v
    }

    /// Checks the path against a view: distinct vertices, consecutive
    /// vertices joined by the listed edges, every edge present in the view.
    pub fn validate<V: EdgeView>(&self, view: &V) -> Result<()> {
        let k = self.vertices.len();
        if k == 0 {
            return Err(Error::InvalidArgument("empty path".into()));
        }
        if self.edges.len() + 1 != k {
            return Err(Error::InvalidArgument(format!(
                "path on {k} vertices must have {} edges, has {}",
                k - 1,
                self.edges.len()
            )));
        }
        let distinct: HashSet<usize> = self.vertices.iter().copied().collect();
        if distinct.len() != k {
            return Err(Error::InvalidArgument("repeated vertex in path".into()));
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if !view.contains_edge(e) {
                return Err(Error::InvalidArgument(format!(
                    "edge {e} not present in the graph view"
                )));
            }
            let (a, b) = view.endpoints(e);
            let (u, v) = (self.vertices[i], self.vertices[i + 1]);
            let ok = (a, b) == (u, v) || (!view.is_directed() && (a, b) == (v, u));
            if !ok {
                return Err(Error::InvalidArgument(format!(
                    "edge {e} does not join vertices {u} and {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Engine selection for [`find_k_path`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolverMode {
    /// Exhaustive DFS for small `k` or `n`, color coding otherwise.
    Auto,
    /// Always exhaustive DFS (exact; exponential in the worst case).
    Exhaustive,
    /// Always color coding (one-sided error).
    ColorCoding,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SolverConfig {
    pub mode: SolverMode,
    pub seed: u64,
    /// Scale `c` of the repetition count `ceil(e^k * c * ln n)`. The default
    /// of 3 pushes the per-call miss probability below `n^-3`.
    pub rep_scale: f64,
    /// `Auto` uses exhaustive search when `k <= auto_exhaustive_k`
    /// or `n <= auto_exhaustive_n`.
    pub auto_exhaustive_k: usize,
    pub auto_exhaustive_n: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            mode: SolverMode::Auto,
            seed: 0,
            rep_scale: 3.0,
            auto_exhaustive_k: 8,
            auto_exhaustive_n: 14,
        }
    }
}

impl SolverConfig {
    pub fn exhaustive() -> Self {
        SolverConfig {
            mode: SolverMode::Exhaustive,
            ..Default::default()
        }
    }

    pub fn color_coding(seed: u64) -> Self {
        SolverConfig {
            mode: SolverMode::ColorCoding,
            seed,
            ..Default::default()
        }
    }

    /// Same config with a different seed; used to derive independent
    /// per-sample streams.
    pub fn with_seed(self, seed: u64) -> Self {
        SolverConfig { seed, ..self }
    }

    fn is_exhaustive_for(&self, k: usize, n: usize) -> bool {
        match self.mode {
            SolverMode::Exhaustive => true,
            SolverMode::ColorCoding => false,
            SolverMode::Auto => k <= self.auto_exhaustive_k || n <= self.auto_exhaustive_n,
        }
    }

    /// Whether a call with these parameters is exact (no false negatives).
    pub fn is_exact_for(&self, k: usize, n: usize) -> bool {
        self.is_exhaustive_for(k, n)
    }
}

/// Finds a simple path on exactly `k` vertices, or reports that none was
/// found. Exact when the exhaustive engine applies; otherwise misses are
/// one-sided and vanishingly rare. Any returned path is valid in the view.
pub fn find_k_path<V: EdgeView>(view: &V, k: usize, config: &SolverConfig) -> Result<Option<KPath>> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = view.vertex_count();
    if n == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok(Some(KPath {
            vertices: vec![0],
            edges: vec![],
        }));
    }
    if k > n {
        return Ok(None);
    }
    let found = if config.is_exhaustive_for(k, n) {
        exhaustive_search(view, k)
    } else {
        color_coding_search(view, k, config)
    };
    if let Some(p) = &found {
        debug_assert!(p.validate(view).is_ok());
    }
    Ok(found)
}

/// Exhaustive DFS over simple paths; exact. Refuses graphs above the vertex
/// cap so accidental blowups fail loudly instead of hanging.
pub fn brute_force_k_path<V: EdgeView>(
    view: &V,
    k: usize,
    max_n: usize,
) -> Result<Option<KPath>> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let n = view.vertex_count();
    if n > max_n {
        return Err(Error::CapViolation {
            what: "brute-force k-path vertex count",
            got: n as u64,
            cap: max_n as u64,
        });
    }
    if n == 0 {
        return Ok(None);
    }
    if k == 1 {
        return Ok(Some(KPath {
            vertices: vec![0],
            edges: vec![],
        }));
    }
    Ok(exhaustive_search(view, k))
}

/// Default vertex cap for [`brute_force_k_path`].
pub const BRUTE_FORCE_DEFAULT_CAP: usize = 16;

fn exhaustive_search<V: EdgeView>(view: &V, k: usize) -> Option<KPath> {
    let n = view.vertex_count();
    let mut visited = vec![false; n];
    let mut verts = Vec::with_capacity(k);
    let mut edges = Vec::with_capacity(k - 1);
    for start in 0..n {
        visited[start] = true;
        verts.push(start);
        if dfs(view, k, &mut visited, &mut verts, &mut edges) {
            return Some(KPath {
                vertices: verts,
                edges,
            });
        }
        verts.pop();
        visited[start] = false;
    }
    None
}

fn dfs<V: EdgeView>(
    view: &V,
    k: usize,
    visited: &mut [bool],
    verts: &mut Vec<usize>,
    edges: &mut Vec<EdgeId>,
) -> bool {
    if verts.len() == k {
        return true;
    }
    let cur = *verts.last().unwrap();
    for (w, e) in view.out_edges(cur) {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        verts.push(w);
        edges.push(e);
        if dfs(view, k, visited, verts, edges) {
            return true;
        }
        edges.pop();
        verts.pop();
        visited[w] = false;
    }
    false
}

/// Repetitions for color coding: `ceil(e^k * c * ln n)`.
fn repetitions(k: usize, n: usize, scale: f64) -> u64 {
    let ln_n = (n.max(2) as f64).ln();
    ((k as f64).exp() * scale * ln_n).ceil() as u64
}

fn color_coding_search<V: EdgeView>(view: &V, k: usize, config: &SolverConfig) -> Option<KPath> {
    debug_assert!(k >= 2);
    let n = view.vertex_count();
    let reps = repetitions(k, n, config.rep_scale);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut colors = vec![0u32; n];
    for _ in 0..reps {
        for c in colors.iter_mut() {
            *c = rng.gen_range(0..k as u32);
        }
        if let Some(path) = colorful_path(view, k, &colors) {
            return Some(path);
        }
    }
    None
}

/// DP over color subsets: `masks[v]` holds the color sets of colorful paths
/// ending at `v`. Reconstructs an actual path when a full set appears.
fn colorful_path<V: EdgeView>(view: &V, k: usize, colors: &[u32]) -> Option<KPath> {
    let n = view.vertex_count();
    let full: u32 = (1 << k) - 1;
    // reach[i][v]: masks of size i+1 for colorful paths of i+1 vertices ending at v
    let mut layers: Vec<Vec<HashSet<u32>>> = Vec::with_capacity(k);
    let mut first = vec![HashSet::new(); n];
    for v in 0..n {
        first[v].insert(1u32 << colors[v]);
    }
    layers.push(first);
    for i in 1..k {
        let mut next = vec![HashSet::new(); n];
        let prev = &layers[i - 1];
        for (u, masks) in prev.iter().enumerate() {
            if masks.is_empty() {
                continue;
            }
            for (w, _) in view.out_edges(u) {
                let bit = 1u32 << colors[w];
                for &mask in masks {
                    if mask & bit == 0 {
                        next[w].insert(mask | bit);
                    }
                }
            }
        }
        layers.push(next);
    }
    let end = (0..n).find(|&v| layers[k - 1][v].contains(&full))?;
    // Walk backwards through the DP, preferring the smallest edge id so
    // reconstruction is deterministic for a fixed coloring.
    let mut verts = vec![end];
    let mut edges = Vec::with_capacity(k - 1);
    let mut mask = full;
    let mut cur = end;
    for i in (1..k).rev() {
        let without = mask & !(1 << colors[cur]);
        let mut best: Option<(EdgeId, usize)> = None;
        for (u, e) in view.in_edges(cur) {
            if layers[i - 1][u].contains(&without) && best.is_none_or(|(be, _)| e < be) {
                best = Some((e, u));
            }
        }
        let (e, u) = best.expect("DP invariant: predecessor exists");
        verts.push(u);
        edges.push(e);
        mask = without;
        cur = u;
    }
    verts.reverse();
    edges.reverse();
    Some(KPath {
        vertices: verts,
        edges,
    })
}
