//! Seeded instance generators used by the CLI, the verification sweeps, and
//! the test suite.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Uniform simple graph with exactly `m` edges (no loops, no duplicates).
pub fn gnm(n: usize, m: usize, directed: bool, seed: u64) -> Result<Graph> {
    let max = if directed {
        n.saturating_mul(n.saturating_sub(1))
    } else {
        n * n.saturating_sub(1) / 2
    };
    if m > max {
        return Err(Error::InvalidArgument(format!(
            "m = {m} exceeds the {max} possible edges for n = {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all: Vec<(usize, usize)> = Vec::with_capacity(max);
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            if directed || u < v {
                all.push((u, v));
            }
        }
    }
    all.shuffle(&mut rng);
    all.truncate(m);
    all.sort_unstable();
    Graph::new(n, directed, all)
}

/// Layered DAG rooted at vertex 0. Each vertex in layer `j + 1` gets one
/// parent in layer `j` plus extra same-layer-gap parents with probability
/// `extra_prob`; skip edges jumping two layers appear with `skip_prob`,
/// which creates alternative routes of different lengths.
pub fn layered_dag(
    layers: usize,
    width: usize,
    extra_prob: f64,
    skip_prob: f64,
    seed: u64,
) -> Result<Graph> {
    if layers == 0 || width == 0 {
        return Err(Error::InvalidArgument(
            "layered-dag needs at least one layer and positive width".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = 1 + layers * width;
    let vertex = |layer: usize, i: usize| {
        if layer == 0 {
            0
        } else {
            1 + (layer - 1) * width + i
        }
    };
    let layer_size = |layer: usize| if layer == 0 { 1 } else { width };
    let mut edges = Vec::new();
    for layer in 1..=layers {
        for i in 0..width {
            let v = vertex(layer, i);
            let p = rng.gen_range(0..layer_size(layer - 1));
            edges.push((vertex(layer - 1, p), v));
            for q in 0..layer_size(layer - 1) {
                if q != p && rng.gen_bool(extra_prob) {
                    edges.push((vertex(layer - 1, q), v));
                }
            }
            if layer >= 2 {
                for q in 0..layer_size(layer - 2) {
                    if rng.gen_bool(skip_prob) {
                        edges.push((vertex(layer - 2, q), v));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, true, edges)
}

/// `k + 1` disjoint stars with `f` leaves each (undirected). Star `i` has
/// its center at vertex `i * (f + 1)`; edges are laid out star by star.
pub fn star_forest(k: usize, f: usize) -> Graph {
    let stars = k + 1;
    let n = stars * (f + 1);
    let mut edges = Vec::with_capacity(stars * f);
    for s in 0..stars {
        let center = s * (f + 1);
        for l in 1..=f {
            edges.push((center, center + l));
        }
    }
    Graph::new(n, false, edges).expect("star forest is simple")
}

/// A 4-cycle with one pendant leaf attached to three of its vertices
/// (undirected, 7 vertices, 7 edges).
pub fn c4_pendant() -> Graph {
    let edges = vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5), (2, 6)];
    Graph::new(7, false, edges).expect("fixed instance is simple")
}

/// Single undirected star: one center, `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    star_forest(0, leaves)
}

/// Complete undirected graph on `n` vertices.
pub fn clique(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, false, edges).expect("clique is simple")
}
