//! Distance sensitivity oracle parameterized by a vertex cover.
//!
//! The oracle keeps a compressed graph `H` over the cover: cover-to-cover
//! edges survive as-is, and for each ordered cover pair the common
//! neighbors outside the cover either stay (when there are at most `f` of
//! them, with their real edges) or collapse into one virtual midpoint whose
//! edges can never fail, since at least `f + 1` parallel two-step routes
//! back it. Non-cover endpoints enter only through their cover adjacency,
//! stored separately. Queries run entirely on this data: the original graph
//! is not touched.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, FailureSet, Graph};

/// Vertex of the compressed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HVertex {
    /// A cover vertex (original id).
    Cover(usize),
    /// A kept common neighbor outside the cover (original id).
    Neighbor(usize),
    /// Virtual midpoint standing in for more than `f` common neighbors.
    Virtual,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VcDso {
    /// Cover vertices in increasing original id; `h` vertex `i` is
    /// `cover[i]` for `i < cover.len()`.
    pub cover: Vec<usize>,
    pub kinds: Vec<HVertex>,
    /// Out-adjacency of `H`: `(head, original edge)`; `None` marks a
    /// virtual (unfailable) edge. Symmetric for undirected inputs.
    pub h_adj: Vec<Vec<(usize, Option<EdgeId>)>>,
    /// For each non-cover vertex: surviving-candidate out-edges into the
    /// cover as `(h-vertex, original edge)`.
    pub cover_out: HashMap<usize, Vec<(usize, EdgeId)>>,
    /// In-edges from the cover (same as `cover_out` for undirected).
    pub cover_in: HashMap<usize, Vec<(usize, EdgeId)>>,
    pub f: usize,
    pub n: usize,
    /// Edge-id bound of the source graph, for failure-list validation.
    pub edge_count: usize,
    pub directed: bool,
}

/// Infinite distances are `None`.
pub type Distance = Option<usize>;

/// Builds the oracle for a given vertex cover. Fails if `cover` does not
/// cover every edge.
pub fn build_vc_dso(g: &Graph, cover: &[usize], f: usize) -> Result<VcDso> {
    let n = g.vertex_count();
    let mut in_cover = vec![false; n];
    for &c in cover {
        if c >= n {
            return Err(Error::InvalidArgument(format!(
                "cover vertex {c} out of range"
            )));
        }
        in_cover[c] = true;
    }
    for (i, &(u, v)) in g.edge_list().iter().enumerate() {
        if !in_cover[u] && !in_cover[v] {
            return Err(Error::NotACover {
                edge: i,
                tail: u,
                head: v,
            });
        }
    }
    let mut cover_sorted: Vec<usize> = cover.to_vec();
    cover_sorted.sort_unstable();
    cover_sorted.dedup();
    let h_index: HashMap<usize, usize> = cover_sorted
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();

    let mut kinds: Vec<HVertex> = cover_sorted.iter().map(|&c| HVertex::Cover(c)).collect();
    let mut h_adj: Vec<Vec<(usize, Option<EdgeId>)>> = vec![Vec::new(); cover_sorted.len()];
    let mut neighbor_ids: HashMap<usize, usize> = HashMap::new();

    // Cover adjacency of outside vertices, and edge lookup for H.
    let mut cover_out: HashMap<usize, Vec<(usize, EdgeId)>> = HashMap::new();
    let mut cover_in: HashMap<usize, Vec<(usize, EdgeId)>> = HashMap::new();
    // (outside vertex z, cover vertex c) -> (edge z->c, edge c->z)
    let mut z_out: HashMap<(usize, usize), EdgeId> = HashMap::new();
    let mut z_in: HashMap<(usize, usize), EdgeId> = HashMap::new();
    for (i, &(u, v)) in g.edge_list().iter().enumerate() {
        let e = EdgeId(i);
        if in_cover[u] && in_cover[v] {
            let (hu, hv) = (h_index[&u], h_index[&v]);
            h_adj[hu].push((hv, Some(e)));
            if !g.is_directed() {
                h_adj[hv].push((hu, Some(e)));
            }
            continue;
        }
        // exactly one endpoint is outside the cover
        let (z, c, z_is_tail) = if in_cover[v] {
            (u, v, true)
        } else {
            (v, u, false)
        };
        let hc = h_index[&c];
        if z_is_tail || !g.is_directed() {
            cover_out.entry(z).or_default().push((hc, e));
            z_out.insert((z, c), e);
        }
        if !z_is_tail || !g.is_directed() {
            cover_in.entry(z).or_default().push((hc, e));
            z_in.insert((z, c), e);
        }
    }

    // Common-neighbor compression per ordered cover pair.
    let pairs: Vec<(usize, usize)> = if g.is_directed() {
        let mut v = Vec::new();
        for &x in &cover_sorted {
            for &y in &cover_sorted {
                if x != y {
                    v.push((x, y));
                }
            }
        }
        v
    } else {
        let mut v = Vec::new();
        for (i, &x) in cover_sorted.iter().enumerate() {
            for &y in cover_sorted.iter().skip(i + 1) {
                v.push((x, y));
            }
        }
        v
    };
    for (x, y) in pairs {
        let (hx, hy) = (h_index[&x], h_index[&y]);
        let mut common: Vec<usize> = cover_out
            .iter()
            .filter_map(|(&z, _)| {
                let fwd = z_out.contains_key(&(z, y)) && z_in.contains_key(&(z, x));
                if fwd {
                    Some(z)
                } else {
                    None
                }
            })
            .collect();
        common.sort_unstable();
        if common.is_empty() {
            continue;
        }
        if common.len() <= f {
            for z in common {
                let hz = *neighbor_ids.entry(z).or_insert_with(|| {
                    kinds.push(HVertex::Neighbor(z));
                    h_adj.push(Vec::new());
                    kinds.len() - 1
                });
                let e_in = z_in[&(z, x)]; // x -> z
                let e_out = z_out[&(z, y)]; // z -> y
                push_unique(&mut h_adj[hx], (hz, Some(e_in)));
                push_unique(&mut h_adj[hz], (hy, Some(e_out)));
                if !g.is_directed() {
                    push_unique(&mut h_adj[hz], (hx, Some(e_in)));
                    push_unique(&mut h_adj[hy], (hz, Some(e_out)));
                }
            }
        } else {
            kinds.push(HVertex::Virtual);
            h_adj.push(Vec::new());
            let hz = kinds.len() - 1;
            h_adj[hx].push((hz, None));
            h_adj[hz].push((hy, None));
            if !g.is_directed() {
                h_adj[hz].push((hx, None));
                h_adj[hy].push((hz, None));
            }
        }
    }

    Ok(VcDso {
        cover: cover_sorted,
        kinds,
        h_adj,
        cover_out,
        cover_in,
        f,
        n,
        edge_count: g.edge_count(),
        directed: g.is_directed(),
    })
}

fn push_unique(list: &mut Vec<(usize, Option<EdgeId>)>, item: (usize, Option<EdgeId>)) {
    if !list.contains(&item) {
        list.push(item);
    }
}

impl VcDso {
    pub fn h_vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn h_edge_count(&self) -> usize {
        self.h_adj.iter().map(Vec::len).sum()
    }

    fn h_id(&self, v: usize) -> Option<usize> {
        self.cover.binary_search(&v).ok()
    }

    /// BFS inside `H - F`; only real edges can fail.
    fn h_distances(&self, from: usize, fails: &FailureSet) -> Vec<Distance> {
        let mut dist: Vec<Distance> = vec![None; self.kinds.len()];
        dist[from] = Some(0);
        let mut queue = VecDeque::new();
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            let next = dist[u].unwrap() + 1;
            for &(w, via) in &self.h_adj[u] {
                if let Some(e) = via {
                    if fails.contains(e) {
                        continue;
                    }
                }
                if dist[w].is_none() {
                    dist[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn surviving<'a>(
        map: &'a HashMap<usize, Vec<(usize, EdgeId)>>,
        v: usize,
        fails: &'a FailureSet,
    ) -> impl Iterator<Item = usize> + 'a {
        map.get(&v)
            .into_iter()
            .flatten()
            .filter(move |(_, e)| !fails.contains(*e))
            .map(|&(h, _)| h)
    }

    /// Distance from `u` to `v` in `G - F`, computed from the stored data
    /// only.
    pub fn query(&self, u: usize, v: usize, fails: &FailureSet) -> Result<Distance> {
        if fails.len() > self.f {
            return Err(Error::CapacityExceeded {
                got: fails.len(),
                capacity: self.f,
            });
        }
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "query vertices ({u}, {v}) out of range"
            )));
        }
        if u == v {
            return Ok(Some(0));
        }
        match (self.h_id(u), self.h_id(v)) {
            (Some(hu), Some(hv)) => Ok(self.h_distances(hu, fails)[hv]),
            (None, Some(hv)) => {
                let mut best: Distance = None;
                for hx in Self::surviving(&self.cover_out, u, fails) {
                    let d = self.h_distances(hx, fails)[hv];
                    best = min_dist(best, d.map(|d| d + 1));
                }
                Ok(best)
            }
            (Some(hu), None) => {
                let dist = self.h_distances(hu, fails);
                let mut best: Distance = None;
                for hy in Self::surviving(&self.cover_in, v, fails) {
                    best = min_dist(best, dist[hy].map(|d| d + 1));
                }
                Ok(best)
            }
            (None, None) => {
                let targets: Vec<usize> = Self::surviving(&self.cover_in, v, fails).collect();
                let mut best: Distance = None;
                for hx in Self::surviving(&self.cover_out, u, fails) {
                    let dist = self.h_distances(hx, fails);
                    for &hy in &targets {
                        best = min_dist(best, dist[hy].map(|d| d + 2));
                    }
                }
                Ok(best)
            }
        }
    }
}

fn min_dist(a: Distance, b: Distance) -> Distance {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) => Some(x),
        (None, y) => y,
    }
}
