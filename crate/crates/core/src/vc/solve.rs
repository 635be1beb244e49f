//! Exact parameterized vertex-cover solver: branch on a maximum-degree
//! vertex (take it, or take its whole neighborhood) with degree-0/1
//! eliminations. Exponential only in `k`.

use crate::graph::{FailureSet, Graph};

use super::WorkGraph;

/// Returns a vertex cover of size at most `k` of the underlying undirected
/// graph, or `None` if none exists.
pub fn vc_solve(g: &Graph, k: usize) -> Option<Vec<usize>> {
    solve_work(&WorkGraph::new(g), k)
}

/// Like [`vc_solve`] on `g - F`.
pub fn vc_solve_minus(g: &Graph, fails: &FailureSet, k: usize) -> Option<Vec<usize>> {
    solve_work(&WorkGraph::new_minus(g, fails), k)
}

pub(crate) fn solve_work(wg: &WorkGraph, k: usize) -> Option<Vec<usize>> {
    let mut wg = wg.clone();
    let mut cover = Vec::new();
    if branch(&mut wg, k, &mut cover) {
        cover.sort_unstable();
        Some(cover)
    } else {
        None
    }
}

fn branch(wg: &mut WorkGraph, budget: usize, cover: &mut Vec<usize>) -> bool {
    // Take the neighbor of every degree-1 vertex; always safe.
    let mut budget = budget;
    while let Some(u) = wg.degree_one_vertex() {
        if budget == 0 {
            return false;
        }
        let v = wg.neighbors(u)[0];
        cover.push(v);
        wg.delete_vertex(v);
        budget -= 1;
    }
    if wg.alive_edge_count() == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let v = wg.max_degree_vertex().expect("edges remain");
    // a budget of b vertices covers at most b * deg(v) edges
    if wg.alive_edge_count() > budget * wg.degree(v) {
        return false;
    }

    // Branch 1: v joins the cover.
    let mark = cover.len();
    let mut with_v = wg.clone();
    with_v.delete_vertex(v);
    cover.push(v);
    if branch(&mut with_v, budget - 1, cover) {
        return true;
    }
    cover.truncate(mark);

    // Branch 2: v stays out, so all its neighbors join.
    let nbrs = wg.neighbors(v);
    if nbrs.len() > budget {
        return false;
    }
    for &w in &nbrs {
        cover.push(w);
        wg.delete_vertex(w);
    }
    if branch(wg, budget - nbrs.len(), cover) {
        return true;
    }
    cover.truncate(mark);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::EdgeId;
    use crate::ground_truth::bf_vc;

    fn is_cover(g: &Graph, cover: &[usize]) -> bool {
        g.edge_list()
            .iter()
            .all(|&(u, v)| cover.contains(&u) || cover.contains(&v))
    }

    #[test]
    fn triangle_needs_two() {
        let g = gen::clique(3);
        assert!(vc_solve(&g, 1).is_none());
        let c = vc_solve(&g, 2).unwrap();
        assert_eq!(c.len(), 2);
        assert!(is_cover(&g, &c));
    }

    #[test]
    fn star_center_suffices() {
        let g = gen::star(5);
        let c = vc_solve(&g, 1).unwrap();
        assert_eq!(c, vec![0]);
    }

    #[test]
    fn empty_graph_zero_budget() {
        let g = Graph::new(3, false, vec![]).unwrap();
        assert_eq!(vc_solve(&g, 0), Some(vec![]));
    }

    #[test]
    fn agrees_with_subset_enumeration() {
        for seed in 0..30u64 {
            let g = gen::gnm(10, 20, seed % 3 == 0, seed).unwrap();
            let empty = FailureSet::new(0);
            for k in 0..=6 {
                let got = vc_solve(&g, k);
                assert_eq!(got.is_some(), bf_vc(&g, &empty, k), "seed {seed} k={k}");
                if let Some(c) = got {
                    assert!(c.len() <= k);
                    assert!(is_cover(&g, &c));
                }
            }
        }
    }

    #[test]
    fn solve_minus_respects_failures() {
        let g = gen::clique(3);
        let fails = FailureSet::from_edges([EdgeId(0)], 1).unwrap();
        let c = vc_solve_minus(&g, &fails, 1).unwrap();
        assert_eq!(c.len(), 1);
    }
}
