//! Decision oracle for bounded-stretch detours: given `(v, F)`, does
//! `d(s, v, G - F) <= d(s, v, G) + k` hold? One auxiliary graph per
//! signature is queried for source-to-target reachability, either by BFS
//! (exact) or through the algebraic reachability oracle (Monte Carlo).

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exec;
use crate::graph::{bfs_levels, EdgeId, FailureSet, Graph};
use crate::reach::{build_field_oracle_from_edges, FieldMatrixOracle};

use super::aux_graph::{build_aux_graph_with_levels, AuxGraph};
use super::enumerate_y;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DetourBackend {
    /// Exact breadth-first search per query.
    Bfs,
    /// Matrix-inverse reachability with Woodbury updates; answers are
    /// correct w.h.p. and query cost grows with the lifted failure count.
    Algebraic { seed: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DetourEntry {
    pub aux: AuxGraph,
    /// Present iff the backend is algebraic.
    pub field: Option<FieldMatrixOracle>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DetourOracle {
    pub s: usize,
    pub k: usize,
    /// Failure bound used for sizing reports; queries accept any set, with
    /// cost growing in its size.
    pub f: usize,
    pub backend: DetourBackend,
    pub entries: Vec<DetourEntry>,
    pub edge_count: usize,
}

/// Precomputes one auxiliary graph (and, for the algebraic backend, one
/// field oracle) per signature in `enumerate_y(k)`. Per-signature work is
/// independent and runs in parallel under the `parallel` feature.
pub fn build_detour_oracle(
    g: &Graph,
    s: usize,
    f: usize,
    k: usize,
    backend: DetourBackend,
) -> Result<DetourOracle> {
    build_detour_impl(g, s, f, k, backend, false)
}

/// Sequential reference build with identical output.
pub fn build_detour_oracle_seq(
    g: &Graph,
    s: usize,
    f: usize,
    k: usize,
    backend: DetourBackend,
) -> Result<DetourOracle> {
    build_detour_impl(g, s, f, k, backend, true)
}

fn build_detour_impl(
    g: &Graph,
    s: usize,
    f: usize,
    k: usize,
    backend: DetourBackend,
    force_seq: bool,
) -> Result<DetourOracle> {
    let levels = bfs_levels(g, s);
    let ys = enumerate_y(k);
    let job = |i: usize| -> Result<DetourEntry> {
        let aux = build_aux_graph_with_levels(g, s, &ys[i], &levels.level);
        let field = match backend {
            DetourBackend::Bfs => None,
            DetourBackend::Algebraic { seed } => Some(build_field_oracle_from_edges(
                aux.vertex_count(),
                &aux.edges,
                seed.wrapping_add(i as u64),
            )?),
        };
        Ok(DetourEntry { aux, field })
    };
    let built: Vec<Result<DetourEntry>> = if force_seq {
        exec::map_indexed_seq(ys.len(), job)
    } else {
        exec::map_indexed(ys.len(), job)
    };
    let entries = built.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(DetourOracle {
        s,
        k,
        f,
        backend,
        entries,
        edge_count: g.edge_count(),
    })
}

impl DetourOracle {
    /// Yes iff some signature's auxiliary graph still connects the source
    /// copy to the target copy of `v` after lifting `F`.
    pub fn query(&self, v: usize, fails: &FailureSet) -> Result<bool> {
        for entry in &self.entries {
            let target = entry.aux.target(v);
            let hit = match &entry.field {
                None => entry.aux.reachable_minus(fails)[target],
                Some(field) => {
                    let arcs = entry.aux.lift_failures(fails);
                    let lifted =
                        FailureSet::from_edges(arcs.iter().map(|&a| EdgeId(a)), arcs.len())
                            .expect("capacity equals length");
                    field.query_reach(entry.aux.source, target, &lifted)?
                }
            };
            if hit {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::parse_graph;
    use crate::ground_truth::{bf_detour, enumerate_failure_sets};

    fn fs(ids: &[usize], cap: usize) -> FailureSet {
        FailureSet::from_edges(ids.iter().map(|&i| EdgeId(i)), cap).unwrap()
    }

    #[test]
    fn no_failures_answers_yes_for_every_reachable_vertex() {
        let g = parse_graph("4 4 d\n0 1\n1 2\n2 3\n0 2").unwrap();
        let o = build_detour_oracle(&g, 0, 1, 0, DetourBackend::Bfs).unwrap();
        for v in 0..4 {
            assert!(o.query(v, &fs(&[], 1)).unwrap());
        }
    }

    #[test]
    fn disconnecting_failures_answer_no() {
        let g = parse_graph("3 2 d\n0 1\n1 2").unwrap();
        let o = build_detour_oracle(&g, 0, 1, 2, DetourBackend::Bfs).unwrap();
        assert!(!o.query(2, &fs(&[1], 1)).unwrap());
        assert!(o.query(1, &fs(&[1], 1)).unwrap());
    }

    #[test]
    fn bfs_backend_matches_reference_exhaustively() {
        for seed in 0..10u64 {
            let g = gen::gnm(7, 11, true, seed).unwrap();
            for k in 0..=2usize {
                let o = build_detour_oracle(&g, 0, 2, k, DetourBackend::Bfs).unwrap();
                for ids in enumerate_failure_sets(g.edge_count(), 2) {
                    let fails = FailureSet::from_edges(ids.clone(), 2).unwrap();
                    for v in 0..7 {
                        assert_eq!(
                            o.query(v, &fails).unwrap(),
                            bf_detour(&g, 0, v, &fails, k),
                            "seed {seed} k={k} v={v} F={ids:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn algebraic_backend_agrees_with_bfs_backend() {
        let mut trials = 0u64;
        let mut agree = 0u64;
        for seed in 0..6u64 {
            let g = gen::gnm(8, 12, true, seed).unwrap();
            let k = 2;
            let exact = build_detour_oracle(&g, 0, 2, k, DetourBackend::Bfs).unwrap();
            let alg =
                build_detour_oracle(&g, 0, 2, k, DetourBackend::Algebraic { seed: seed ^ 0x5A })
                    .unwrap();
            for ids in enumerate_failure_sets(g.edge_count(), 2) {
                let fails = FailureSet::from_edges(ids, 2).unwrap();
                for v in 0..8 {
                    trials += 1;
                    if exact.query(v, &fails).unwrap() == alg.query(v, &fails).unwrap() {
                        agree += 1;
                    }
                }
            }
        }
        assert!(
            agree as f64 >= 0.999 * trials as f64,
            "{agree}/{trials} agreements"
        );
    }

    #[test]
    fn sequential_build_matches_parallel() {
        let g = gen::gnm(7, 10, true, 5).unwrap();
        let a = build_detour_oracle(&g, 0, 1, 2, DetourBackend::Algebraic { seed: 9 }).unwrap();
        let b =
            build_detour_oracle_seq(&g, 0, 1, 2, DetourBackend::Algebraic { seed: 9 }).unwrap();
        for (ea, eb) in a.entries.iter().zip(&b.entries) {
            assert_eq!(ea.aux.edges, eb.aux.edges);
            assert_eq!(
                ea.field.as_ref().unwrap().weights,
                eb.field.as_ref().unwrap().weights
            );
        }
    }
}
