//! Monte Carlo fault-tolerant reachability oracle over a prime field.
//!
//! Every edge gets a random nonzero field element `x_e`. With `A_x` the
//! weighted adjacency matrix, the oracle stores `inv = (I - A_x)^-1` mod a
//! prime near `2^61`. The entry `inv[s][t]` is the generating function of
//! `s -> t` walks, so it is nonzero exactly when `t` is reachable from `s`
//! up to a `poly(n)/p` error probability. Removing a failure set `F` is a
//! rank-`|F|` update handled by the Woodbury identity in `O(|F|^3)` time,
//! without touching the original graph.

use std::ops::{Add, Mul, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FailureSet, Graph};

/// Prime modulus `2^61 - 1`; products fit in `u128`.
pub const P: u64 = (1 << 61) - 1;

/// Element of the prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Fp(pub u64);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    pub fn new(v: u64) -> Fp {
        Fp(v % P)
    }

    pub fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(self) -> Option<Fp> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, o: Fp) -> Fp {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, o: Fp) -> Fp {
        Fp(if self.0 >= o.0 {
            self.0 - o.0
        } else {
            self.0 + P - o.0
        })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, o: Fp) -> Fp {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

/// Dense square matrix over the field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpMatrix {
    pub n: usize,
    pub data: Vec<Fp>,
}

impl FpMatrix {
    pub fn zero(n: usize) -> FpMatrix {
        FpMatrix {
            n,
            data: vec![Fp::ZERO; n * n],
        }
    }

    pub fn identity(n: usize) -> FpMatrix {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, Fp::ONE);
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> Fp {
        self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fp) {
        self.data[r * self.n + c] = v;
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = FpMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero())?;
            if pivot != col {
                for c in 0..n {
                    let (x, y) = (a.get(pivot, c), a.get(col, c));
                    a.set(pivot, c, y);
                    a.set(col, c, x);
                    let (x, y) = (inv.get(pivot, c), inv.get(col, c));
                    inv.set(pivot, c, y);
                    inv.set(col, c, x);
                }
            }
            let scale = a.get(col, col).inv().expect("pivot is nonzero");
            for c in 0..n {
                a.set(col, c, a.get(col, c) * scale);
                inv.set(col, c, inv.get(col, c) * scale);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col);
                for c in 0..n {
                    let v = a.get(r, c) - factor * a.get(col, c);
                    a.set(r, c, v);
                    let v = inv.get(r, c) - factor * inv.get(col, c);
                    inv.set(r, c, v);
                }
            }
        }
        Some(inv)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FieldMatrixOracle {
    pub n: usize,
    /// The prime modulus (always [`P`]; recorded for file provenance).
    pub modulus: u64,
    /// Directed arcs of the underlying graph.
    pub arcs: Vec<(usize, usize)>,
    /// Random nonzero weight per arc.
    pub weights: Vec<Fp>,
    /// External edge id -> arc indexes (two for undirected edges, so
    /// failing one edge removes both directions).
    pub edge_arcs: Vec<Vec<usize>>,
    /// `(I - A_x)^-1`.
    pub inv: FpMatrix,
    pub seed: u64,
}

const BUILD_RETRIES: usize = 8;

/// Builds the oracle for a graph. Undirected edges contribute both
/// orientations, tied to the one shared edge id.
pub fn build_field_oracle(g: &Graph, seed: u64) -> Result<FieldMatrixOracle> {
    let mut arcs = Vec::new();
    let mut edge_arcs = vec![Vec::new(); g.edge_count()];
    for (u, v, id) in g.arcs() {
        edge_arcs[id.0].push(arcs.len());
        arcs.push((u, v));
    }
    build_oracle_inner(g.vertex_count(), arcs, edge_arcs, seed)
}

/// Builds the oracle from an explicit arc list; edge id `i` is arc `i`.
pub fn build_field_oracle_from_edges(
    n: usize,
    edges: &[(usize, usize)],
    seed: u64,
) -> Result<FieldMatrixOracle> {
    let edge_arcs = (0..edges.len()).map(|i| vec![i]).collect();
    build_oracle_inner(n, edges.to_vec(), edge_arcs, seed)
}

fn build_oracle_inner(
    n: usize,
    arcs: Vec<(usize, usize)>,
    edge_arcs: Vec<Vec<usize>>,
    seed: u64,
) -> Result<FieldMatrixOracle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..BUILD_RETRIES {
        let weights: Vec<Fp> = arcs.iter().map(|_| Fp(rng.gen_range(1..P))).collect();
        let mut m = FpMatrix::identity(n);
        for (i, &(u, v)) in arcs.iter().enumerate() {
            // I - A_x; the graph type rules out duplicate (u, v) arcs
            m.set(u, v, m.get(u, v) - weights[i]);
        }
        if let Some(inv) = m.inverse() {
            // spot-check M * inv = I on a few rows
            for r in (0..n).step_by((n / 4).max(1)) {
                for c in 0..n {
                    let mut acc = Fp::ZERO;
                    for k in 0..n {
                        acc = acc + m.get(r, k) * inv.get(k, c);
                    }
                    let expect = if r == c { Fp::ONE } else { Fp::ZERO };
                    assert_eq!(acc, expect, "inverse verification failed at ({r}, {c})");
                }
            }
            return Ok(FieldMatrixOracle {
                n,
                modulus: P,
                arcs,
                weights,
                edge_arcs,
                inv,
                seed,
            });
        }
    }
    Err(Error::Singular {
        what: "edge-weight matrix after retries",
        retryable: false,
    })
}

impl FieldMatrixOracle {
    /// The inverse entry `(I - A_x)^-1[s][t]` after removing `F`, via the
    /// Woodbury identity: with selectors `U`, `V` picking the failed arcs'
    /// tails and heads and `D` their weights, the update is
    /// `inv - inv U (D^-1 + V' inv U)^-1 V' inv`, needing one `|F| x |F|`
    /// inversion (the capacitance matrix).
    pub fn updated_entry(&self, s: usize, t: usize, fails: &FailureSet) -> Result<Fp> {
        let mut arc_ids: Vec<usize> = fails
            .sorted()
            .iter()
            .flat_map(|e| self.edge_arcs[e.0].iter().copied())
            .collect();
        arc_ids.sort_unstable();
        arc_ids.dedup();
        if arc_ids.is_empty() {
            return Ok(self.inv.get(s, t));
        }
        let r = arc_ids.len();
        let tails: Vec<usize> = arc_ids.iter().map(|&a| self.arcs[a].0).collect();
        let heads: Vec<usize> = arc_ids.iter().map(|&a| self.arcs[a].1).collect();
        let mut cap = FpMatrix::zero(r);
        for (i, &head) in heads.iter().enumerate() {
            for (j, &tail) in tails.iter().enumerate() {
                let mut v = self.inv.get(head, tail);
                if i == j {
                    let w_inv = self.weights[arc_ids[i]]
                        .inv()
                        .expect("edge weights are nonzero");
                    v = v + w_inv;
                }
                cap.set(i, j, v);
            }
        }
        let cap_inv = cap.inverse().ok_or(Error::Singular {
            what: "capacitance matrix",
            retryable: true,
        })?;
        let left: Vec<Fp> = (0..r).map(|j| self.inv.get(s, tails[j])).collect();
        let right: Vec<Fp> = (0..r).map(|i| self.inv.get(heads[i], t)).collect();
        let mut corr = Fp::ZERO;
        for (i, l) in left.iter().enumerate() {
            for (j, rgt) in right.iter().enumerate() {
                corr = corr + *l * cap_inv.get(i, j) * *rgt;
            }
        }
        Ok(self.inv.get(s, t) - corr)
    }

    /// Whether `t` is reachable from `s` once the arcs in `F` are removed.
    /// Wrong only with probability `poly(n)/p` per query.
    pub fn query_reach(&self, s: usize, t: usize, fails: &FailureSet) -> Result<bool> {
        if s >= self.n || t >= self.n {
            return Err(Error::InvalidArgument(format!(
                "query vertices ({s}, {t}) out of range"
            )));
        }
        if s == t {
            return Ok(true);
        }
        Ok(!self.updated_entry(s, t, fails)?.is_zero())
    }

    /// Rebuilds the oracle on the graph minus `F`, reusing the surviving
    /// weights. Exists to check the update identity exactly.
    pub fn rebuild_minus(&self, fails: &FailureSet) -> Result<FieldMatrixOracle> {
        let dead: std::collections::HashSet<usize> = fails
            .as_set()
            .iter()
            .flat_map(|e| self.edge_arcs[e.0].iter().copied())
            .collect();
        let mut m = FpMatrix::identity(self.n);
        for (i, &(u, v)) in self.arcs.iter().enumerate() {
            if dead.contains(&i) {
                continue;
            }
            m.set(u, v, m.get(u, v).sub(self.weights[i]));
        }
        let inv = m.inverse().ok_or(Error::Singular {
            what: "edge-weight matrix of the failed graph",
            retryable: true,
        })?;
        Ok(FieldMatrixOracle {
            n: self.n,
            modulus: self.modulus,
            arcs: self.arcs.clone(),
            weights: self.weights.clone(),
            edge_arcs: self.edge_arcs.clone(),
            inv,
            seed: self.seed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::graph::{parse_graph, EdgeId};
    use crate::ground_truth::enumerate_failure_sets;

    fn fs(ids: &[usize], cap: usize) -> FailureSet {
        FailureSet::from_edges(ids.iter().map(|&i| EdgeId(i)), cap).unwrap()
    }

    #[test]
    fn field_arithmetic_basics() {
        let a = Fp::new(P - 1);
        assert_eq!(a + Fp::ONE, Fp::ZERO);
        assert_eq!(Fp::ZERO - Fp::ONE, a);
        let b = Fp(123456789);
        assert_eq!(b * b.inv().unwrap(), Fp::ONE);
        assert!(Fp::ZERO.inv().is_none());
    }

    #[test]
    fn matrix_inverse_roundtrip() {
        let mut m = FpMatrix::identity(3);
        m.set(0, 1, Fp(5));
        m.set(1, 2, Fp(7));
        m.set(2, 0, Fp(11));
        let inv = m.inverse().unwrap();
        // m * inv == I
        let mut prod = FpMatrix::zero(3);
        for r in 0..3 {
            for c in 0..3 {
                let mut acc = Fp::ZERO;
                for k in 0..3 {
                    acc = acc + m.get(r, k) * inv.get(k, c);
                }
                prod.set(r, c, acc);
            }
        }
        assert_eq!(prod, FpMatrix::identity(3));
        // singular matrix
        let z = FpMatrix::zero(2);
        assert!(z.inverse().is_none());
    }

    #[test]
    fn edgeless_graph_is_the_identity() {
        let g = Graph::new(3, true, vec![]).unwrap();
        let o = build_field_oracle(&g, 1).unwrap();
        assert_eq!(o.inv, FpMatrix::identity(3));
    }

    #[test]
    fn single_edge_closed_form() {
        let g = parse_graph("2 1 d\n0 1").unwrap();
        let o = build_field_oracle(&g, 7).unwrap();
        assert_eq!(o.inv.get(0, 1), o.weights[0]);
        assert!(o.query_reach(0, 1, &fs(&[], 1)).unwrap());
        assert!(!o.query_reach(0, 1, &fs(&[0], 1)).unwrap());
        assert!(!o.query_reach(1, 0, &fs(&[], 1)).unwrap());
    }

    #[test]
    fn dag_nonzero_entries_mark_reachability() {
        for seed in 0..100u64 {
            let g = gen::layered_dag(3, 2, 0.4, 0.5, seed).unwrap();
            let o = build_field_oracle(&g, seed ^ 0xDA6).unwrap();
            for s in 0..g.vertex_count() {
                let dist = crate::ground_truth::bf_all_dist(&g, &FailureSet::new(0), s);
                for (t, d) in dist.iter().enumerate() {
                    assert_eq!(
                        !o.inv.get(s, t).is_zero(),
                        d.is_some(),
                        "seed {seed} s={s} t={t}"
                    );
                }
            }
        }
    }

    #[test]
    fn dag_walk_sum_identity() {
        // On a DAG the inverse entry is exactly the sum over s -> t paths
        // of the product of edge weights.
        for seed in 0..20u64 {
            let g = gen::layered_dag(3, 2, 0.5, 0.5, seed).unwrap();
            let o = build_field_oracle(&g, seed ^ 0xFEED).unwrap();
            let n = g.vertex_count();
            for s in 0..n {
                for t in 0..n {
                    if s == t {
                        continue;
                    }
                    let sum = path_weight_sum(&g, &o, s, t);
                    assert_eq!(o.inv.get(s, t), sum, "seed {seed} s={s} t={t}");
                }
            }
        }
    }

    fn path_weight_sum(g: &Graph, o: &FieldMatrixOracle, s: usize, t: usize) -> Fp {
        fn rec(g: &Graph, o: &FieldMatrixOracle, cur: usize, t: usize, acc: Fp, total: &mut Fp) {
            if cur == t {
                *total = *total + acc;
                return;
            }
            for &(w, e) in g.out_edges(cur) {
                rec(g, o, w, t, acc * o.weights[e.0], total);
            }
        }
        let mut total = Fp::ZERO;
        rec(g, o, s, t, Fp::ONE, &mut total);
        total
    }

    #[test]
    fn reachability_matches_bfs_including_cycles() {
        for seed in 0..25u64 {
            let g = gen::gnm(8, 14, true, seed).unwrap();
            let o = build_field_oracle(&g, seed).unwrap();
            for ids in enumerate_failure_sets(g.edge_count(), 2) {
                let fails = FailureSet::from_edges(ids.clone(), 2).unwrap();
                for s in 0..8 {
                    let dist = crate::ground_truth::bf_all_dist(&g, &fails, s);
                    for (t, d) in dist.iter().enumerate() {
                        let got = o.query_reach(s, t, &fails).unwrap();
                        assert_eq!(got, d.is_some(), "seed {seed} s={s} t={t} F={ids:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn woodbury_update_equals_rebuild_exactly() {
        for seed in 0..10u64 {
            let g = gen::gnm(7, 12, true, seed).unwrap();
            let o = build_field_oracle(&g, seed ^ 0xAB).unwrap();
            for ids in enumerate_failure_sets(g.edge_count(), 2) {
                let fails = FailureSet::from_edges(ids.clone(), 2).unwrap();
                let rebuilt = match o.rebuild_minus(&fails) {
                    Ok(r) => r,
                    Err(_) => continue, // singular rebuild cannot be compared
                };
                for s in 0..7 {
                    for t in 0..7 {
                        let upd = o.updated_entry(s, t, &fails).unwrap();
                        assert_eq!(upd, rebuilt.inv.get(s, t), "seed {seed} F={ids:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn undirected_graphs_reach_both_ways() {
        let g = parse_graph("3 2 u\n0 1\n1 2").unwrap();
        let o = build_field_oracle(&g, 3).unwrap();
        assert!(o.query_reach(2, 0, &fs(&[], 1)).unwrap());
        assert!(!o.query_reach(2, 0, &fs(&[0], 1)).unwrap());
    }

    #[test]
    fn deterministic_under_fixed_seed() {
        let g = gen::gnm(6, 9, true, 4).unwrap();
        let a = build_field_oracle(&g, 11).unwrap();
        let b = build_field_oracle(&g, 11).unwrap();
        assert_eq!(a.weights, b.weights);
        assert_eq!(a.inv, b.inv);
    }
}
