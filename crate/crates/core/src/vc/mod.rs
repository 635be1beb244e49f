//! Vertex cover machinery: an exact parameterized solver, the
//! failure-aware high-degree kernel, and three sensitivity oracles built on
//! top of them (subset-store, binary lookup tree, and kernel-plus-solver).
//!
//! Covering is over the underlying undirected structure: an edge `(u, v)`
//! is covered when either endpoint is in the cover, for directed and
//! undirected graphs alike.

mod kernel;
mod oracles;
mod solve;
mod work;

pub use kernel::{vc_kernel, VcKernel};
pub use oracles::{
    build_kernel_oracle, build_subset_oracle, build_vctree_oracle, subset_store_bound,
    vctree_size_bound, VcKernelOracle, VcSubsetOracle, VcTreeNode, VcTreeOracle,
};
pub use solve::{vc_solve, vc_solve_minus};

pub(crate) use work::WorkGraph;
