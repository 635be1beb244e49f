//! Fault-tolerant sensitivity oracles for parameterized graph problems.
//!
//! A sensitivity oracle preprocesses a graph `G` once and then answers
//! queries about `G - F` for small failure sets `F` without recomputing
//! from scratch. This crate implements:
//!
//! - lookup-tree and subgraph-sampling oracles for the k-path problem
//!   ([`tree_oracle`], [`sampling_oracle`]),
//! - three vertex-cover sensitivity oracles plus kernelization ([`vc`]),
//! - a distance sensitivity oracle parameterized by a vertex cover
//!   ([`dso`]),
//! - bounded-stretch fault-tolerant distance preservers and a detour
//!   decision oracle ([`preserver`]),
//! - a Monte Carlo algebraic reachability oracle over a prime field
//!   ([`reach`]),
//!
//! together with exhaustive reference oracles ([`ground_truth`]), seeded
//! instance generators ([`gen`]), differential verification sweeps
//! ([`verify`]), and a serialization envelope ([`envelope`]) shared with
//! the `ftso` command-line tool.
//!
//! Builds with independent inner work (sampling, per-signature preserver
//! construction) run on rayon when the default `parallel` feature is on;
//! disabling it yields a sequential build with identical results.

pub mod dso;
pub mod envelope;
pub mod error;
pub mod exec;
pub mod gen;
pub mod graph;
pub mod ground_truth;
pub mod kpath;
pub mod preserver;
pub mod reach;
pub mod sampling_oracle;
pub mod tree_oracle;
pub mod vc;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{EdgeId, FailureSet, Graph};
