//! Exact computation of the dom-forcing number and companion graph invariants.
//!
//! A dom-forcing set of a graph G is a vertex set that is simultaneously a
//! dominating set and a zero forcing set of G; F_d(G) is the minimum size of
//! one. The crate bundles:
//!
//! - a small immutable graph type with the neighborhood and induced-subgraph
//!   primitives the solvers need ([`graph`]),
//! - generators for the analyzed graph families and the splitting operator
//!   ([`generators`]),
//! - the round-synchronous zero forcing engine with traces, propagation time
//!   and forcing chains ([`forcing`]),
//! - dominating-set tests and the exact domination search ([`domination`]),
//! - exact solvers for Z, gamma, F_d, pt and the path cover number, plus the
//!   bound reports and a naive oracle ([`solvers`]),
//! - a catalog of closed-form results verified against exact computation
//!   ([`catalog`]).
//!
//! Everything is exact and desk-scale: the subset searches are exponential
//! and guarded by a configurable order cap (default 26).

pub mod catalog;
pub mod domination;
pub mod error;
pub mod forcing;
pub mod generators;
pub mod graph;
mod search;
pub mod solvers;

pub use error::{Error, Result};
pub use forcing::{
    extract_chains, forcing_closure, is_zero_forcing_set, propagation_time, ForcingChains,
    ForcingTrace,
};
pub use generators::{splitting, FamilySpec};
pub use graph::{Graph, VertexSet};
pub use solvers::{naive_oracle, BoundReport, BoundSource, Invariant, InvariantResult, Solver, Witness};

pub use domination::is_dominating_set;
