//! Complete-minor certificates in small graphs.
//!
//! The crate revolves around one certificate form: a *t-cluster*, i.e. `t`
//! disjoint connected branch sets pairwise joined by an edge, which exists
//! iff the graph has a `K_t` minor. On top of the immutable graph core sit
//!
//! * an exact, budgeted branch-and-bound cluster search with a brute-force
//!   oracle ([`search`]),
//! * bipartite machinery: side-preserving contractions, cover graphs,
//!   feasible partitions, `K(p,q,r)` patterns and attachment systems
//!   ([`graph`], [`covers`]),
//! * generators for the extremal families and counterexamples that pin the
//!   degree thresholds down ([`constructions`]),
//! * a finite verifier for the triangle/path game on `K_6` and the 6-cluster
//!   assembly built on it ([`game`]).
//!
//! Start with the crate examples (`cargo run --example ...`) or the `kminor`
//! binary (`gen`, `find-minor`, `check`, `game`).

pub mod bits;
pub mod cluster;
pub mod constructions;
pub mod graph;
pub mod search;

pub use bits::VertexSet;
pub use cluster::{validate_cluster, Cluster, ClusterViolation};
pub use graph::{Bipartition, Graph, GraphError, Side};
pub use search::{
    brute_force_t_cluster, find_small_minor_bipartite, find_t_cluster,
    find_t_cluster_with_workers, reduce_for_minor, SearchBudget, SearchOutcome, SearchResult,
};
