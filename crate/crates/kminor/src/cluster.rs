//! Minor certificates.
//!
//! A *t-cluster* is the certificate form of a `K_t` minor: `t` pairwise
//! disjoint vertex sets, each inducing a connected subgraph, with an edge
//! between every pair of sets. [`validate_cluster`] is the single audit point
//! every search in this crate funnels its answers through.

use crate::bits::VertexSet;
use crate::graph::Graph;
use std::fmt;

/// An ordered list of branch sets claimed to certify a `K_t` minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cluster {
    branch_sets: Vec<VertexSet>,
}

impl Cluster {
    pub fn new(branch_sets: Vec<VertexSet>) -> Self {
        Cluster { branch_sets }
    }

    pub fn branch_sets(&self) -> &[VertexSet] {
        &self.branch_sets
    }

    pub fn t(&self) -> usize {
        self.branch_sets.len()
    }

    /// All vertices used by the certificate.
    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::new();
        for x in &self.branch_sets {
            s.union_with(x);
        }
        s
    }

    /// Drop the branch set containing `v` (or the last set if no set uses
    /// `v`). If a graph plus the extra vertex `v` has a (t+1)-cluster, the
    /// result is a t-cluster of the graph without `v`.
    pub fn strip_apex(&self, v: usize) -> Cluster {
        let mut sets = self.branch_sets.clone();
        match sets.iter().position(|s| s.contains(v)) {
            Some(i) => {
                sets.remove(i);
            }
            None => {
                sets.pop();
            }
        }
        Cluster::new(sets)
    }
}

/// The first invariant a rejected certificate violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterViolation {
    WrongCount { expected: usize, actual: usize },
    UnknownVertex { set: usize, vertex: usize },
    EmptySet { set: usize },
    Overlap { set_a: usize, set_b: usize, vertex: usize },
    Disconnected { set: usize },
    MissingEdge { set_a: usize, set_b: usize },
}

impl fmt::Display for ClusterViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClusterViolation::WrongCount { expected, actual } => {
                write!(f, "expected {expected} branch sets, got {actual}")
            }
            ClusterViolation::UnknownVertex { set, vertex } => {
                write!(f, "branch set {set} references vertex {vertex} absent from the graph")
            }
            ClusterViolation::EmptySet { set } => write!(f, "branch set {set} is empty"),
            ClusterViolation::Overlap { set_a, set_b, vertex } => {
                write!(f, "branch sets {set_a} and {set_b} share vertex {vertex}")
            }
            ClusterViolation::Disconnected { set } => {
                write!(f, "branch set {set} induces a disconnected subgraph")
            }
            ClusterViolation::MissingEdge { set_a, set_b } => {
                write!(f, "no edge between branch sets {set_a} and {set_b}")
            }
        }
    }
}

impl std::error::Error for ClusterViolation {}

/// Accept iff `c` has exactly `t` branch sets and they are pairwise disjoint,
/// each connected in `g`, and pairwise joined by an edge of `g`.
///
/// On rejection the verdict names the first violated invariant and the
/// offending set or pair.
pub fn validate_cluster(g: &Graph, c: &Cluster, t: usize) -> Result<(), ClusterViolation> {
    let sets = c.branch_sets();
    if sets.len() != t {
        return Err(ClusterViolation::WrongCount {
            expected: t,
            actual: sets.len(),
        });
    }
    for (i, x) in sets.iter().enumerate() {
        if let Some(v) = x.difference(g.vertices()).min() {
            return Err(ClusterViolation::UnknownVertex { set: i, vertex: v });
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if let Some(v) = sets[i].intersection(&sets[j]).min() {
                return Err(ClusterViolation::Overlap {
                    set_a: i,
                    set_b: j,
                    vertex: v,
                });
            }
        }
    }
    for (i, x) in sets.iter().enumerate() {
        if x.is_empty() {
            return Err(ClusterViolation::EmptySet { set: i });
        }
        if !g.is_connected_set(x) {
            return Err(ClusterViolation::Disconnected { set: i });
        }
    }
    for i in 0..sets.len() {
        let nbrs = g.neighbors_of_set(&sets[i]);
        for j in i + 1..sets.len() {
            if !nbrs.intersects(&sets[j]) {
                return Err(ClusterViolation::MissingEdge { set_a: i, set_b: j });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::gen_complete_bipartite;
    use crate::graph::make;

    fn singleton_cluster(n: usize) -> Cluster {
        Cluster::new((0..n).map(VertexSet::singleton).collect())
    }

    #[test]
    fn accepts_k6_singletons() {
        let k6 = make::complete(6);
        assert_eq!(validate_cluster(&k6, &singleton_cluster(6), 6), Ok(()));
    }

    #[test]
    fn accepts_k33_four_cluster() {
        // A-side {0,1,2}, B-side {3,4,5}; branch sets {x1,y1},{x2,y2},{x3},{y3}.
        let (k33, _) = gen_complete_bipartite(3, 3).unwrap();
        let c = Cluster::new(vec![
            [0, 3].into_iter().collect(),
            [1, 4].into_iter().collect(),
            VertexSet::singleton(2),
            VertexSet::singleton(5),
        ]);
        assert_eq!(validate_cluster(&k33, &c, 4), Ok(()));
    }

    #[test]
    fn rejects_path_singletons_naming_pair() {
        let p6 = make::path(6);
        assert_eq!(
            validate_cluster(&p6, &singleton_cluster(6), 6),
            Err(ClusterViolation::MissingEdge { set_a: 0, set_b: 2 })
        );
    }

    #[test]
    fn rejects_structurally_broken_certificates() {
        let k3 = make::complete(3);
        let c = Cluster::new(vec![VertexSet::singleton(0), VertexSet::singleton(7)]);
        assert_eq!(
            validate_cluster(&k3, &c, 2),
            Err(ClusterViolation::UnknownVertex { set: 1, vertex: 7 })
        );
        assert_eq!(
            validate_cluster(&k3, &singleton_cluster(2), 3),
            Err(ClusterViolation::WrongCount { expected: 3, actual: 2 })
        );
        let overlap = Cluster::new(vec![
            [0, 1].into_iter().collect(),
            [1, 2].into_iter().collect(),
        ]);
        assert_eq!(
            validate_cluster(&k3, &overlap, 2),
            Err(ClusterViolation::Overlap { set_a: 0, set_b: 1, vertex: 1 })
        );
        let disconnected = Cluster::new(vec![[0, 2].into_iter().collect()]);
        let p3 = make::path(3);
        assert_eq!(
            validate_cluster(&p3, &disconnected, 1),
            Err(ClusterViolation::Disconnected { set: 0 })
        );
    }

    #[test]
    fn strip_apex_drops_the_right_set() {
        let c = Cluster::new(vec![
            [0, 9].into_iter().collect(),
            VertexSet::singleton(1),
            VertexSet::singleton(2),
        ]);
        let stripped = c.strip_apex(9);
        assert_eq!(stripped.t(), 2);
        assert!(!stripped.support().contains(9));
        assert!(!stripped.support().contains(0));
        // v unused: last set dropped.
        let stripped = c.strip_apex(42);
        assert_eq!(stripped.t(), 2);
        assert!(stripped.support().contains(0));
    }
}
