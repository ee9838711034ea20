//! Brute-force t-cluster oracle.
//!
//! Exhaustively enumerates assignments of vertices to `t` labelled sets or
//! "unused" and returns the first valid cluster in enumeration order. It is
//! deliberately independent of the branch-and-bound: no shared state, no
//! shared pruning, just the definition. Guarded to twelve vertices.

use crate::bits::VertexSet;
use crate::cluster::Cluster;
use crate::graph::Graph;
use thiserror::Error;

pub const ORACLE_MAX_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle refused: {0} vertices exceeds the guard of {ORACLE_MAX_VERTICES}")]
    TooLarge(usize),
}

struct BruteForce<'a> {
    ids: Vec<usize>,
    adj: Vec<u32>,
    t: usize,
    n: usize,
    sets: Vec<u32>,
    graph: &'a Graph,
}

impl BruteForce<'_> {
    /// Assign vertex `v` onward; `used_labels` counts the sets opened so far.
    /// Labels are opened in order, which only skips relabelled duplicates.
    fn rec(&mut self, v: usize, used_labels: usize) -> Option<Vec<u32>> {
        if v == self.n {
            if used_labels == self.t && self.valid_leaf() {
                return Some(self.sets.clone());
            }
            return None;
        }
        // Not enough vertices left to open the remaining sets.
        if self.t - used_labels > self.n - v {
            return None;
        }
        let bit = 1u32 << v;
        for label in 0..self.t.min(used_labels + 1) {
            self.sets[label] |= bit;
            let opened = used_labels + usize::from(label == used_labels);
            if let Some(found) = self.rec(v + 1, opened) {
                return Some(found);
            }
            self.sets[label] &= !bit;
        }
        self.rec(v + 1, used_labels)
    }

    fn valid_leaf(&self) -> bool {
        for i in 0..self.t {
            if self.sets[i] == 0 {
                return false;
            }
        }
        // Pairwise linking first; it rejects most leaves cheaply.
        let nbrs: Vec<u32> = self
            .sets
            .iter()
            .map(|&s| {
                let mut out = 0u32;
                let mut m = s;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    out |= self.adj[v];
                }
                out
            })
            .collect();
        for i in 0..self.t {
            for j in i + 1..self.t {
                if nbrs[i] & self.sets[j] == 0 {
                    return false;
                }
            }
        }
        for &s in &self.sets {
            if !self.connected(s) {
                return false;
            }
        }
        true
    }

    fn connected(&self, s: u32) -> bool {
        let start = s.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut nbrs = 0u32;
            let mut m = frontier;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                nbrs |= self.adj[v];
            }
            frontier = nbrs & s & !comp;
            comp |= frontier;
        }
        comp == s
    }

    fn to_cluster(&self, sets: Vec<u32>) -> Cluster {
        Cluster::new(
            sets.iter()
                .map(|&s| {
                    let mut out = VertexSet::new();
                    let mut m = s;
                    while m != 0 {
                        let v = m.trailing_zeros() as usize;
                        m &= m - 1;
                        out.insert(self.ids[v]);
                    }
                    out
                })
                .collect(),
        )
    }
}

/// Definitive t-cluster existence on graphs with at most twelve vertices.
pub fn brute_force_t_cluster(g: &Graph, t: usize) -> Result<Option<Cluster>, OracleError> {
    if g.n() > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge(g.n()));
    }
    if t == 0 {
        return Ok(Some(Cluster::new(Vec::new())));
    }
    if t > g.n() {
        return Ok(None);
    }
    let ids: Vec<usize> = g.vertices().to_vec();
    let n = ids.len();
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        let iu = ids.binary_search(&u).unwrap();
        let iv = ids.binary_search(&v).unwrap();
        adj[iu] |= 1 << iv;
        adj[iv] |= 1 << iu;
    }
    let mut bf = BruteForce {
        ids,
        adj,
        t,
        n,
        sets: vec![0; t],
        graph: g,
    };
    let found = bf.rec(0, 0);
    Ok(found.map(|sets| {
        let c = bf.to_cluster(sets);
        debug_assert_eq!(crate::cluster::validate_cluster(bf.graph, &c, t), Ok(()));
        c
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::validate_cluster;
    use crate::constructions::gen_complete_bipartite;
    use crate::graph::make;

    #[test]
    fn k5_has_five_singletons() {
        let k5 = make::complete(5);
        let c = brute_force_t_cluster(&k5, 5).unwrap().unwrap();
        assert!(c.branch_sets().iter().all(|s| s.len() == 1));
        assert_eq!(validate_cluster(&k5, &c, 5), Ok(()));
    }

    #[test]
    fn k33_has_no_k5_minor() {
        let (k33, _) = gen_complete_bipartite(3, 3).unwrap();
        assert_eq!(brute_force_t_cluster(&k33, 5).unwrap(), None);
        assert!(brute_force_t_cluster(&k33, 4).unwrap().is_some());
    }

    #[test]
    fn size_guard() {
        let big = make::complete(13);
        assert_eq!(
            brute_force_t_cluster(&big, 3),
            Err(OracleError::TooLarge(13))
        );
    }

    #[test]
    fn icosahedron_is_k5_minor_free() {
        let ico = crate::constructions::gen_geodesic(1).unwrap();
        assert_eq!(brute_force_t_cluster(&ico, 5).unwrap(), None);
        assert!(brute_force_t_cluster(&ico, 4).unwrap().is_some());
    }
}
