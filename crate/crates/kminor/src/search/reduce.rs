//! Safe preprocessing for `K_t` minor search, `t >= 4`.
//!
//! Isolated vertices are deleted and a vertex of degree one or two is
//! absorbed into its lowest-id neighbour, repeatedly. For `t >= 4` this
//! preserves existence of a `K_t` minor in both directions: a branch set
//! that is a single vertex needs degree at least `t - 1 >= 3`, so low-degree
//! vertices can only ever ride along inside a bigger branch set, and the
//! absorption keeps exactly that ability.

use crate::bits::VertexSet;
use crate::graph::Graph;
use std::collections::BTreeMap;

/// Reduced graph plus, for each surviving vertex, the set of original
/// vertices it stands for.
pub(crate) struct Reduced {
    pub graph: Graph,
    pub preimage: BTreeMap<usize, VertexSet>,
}

pub(crate) fn reduce_with_map(g: &Graph, t: usize) -> Reduced {
    assert!(t >= 4, "the degree-two reduction is only valid for t >= 4");
    let mut graph = g.clone();
    let mut preimage: BTreeMap<usize, VertexSet> = g
        .vertices()
        .iter()
        .map(|v| (v, VertexSet::singleton(v)))
        .collect();
    loop {
        let Some(v) = graph.vertices().iter().find(|&v| graph.degree(v) <= 2) else {
            break;
        };
        let nbrs = graph.neighbors(v);
        match nbrs.min() {
            None => {
                graph = graph.delete_vertices(&VertexSet::singleton(v)).unwrap();
                preimage.remove(&v);
            }
            Some(u) => {
                // Absorb v into u: u keeps its id and gains v's other edges.
                let extra = nbrs.difference(&VertexSet::singleton(u));
                let mut verts: Vec<usize> = graph.vertices().to_vec();
                verts.retain(|&x| x != v);
                let mut edges: Vec<(usize, usize)> = graph
                    .edges()
                    .into_iter()
                    .filter(|&(a, b)| a != v && b != v)
                    .collect();
                for w in &extra {
                    if !graph.has_edge(u, w) {
                        edges.push((u.min(w), u.max(w)));
                    }
                }
                graph = Graph::from_edges(verts, edges).unwrap();
                let gone = preimage.remove(&v).unwrap();
                preimage.get_mut(&u).unwrap().union_with(&gone);
            }
        }
    }
    Reduced { graph, preimage }
}

/// Public form of the reduction: the shrunken graph. The output has a `K_t`
/// minor iff the input does.
pub fn reduce_for_minor(g: &Graph, t: usize) -> Graph {
    reduce_with_map(g, t).graph
}
