//! Immutable simple graphs over small integer vertex ids, bipartitions, and
//! the side-preserving contraction operations.
//!
//! Graphs are values: every operation returns a new graph and the input is
//! untouched, so search code can share them freely across threads. Vertex ids
//! survive deletion and induction; contraction introduces a fresh vertex with
//! the smallest id not present in the input graph.

use crate::bits::{VertexSet, MAX_VERTEX_ID};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex id {0}")]
    UnknownVertex(usize),
    #[error("vertex id {0} exceeds capacity {MAX_VERTEX_ID}")]
    IdTooLarge(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("set induces a disconnected subgraph")]
    DisconnectedSet,
    #[error("empty vertex set")]
    EmptySet,
    #[error("no unused vertex id left for contraction")]
    IdsExhausted,
    #[error("sides are not disjoint (vertex {0} on both)")]
    SidesOverlap(usize),
    #[error("vertex {0} belongs to neither side")]
    Uncovered(usize),
    #[error("edge {0}-{1} does not cross the bipartition")]
    EdgeInsideSide(usize, usize),
    #[error("vertex {0} is not on side {1:?}")]
    WrongSide(usize, Side),
}

/// An immutable simple undirected graph.
///
/// No loops, no parallel edges; adjacency is kept as one [`VertexSet`] per
/// vertex id.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    verts: VertexSet,
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Graph with the given vertices and no edges.
    pub fn with_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self, GraphError> {
        let mut verts = VertexSet::new();
        for v in vertices {
            if v > MAX_VERTEX_ID {
                return Err(GraphError::IdTooLarge(v));
            }
            verts.insert(v);
        }
        let cap = verts.max().map_or(0, |m| m + 1);
        Ok(Graph {
            verts,
            adj: vec![VertexSet::new(); cap],
            edge_count: 0,
        })
    }

    /// Build a graph from explicit vertex and edge lists.
    ///
    /// Rejects loops, duplicate edges (in either orientation) and edges with
    /// endpoints outside the vertex list.
    pub fn from_edges<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = usize>,
        E: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::with_vertices(vertices)?;
        for (u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        for x in [u, v] {
            if x > MAX_VERTEX_ID {
                return Err(GraphError::IdTooLarge(x));
            }
            if !self.verts.contains(x) {
                return Err(GraphError::UnknownVertex(x));
            }
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.verts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.verts
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v <= MAX_VERTEX_ID && self.verts.contains(v)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.has_vertex(u) && self.has_vertex(v) && self.adj[u].contains(v)
    }

    /// Neighbourhood of `v`; empty for ids outside the graph.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        if self.has_vertex(v) {
            self.adj[v]
        } else {
            VertexSet::new()
        }
    }

    /// Union of the neighbourhoods of `set`.
    pub fn neighbors_of_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in set {
            if self.has_vertex(v) {
                out.union_with(&self.adj[v]);
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn min_degree(&self) -> usize {
        self.verts.iter().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.verts.iter().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in &self.verts {
            for v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn check_subset(&self, x: &VertexSet) -> Result<(), GraphError> {
        match x.difference(&self.verts).min() {
            Some(v) => Err(GraphError::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// The graph obtained by deleting the vertices of `x` (and every edge
    /// touching them).
    pub fn delete_vertices(&self, x: &VertexSet) -> Result<Graph, GraphError> {
        self.check_subset(x)?;
        let keep = self.verts.difference(x);
        let mut g = Graph {
            verts: keep,
            adj: vec![VertexSet::new(); self.adj.len()],
            edge_count: 0,
        };
        for v in &keep {
            g.adj[v] = self.adj[v].difference(x);
            g.edge_count += g.adj[v].len();
        }
        g.edge_count /= 2;
        Ok(g)
    }

    /// The subgraph induced on `x`; identical to deleting the complement.
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<Graph, GraphError> {
        self.check_subset(x)?;
        self.delete_vertices(&self.verts.difference(x))
    }

    /// Is `g[x]` connected? Empty sets are not connected.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        let Some(start) = x.min() else { return false };
        if !x.is_subset(&self.verts) {
            return false;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let grow = self
                .neighbors_of_set(&frontier)
                .intersection(x)
                .difference(&seen);
            seen.union_with(&grow);
            frontier = grow;
        }
        seen == *x
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.is_connected_set(&self.verts)
    }

    /// Connected components, in ascending order of their smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.verts;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let grow = self
                    .neighbors_of_set(&frontier)
                    .intersection(&rest)
                    .difference(&comp);
                comp.union_with(&grow);
                frontier = grow;
            }
            rest = rest.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Contract the connected set `x` to a single fresh vertex.
    ///
    /// The fresh vertex gets the smallest id not used by this graph and is
    /// adjacent to every survivor that had a neighbour in `x`. Returns the
    /// contracted graph and the fresh id.
    pub fn contract_set(&self, x: &VertexSet) -> Result<(Graph, usize), GraphError> {
        self.check_subset(x)?;
        if x.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if !self.is_connected_set(x) {
            return Err(GraphError::DisconnectedSet);
        }
        let fresh = self.verts.min_absent();
        if fresh > MAX_VERTEX_ID {
            return Err(GraphError::IdsExhausted);
        }
        let attach = self.neighbors_of_set(x).difference(x);
        let mut g = self.delete_vertices(x)?;
        g.verts.insert(fresh);
        if g.adj.len() <= fresh {
            g.adj.resize(fresh + 1, VertexSet::new());
        }
        g.adj[fresh] = attach;
        for v in &attach {
            g.adj[v].insert(fresh);
        }
        g.edge_count += attach.len();
        Ok((g, fresh))
    }

    /// 2-colour the graph if possible: returns a bipartition with the
    /// component containing each smallest vertex rooted on side A.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut a = VertexSet::new();
        let mut b = VertexSet::new();
        for comp in self.components() {
            let root = comp.min().unwrap();
            a.insert(root);
            let mut frontier = VertexSet::singleton(root);
            let mut on_a = true;
            let mut seen = frontier;
            while !frontier.is_empty() {
                let grow = self.neighbors_of_set(&frontier).difference(&seen);
                if on_a {
                    b.union_with(&grow);
                } else {
                    a.union_with(&grow);
                }
                seen.union_with(&grow);
                frontier = grow;
                on_a = !on_a;
            }
        }
        let bip = Bipartition { a, b };
        bip.validate(self).ok().map(|_| bip)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, V={:?}, E={:?})",
            self.n(),
            self.edge_count,
            self.verts,
            self.edges()
        )
    }
}

/// One of the two sides of a bipartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// A labelling of the vertices into sides A and B such that every edge
/// crosses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    a: VertexSet,
    b: VertexSet,
}

impl Bipartition {
    pub fn new(a: VertexSet, b: VertexSet, g: &Graph) -> Result<Self, GraphError> {
        let bip = Bipartition { a, b };
        bip.validate(g)?;
        Ok(bip)
    }

    pub fn side_a(&self) -> &VertexSet {
        &self.a
    }

    pub fn side_b(&self) -> &VertexSet {
        &self.b
    }

    pub fn side(&self, s: Side) -> &VertexSet {
        match s {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub fn side_of(&self, v: usize) -> Option<Side> {
        if self.a.contains(v) {
            Some(Side::A)
        } else if self.b.contains(v) {
            Some(Side::B)
        } else {
            None
        }
    }

    /// Check the bipartition invariants against `g`: sides disjoint, sides
    /// cover the vertex set exactly, and every edge crosses.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        if let Some(v) = self.a.intersection(&self.b).min() {
            return Err(GraphError::SidesOverlap(v));
        }
        let cover = self.a.union(&self.b);
        if cover != *g.vertices() {
            let v = g
                .vertices()
                .difference(&cover)
                .min()
                .or_else(|| cover.difference(g.vertices()).min())
                .unwrap();
            return Err(GraphError::Uncovered(v));
        }
        for (u, v) in g.edges() {
            if self.a.contains(u) == self.a.contains(v) {
                return Err(GraphError::EdgeInsideSide(u, v));
            }
        }
        Ok(())
    }

    /// Restrict to the vertices of `g` after deletions.
    pub fn restrict_to(&self, g: &Graph) -> Bipartition {
        Bipartition {
            a: self.a.intersection(g.vertices()),
            b: self.b.intersection(g.vertices()),
        }
    }
}

/// Contract the connected set `x` to a fresh vertex and delete the edges
/// between the fresh vertex and the named side, so the result is bipartite
/// again with the fresh vertex on that side.
///
/// Returns the graph, its bipartition, and the fresh vertex id.
pub fn contract_into_side(
    g: &Graph,
    bip: &Bipartition,
    x: &VertexSet,
    side: Side,
) -> Result<(Graph, Bipartition, usize), GraphError> {
    bip.validate(g)?;
    let (contracted, fresh) = g.contract_set(x)?;
    // Delete the edges between the fresh vertex and the target side.
    let banned = contracted.adj[fresh].intersection(bip.side(side));
    let mut out = contracted;
    out.adj[fresh] = out.adj[fresh].difference(&banned);
    for v in &banned {
        out.adj[v].remove(fresh);
    }
    out.edge_count -= banned.len();
    let (mut a, mut b) = (
        bip.a.difference(x).intersection(out.vertices()),
        bip.b.difference(x).intersection(out.vertices()),
    );
    match side {
        Side::A => a.insert(fresh),
        Side::B => b.insert(fresh),
    }
    let new_bip = Bipartition::new(a, b, &out)?;
    Ok((out, new_bip, fresh))
}

/// Convenience constructors used all over the tests.
pub mod make {
    use super::*;

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(0..n, edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(0..n, (0..n).map(|i| (i, (i + 1) % n)).map(ordered)).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(0..n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
    }

    fn ordered((u, v): (usize, usize)) -> (usize, usize) {
        (u.min(v), u.max(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(
            Graph::from_edges(0..2, [(0, 0)]),
            Err(GraphError::Loop(0))
        );
        assert_eq!(
            Graph::from_edges(0..2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(0..2, [(0, 5)]),
            Err(GraphError::UnknownVertex(5))
        );
    }

    #[test]
    fn delete_vertices_examples() {
        // K3 minus a vertex is a single edge.
        let k3 = make::complete(3);
        let g = k3.delete_vertices(&VertexSet::singleton(2)).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);

        // Deleting nothing is the identity.
        assert_eq!(k3.delete_vertices(&VertexSet::new()).unwrap(), k3);

        // 6-cycle minus two antipodal vertices: two disjoint edges.
        let c6 = make::cycle(6);
        let g = c6
            .delete_vertices(&[0, 3].into_iter().collect())
            .unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (4, 5)]);

        assert_eq!(
            c6.delete_vertices(&VertexSet::singleton(9)),
            Err(GraphError::UnknownVertex(9))
        );
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = make::complete(4);
        let g = k4
            .induced_subgraph(&[0, 1, 3].into_iter().collect())
            .unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);

        assert_eq!(k4.induced_subgraph(k4.vertices()).unwrap(), k4);

        // K_{3,3} restricted to one side is edgeless.
        let k33 = crate::constructions::gen_complete_bipartite(3, 3).unwrap().0;
        let side: VertexSet = (0..3).collect();
        let g = k33.induced_subgraph(&side).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 0));
    }

    #[test]
    fn complement_identity() {
        let c6 = make::cycle(6);
        let x: VertexSet = [1, 2, 5].into_iter().collect();
        let lhs = c6.induced_subgraph(&x).unwrap();
        let rhs = c6.delete_vertices(&c6.vertices().difference(&x)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn contract_set_examples() {
        // Path 0-1-2, contract {0,1}: fresh vertex 3, single edge 3-2.
        let p3 = make::path(3);
        let (g, fresh) = p3.contract_set(&[0, 1].into_iter().collect()).unwrap();
        assert_eq!(fresh, 3);
        assert_eq!(g.edges(), vec![(2, 3)]);

        // K4 contracting an edge gives K3.
        let k4 = make::complete(4);
        let (g, _) = k4.contract_set(&[0, 1].into_iter().collect()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));

        // 6-cycle contracting three consecutive vertices gives a 4-cycle.
        let c6 = make::cycle(6);
        let (g, fresh) = c6.contract_set(&[0, 1, 2].into_iter().collect()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 4));
        assert_eq!(g.degree(fresh), 2);

        // A disconnected set is not a single minor step.
        assert_eq!(
            c6.contract_set(&[0, 3].into_iter().collect()),
            Err(GraphError::DisconnectedSet)
        );
    }

    #[test]
    fn components_examples() {
        let empty3 = Graph::with_vertices(0..3).unwrap();
        assert_eq!(empty3.components().len(), 3);

        assert_eq!(make::cycle(5).components().len(), 1);

        let two_triangles = Graph::from_edges(
            0..6,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        let comps = two_triangles.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);
    }

    #[test]
    fn contract_into_side_cycle_example() {
        // 6-cycle a1-b1-a2-b2-a3-b3 with A = {a1,a2,a3} = {0,2,4}.
        let g = make::cycle(6);
        let bip = Bipartition::new(
            [0, 2, 4].into_iter().collect(),
            [1, 3, 5].into_iter().collect(),
            &g,
        )
        .unwrap();
        let x: VertexSet = [0, 1].into_iter().collect(); // {a1, b1}
        let (h, hb, fresh) = contract_into_side(&g, &bip, &x, Side::A).unwrap();
        assert_eq!(fresh, 6);
        // Fresh vertex keeps only its edge to b3 = vertex 5.
        assert_eq!(h.neighbors(fresh).to_vec(), vec![5]);
        assert_eq!(h.edges(), vec![(2, 3), (3, 4), (4, 5), (5, 6)]);
        assert!(hb.side_a().contains(fresh));
        hb.validate(&h).unwrap();
    }

    #[test]
    fn contract_singleton_into_own_side_is_relabel() {
        let (g, bip) = crate::constructions::gen_complete_bipartite(2, 2).unwrap();
        let b = bip.side_b().min().unwrap();
        let (h, hb, fresh) = contract_into_side(&g, &bip, &VertexSet::singleton(b), Side::B)
            .unwrap();
        assert_eq!(h.n(), g.n());
        assert_eq!(h.edge_count(), g.edge_count());
        assert_eq!(h.degree(fresh), g.degree(b));
        hb.validate(&h).unwrap();
    }

    #[test]
    fn contract_into_side_k23_example() {
        // K_{2,3} with the 3-side as A: contract both B-vertices plus one
        // A-vertex into B; the fresh B-vertex is a star centre over the two
        // remaining A-vertices.
        let (g, bip) = crate::constructions::gen_complete_bipartite(3, 2).unwrap();
        let a1 = bip.side_a().min().unwrap();
        let mut x = *bip.side_b();
        x.insert(a1);
        let (h, hb, fresh) = contract_into_side(&g, &bip, &x, Side::B).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.degree(fresh), 2);
        assert_eq!(
            h.neighbors(fresh),
            bip.side_a().difference(&VertexSet::singleton(a1))
        );
        hb.validate(&h).unwrap();
    }
}
