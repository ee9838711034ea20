//! Deterministic generators for the graph families used as examples,
//! counterexamples and extremal witnesses, plus the seeded random bipartite
//! generator the acceptance suites draw from.

use crate::bits::VertexSet;
use crate::graph::{Bipartition, Graph, GraphError};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("parameter {0} out of range: {1}")]
    BadParam(&'static str, String),
    #[error("missing parameter {0}")]
    MissingParam(&'static str),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The generated families, by their external names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum Family {
    complete_bipartite,
    fig1,
    fig1_apex,
    amplifier,
    apex_planar,
    geodesic,
    five_k35,
    random_bipartite_mindegA,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::complete_bipartite,
        Family::fig1,
        Family::fig1_apex,
        Family::amplifier,
        Family::apex_planar,
        Family::geodesic,
        Family::five_k35,
        Family::random_bipartite_mindegA,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::complete_bipartite => "complete_bipartite",
            Family::fig1 => "fig1",
            Family::fig1_apex => "fig1_apex",
            Family::amplifier => "amplifier",
            Family::apex_planar => "apex_planar",
            Family::geodesic => "geodesic",
            Family::five_k35 => "five_k35",
            Family::random_bipartite_mindegA => "random_bipartite_mindegA",
        }
    }

    pub fn parse(name: &str) -> Result<Family, GenError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| GenError::UnknownFamily(name.to_string()))
    }
}

/// A family plus its named integer parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, u64>,
}

impl FamilySpec {
    pub fn param(&self, key: &'static str) -> Result<u64, GenError> {
        self.params
            .get(key)
            .copied()
            .ok_or(GenError::MissingParam(key))
    }

    pub fn param_or(&self, key: &str, default: u64) -> u64 {
        self.params.get(key).copied().unwrap_or(default)
    }
}

fn positive(name: &'static str, v: u64) -> Result<usize, GenError> {
    if v == 0 {
        Err(GenError::BadParam(name, "must be >= 1".into()))
    } else {
        Ok(v as usize)
    }
}

/// `K_{m,n}` with side A being the m-side (ids `0..m`).
pub fn gen_complete_bipartite(m: usize, n: usize) -> Result<(Graph, Bipartition), GenError> {
    if m == 0 || n == 0 {
        return Err(GenError::BadParam("m,n", "sides must be nonempty".into()));
    }
    let mut edges = Vec::with_capacity(m * n);
    for a in 0..m {
        for b in m..m + n {
            edges.push((a, b));
        }
    }
    let g = Graph::from_edges(0..m + n, edges)?;
    let bip = Bipartition::new((0..m).collect(), (m..m + n).collect(), &g)?;
    Ok((g, bip))
}

/// `k` copies of `K_{3,5}` minus a 3-edge matching, glued along the three
/// matched 5-side vertices (which have degree two per copy).
///
/// Ids: the shared vertices are `0,1,2`; copy `i` owns `3+5i .. 3+5i+5`, its
/// three A-vertices first, then its two private 5-side vertices.
pub fn gen_fig1(k: usize) -> Result<(Graph, Bipartition), GenError> {
    let k = positive("k", k as u64)?;
    let mut edges = Vec::new();
    let mut a_side = VertexSet::new();
    for i in 0..k {
        let base = 3 + 5 * i;
        let xs = [base, base + 1, base + 2];
        let ys = [base + 3, base + 4];
        for (j, &x) in xs.iter().enumerate() {
            a_side.insert(x);
            for s in 0..3 {
                if s != j {
                    edges.push((s, x));
                }
            }
            for &y in &ys {
                edges.push((x, y));
            }
        }
    }
    let n = 3 + 5 * k;
    let g = Graph::from_edges(0..n, edges)?;
    let b_side = g.vertices().difference(&a_side);
    let bip = Bipartition::new(a_side, b_side, &g)?;
    Ok((g, bip))
}

/// [`gen_fig1`] plus one more B-side vertex adjacent to every vertex of A,
/// raising every A-degree from four to five.
pub fn gen_fig1_apex(k: usize) -> Result<(Graph, Bipartition), GenError> {
    let (g, bip) = gen_fig1(k)?;
    let apex = 3 + 5 * k;
    let mut verts: Vec<usize> = g.vertices().to_vec();
    verts.push(apex);
    let mut edges = g.edges();
    for a in bip.side_a() {
        edges.push((a, apex));
    }
    let h = Graph::from_edges(verts, edges)?;
    let mut b = *bip.side_b();
    b.insert(apex);
    let hb = Bipartition::new(*bip.side_a(), b, &h)?;
    Ok((h, hb))
}

/// Glue `k` disjoint copies of `g` by identifying the copies of the B-side
/// vertex `b`; optionally append one more B-side vertex adjacent to every
/// A-side vertex of the result.
///
/// The shared vertex becomes id `0`; copy `i` maps the remaining vertices in
/// ascending id order onto `1 + i(n-1) ..`.
pub fn gen_amplifier(
    g: &Graph,
    bip: &Bipartition,
    b: usize,
    k: usize,
    add_apex: bool,
) -> Result<(Graph, Bipartition), GenError> {
    let k = positive("k", k as u64)?;
    bip.validate(g)?;
    if !bip.side_b().contains(b) {
        return Err(GenError::Graph(GraphError::WrongSide(b, crate::graph::Side::B)));
    }
    let others: Vec<usize> = g.vertices().difference(&VertexSet::singleton(b)).to_vec();
    let m = others.len();
    let map = |copy: usize, v: usize| -> usize {
        if v == b {
            0
        } else {
            let rank = others.binary_search(&v).unwrap();
            1 + copy * m + rank
        }
    };
    let mut edges = BTreeSet::new();
    let mut a_side = VertexSet::new();
    let mut b_side = VertexSet::singleton(0);
    for copy in 0..k {
        for (u, v) in g.edges() {
            let (mu, mv) = (map(copy, u), map(copy, v));
            edges.insert((mu.min(mv), mu.max(mv)));
        }
        for &v in &others {
            if bip.side_a().contains(v) {
                a_side.insert(map(copy, v));
            } else {
                b_side.insert(map(copy, v));
            }
        }
    }
    let mut n = 1 + k * m;
    if add_apex {
        let apex = n;
        n += 1;
        b_side.insert(apex);
        for a in &a_side {
            edges.insert((a, apex));
        }
    }
    let h = Graph::from_edges(0..n, edges)?;
    let hb = Bipartition::new(a_side, b_side, &h)?;
    Ok((h, hb))
}

/// Icosahedron face list; vertex 0 is one pole, 11 the other.
const ICOSA_FACES: [[usize; 3]; 20] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 5, 1],
    [1, 6, 2],
    [2, 7, 3],
    [3, 8, 4],
    [4, 9, 5],
    [5, 10, 1],
    [2, 6, 7],
    [3, 7, 8],
    [4, 8, 9],
    [5, 9, 10],
    [1, 10, 6],
    [11, 7, 6],
    [11, 8, 7],
    [11, 9, 8],
    [11, 10, 9],
    [11, 6, 10],
];

/// The (m,0) triangular subdivision of the icosahedron: a planar
/// triangulation on `10m^2 + 2` vertices with exactly twelve vertices of
/// degree five and the rest of degree six.
///
/// Each face is split into `m^2` unit triangles on barycentric grid points;
/// grid points on shared edges and corners are identified globally.
pub fn gen_geodesic(m: usize) -> Result<Graph, GenError> {
    let m = positive("m", m as u64)?;
    // Global ids: corners 0..12, then edge-interior points, then
    // face-interior points, in deterministic scan order.
    let mut edge_ids: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut next = 12usize;
    let mut sorted_edges = BTreeSet::new();
    for f in &ICOSA_FACES {
        for (u, v) in [(f[0], f[1]), (f[1], f[2]), (f[0], f[2])] {
            sorted_edges.insert((u.min(v), u.max(v)));
        }
    }
    for &e in &sorted_edges {
        let ids: Vec<usize> = (0..m.saturating_sub(1)).map(|t| next + t).collect();
        next += ids.len();
        edge_ids.insert(e, ids);
    }

    // A grid point of face (A,B,C) has barycentric coordinates (i,j,l) with
    // i+j+l = m; its global id depends only on the geometric point.
    let global = |face: &[usize; 3], i: usize, j: usize, next: &mut usize,
                      face_ids: &mut BTreeMap<(usize, usize), usize>|
     -> usize {
        let l = m - i - j;
        let (a, b, c) = (face[0], face[1], face[2]);
        match (i == m, j == m, l == m) {
            (true, _, _) => return a,
            (_, true, _) => return b,
            (_, _, true) => return c,
            _ => {}
        }
        // Exactly one zero coordinate puts the point on an icosahedron edge.
        let on_edge = |u: usize, v: usize, steps_from_u: usize| -> usize {
            let key = (u.min(v), u.max(v));
            let t = if u < v { steps_from_u } else { m - steps_from_u };
            edge_ids[&key][t - 1]
        };
        if l == 0 {
            // On edge (a, b); j steps from a.
            on_edge(a, b, j)
        } else if j == 0 {
            on_edge(a, c, l)
        } else if i == 0 {
            on_edge(b, c, l)
        } else {
            *face_ids.entry((i, j)).or_insert_with(|| {
                let id = *next;
                *next += 1;
                id
            })
        }
    };

    let mut edges = BTreeSet::new();
    for face in &ICOSA_FACES {
        let mut face_ids = BTreeMap::new();
        // First pass allocates interior ids in scan order.
        let mut grid = BTreeMap::new();
        for i in (0..=m).rev() {
            for j in 0..=m - i {
                let id = global(face, i, j, &mut next, &mut face_ids);
                grid.insert((i, j), id);
            }
        }
        // Unit-triangle adjacency on the barycentric grid.
        for (&(i, j), &id) in &grid {
            for (di, dj) in [(0i64, 1i64), (-1, 1), (-1, 0)] {
                let (ni, nj) = (i as i64 + di, j as i64 + dj);
                if ni >= 0 && nj >= 0 && ni + nj <= m as i64 {
                    let nid = grid[&(ni as usize, nj as usize)];
                    edges.insert((id.min(nid), id.max(nid)));
                }
            }
        }
    }
    Ok(Graph::from_edges(0..next, edges)?)
}

/// [`gen_geodesic`] plus one universal vertex: `4|V| - 10` edges exactly and
/// minimum degree six, with no `K_6` minor.
pub fn gen_apex_planar(m: usize) -> Result<Graph, GenError> {
    let base = gen_geodesic(m)?;
    let apex = base.n();
    let mut verts: Vec<usize> = base.vertices().to_vec();
    verts.push(apex);
    let mut edges = base.edges();
    for v in base.vertices() {
        edges.push((v, apex));
    }
    Ok(Graph::from_edges(verts, edges)?)
}

/// Five disjoint copies of `K_{3,5}`, one degree-three vertex per copy wired
/// to two extra hub vertices: 42 vertices, bipartite, maximum degree five.
pub fn gen_five_k35() -> Graph {
    let mut edges = Vec::new();
    let hubs = [40usize, 41];
    for i in 0..5 {
        let base = 8 * i;
        for x in base..base + 3 {
            for y in base + 3..base + 8 {
                edges.push((x, y));
            }
        }
        let v = base + 3;
        for h in hubs {
            edges.push((v, h));
        }
    }
    Graph::from_edges(0..42, edges).expect("fixed construction")
}

/// Seeded random bipartite graph: every A-vertex gets a uniform random
/// `d`-subset of B as neighbours, then each remaining cross pair is added
/// independently with probability 0.1.
pub fn gen_random_bipartite_mindeg_a(
    n_a: usize,
    n_b: usize,
    d: usize,
    seed: u64,
) -> Result<(Graph, Bipartition), GenError> {
    if n_a == 0 || n_b == 0 {
        return Err(GenError::BadParam("nA,nB", "sides must be nonempty".into()));
    }
    if d > n_b {
        return Err(GenError::BadParam("d", format!("d={d} exceeds nB={n_b}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b_ids: Vec<usize> = (n_a..n_a + n_b).collect();
    let mut edges = BTreeSet::new();
    for a in 0..n_a {
        let mut pool = b_ids.clone();
        pool.shuffle(&mut rng);
        for &b in pool.iter().take(d) {
            edges.insert((a, b));
        }
    }
    for a in 0..n_a {
        for &b in &b_ids {
            if !edges.contains(&(a, b)) && rng.gen_bool(0.1) {
                edges.insert((a, b));
            }
        }
    }
    let g = Graph::from_edges(0..n_a + n_b, edges)?;
    let bip = Bipartition::new((0..n_a).collect(), (n_a..n_a + n_b).collect(), &g)?;
    Ok((g, bip))
}

/// Dispatch a [`FamilySpec`] to its generator. Families whose output is a
/// plain graph get a bipartition when they are bipartite.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, Option<Bipartition>), GenError> {
    match spec.family {
        Family::complete_bipartite => {
            let m = positive("m", spec.param("m")?)?;
            let n = positive("n", spec.param("n")?)?;
            let (g, b) = gen_complete_bipartite(m, n)?;
            Ok((g, Some(b)))
        }
        Family::fig1 => {
            let k = positive("k", spec.param("k")?)?;
            let (g, b) = gen_fig1(k)?;
            Ok((g, Some(b)))
        }
        Family::fig1_apex => {
            let k = positive("k", spec.param("k")?)?;
            let (g, b) = gen_fig1_apex(k)?;
            Ok((g, Some(b)))
        }
        Family::amplifier => Err(GenError::BadParam(
            "amplifier",
            "requires an input graph; use gen_amplifier or the CLI --graph-in flag".into(),
        )),
        Family::apex_planar => {
            let m = positive("m", spec.param("m")?)?;
            Ok((gen_apex_planar(m)?, None))
        }
        Family::geodesic => {
            let m = positive("m", spec.param("m")?)?;
            Ok((gen_geodesic(m)?, None))
        }
        Family::five_k35 => {
            let g = gen_five_k35();
            let b = g.bipartition();
            Ok((g, b))
        }
        Family::random_bipartite_mindegA => {
            let n_a = positive("nA", spec.param("nA")?)?;
            let n_b = positive("nB", spec.param("nB")?)?;
            let d = spec.param("d")? as usize;
            let seed = spec.param("seed")?;
            let (g, b) = gen_random_bipartite_mindeg_a(n_a, n_b, d, seed)?;
            Ok((g, Some(b)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_counts() {
        let (g, bip) = gen_complete_bipartite(3, 5).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 15));
        assert_eq!(bip.side_a().len(), 3);

        let (g, _) = gen_complete_bipartite(4, 8).unwrap();
        assert_eq!(g.edge_count(), 32); // 4n - 16 at n = 12

        let (g, _) = gen_complete_bipartite(1, 1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 1));
    }

    #[test]
    fn fig1_side_sizes_and_degrees() {
        for k in 1..=10 {
            let (g, bip) = gen_fig1(k).unwrap();
            assert_eq!(bip.side_a().len(), 3 * k);
            assert_eq!(bip.side_b().len(), 2 * k + 3);
            assert!(bip.side_a().iter().all(|a| g.degree(a) == 4));
            bip.validate(&g).unwrap();
        }
        let (h1, _) = gen_fig1(1).unwrap();
        assert_eq!((h1.n(), h1.edge_count()), (8, 12));
        let (g4, bip4) = gen_fig1(4).unwrap();
        assert_eq!((bip4.side_a().len(), bip4.side_b().len()), (12, 11));
        assert_eq!(g4.n(), 23);
    }

    #[test]
    fn fig1_apex_degrees() {
        let (g, bip) = gen_fig1_apex(4).unwrap();
        assert_eq!((bip.side_a().len(), bip.side_b().len()), (12, 12));
        assert!(bip.side_a().iter().all(|a| g.degree(a) == 5));

        let (g, bip) = gen_fig1_apex(1).unwrap();
        assert_eq!(g.n(), 9);
        assert!(bip.side_a().iter().all(|a| g.degree(a) == 5));

        let (_, bip) = gen_fig1_apex(2).unwrap();
        assert_eq!((bip.side_a().len(), bip.side_b().len()), (6, 8));
    }

    #[test]
    fn amplifier_examples() {
        let (g, bip) = gen_complete_bipartite(1, 1).unwrap();
        let b = bip.side_b().min().unwrap();

        // k = 1, no apex: unchanged up to relabelling.
        let (h, _) = gen_amplifier(&g, &bip, b, 1, false).unwrap();
        assert_eq!((h.n(), h.edge_count()), (g.n(), g.edge_count()));

        // k = 2 on K_{1,1} at its B-vertex: a path with two A-leaves.
        let (h, hb) = gen_amplifier(&g, &bip, b, 2, false).unwrap();
        assert_eq!((h.n(), h.edge_count()), (3, 2));
        assert_eq!(h.degree(0), 2);
        assert_eq!(hb.side_a().len(), 2);

        // Apex raises every A-degree by exactly one.
        let (base, base_bip) = gen_complete_bipartite(2, 3).unwrap();
        let bb = base_bip.side_b().min().unwrap();
        let (noapex, nb) = gen_amplifier(&base, &base_bip, bb, 2, false).unwrap();
        let (apex, ab) = gen_amplifier(&base, &base_bip, bb, 2, true).unwrap();
        assert_eq!(ab.side_a(), nb.side_a());
        for a in nb.side_a() {
            assert_eq!(apex.degree(a), noapex.degree(a) + 1);
        }
        // Side sizes: |C| = k|A|, |D| = k(|B|-1) + 1 (+1 with apex).
        assert_eq!(nb.side_a().len(), 2 * 2);
        assert_eq!(nb.side_b().len(), 2 * 2 + 1);
        assert_eq!(ab.side_b().len(), 2 * 2 + 2);

        // Wrong side rejected.
        let a = base_bip.side_a().min().unwrap();
        assert!(gen_amplifier(&base, &base_bip, a, 2, false).is_err());
    }

    #[test]
    fn geodesic_icosahedron() {
        let g = gen_geodesic(1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 30));
        assert!(g.vertices().iter().all(|v| g.degree(v) == 5));
    }

    #[test]
    fn geodesic_counts() {
        for m in 1..=3 {
            let g = gen_geodesic(m).unwrap();
            assert_eq!(g.n(), 10 * m * m + 2);
            assert_eq!(g.edge_count(), 3 * g.n() - 6);
            let deg5 = g.vertices().iter().filter(|&v| g.degree(v) == 5).count();
            let deg6 = g.vertices().iter().filter(|&v| g.degree(v) == 6).count();
            assert_eq!(deg5, 12);
            assert_eq!(deg6, 10 * m * m - 10);
        }
    }

    #[test]
    fn apex_planar_edge_formula() {
        for m in 1..=2 {
            let g = gen_apex_planar(m).unwrap();
            assert_eq!(g.edge_count(), 4 * g.n() - 10);
            assert_eq!(g.min_degree(), 6);
        }
        let g = gen_apex_planar(1).unwrap();
        assert_eq!((g.n(), g.edge_count()), (13, 42));
        let g = gen_apex_planar(2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (43, 162));
    }

    #[test]
    fn five_k35_shape() {
        let g = gen_five_k35();
        assert_eq!(g.n(), 42);
        assert_eq!(g.max_degree(), 5);
        assert!(g.bipartition().is_some());
        let avg = 2.0 * g.edge_count() as f64 / g.n() as f64;
        assert!(avg >= 4.0);
        // The five chosen v_i have degree five: three in their copy, two hubs.
        for i in 0..5 {
            assert_eq!(g.degree(8 * i + 3), 5);
        }
    }

    #[test]
    fn random_bipartite_generator() {
        // d = nB forces the complete bipartite graph.
        let (g, _) = gen_random_bipartite_mindeg_a(6, 6, 6, 77).unwrap();
        assert_eq!(g.edge_count(), 36);

        let (g, bip) = gen_random_bipartite_mindeg_a(8, 6, 6, 3).unwrap();
        assert!(bip.side_a().iter().all(|a| g.degree(a) == 6));

        // Determinism under a fixed seed.
        let (g1, _) = gen_random_bipartite_mindeg_a(7, 9, 4, 123).unwrap();
        let (g2, _) = gen_random_bipartite_mindeg_a(7, 9, 4, 123).unwrap();
        assert_eq!(g1.edges(), g2.edges());
        let (g3, _) = gen_random_bipartite_mindeg_a(7, 9, 4, 124).unwrap();
        assert_ne!(g1.edges(), g3.edges());

        assert!(gen_random_bipartite_mindeg_a(3, 2, 5, 0).is_err());
    }
}
