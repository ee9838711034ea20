//! Exact `K_t`-minor detection: the budgeted branch-and-bound search, the
//! brute-force oracle it is cross-checked against, safe preprocessing, and
//! the constructive finder for small `t` on bipartite graphs.

mod engine;
mod oracle;
mod reduce;
mod small_t;

pub use oracle::{brute_force_t_cluster, OracleError, ORACLE_MAX_VERTICES};
pub use reduce::reduce_for_minor;
pub use small_t::{find_small_minor_bipartite, SmallMinorError};

use crate::bits::VertexSet;
use crate::cluster::{validate_cluster, Cluster};
use crate::graph::Graph;
use engine::{Compact, Controls, Engine, EngineOutcome};
use std::time::{Duration, Instant};

/// Which resources a search may burn before giving up.
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Self {
        assert!(node_limit > 0 && time_limit > Duration::ZERO);
        SearchBudget {
            node_limit,
            time_limit: Some(time_limit),
        }
    }

    pub fn nodes(node_limit: u64) -> Self {
        assert!(node_limit > 0);
        SearchBudget {
            node_limit,
            time_limit: None,
        }
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            node_limit: u64::MAX,
            time_limit: None,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::unlimited()
    }
}

/// Answer of [`find_t_cluster`]: a certificate, a proof of absence, or an
/// exhausted budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Cluster),
    Absent,
    Timeout,
}

impl SearchOutcome {
    pub fn cluster(&self) -> Option<&Cluster> {
        match self {
            SearchOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
    pub wall: Duration,
}

/// Search for a t-cluster in `g`.
///
/// `Found` certificates always pass [`validate_cluster`]; `Absent` means the
/// search space was exhausted, so `g` provably has no `K_t` minor; `Timeout`
/// is inconclusive. Instances with more than 128 vertices after reduction
/// are refused as `Timeout`.
pub fn find_t_cluster(g: &Graph, t: usize, budget: &SearchBudget) -> SearchResult {
    find_t_cluster_with_workers(g, t, budget, 1)
}

/// Like [`find_t_cluster`] but fanning the root choices of the search out to
/// `workers` threads. The first certificate wins; absence needs every worker
/// exhausted.
pub fn find_t_cluster_with_workers(
    g: &Graph,
    t: usize,
    budget: &SearchBudget,
    workers: usize,
) -> SearchResult {
    let start = Instant::now();
    let deadline = budget.time_limit.map(|d| start + d);
    let mut total_nodes = 0u64;

    let finish = |outcome: SearchOutcome, nodes: u64, start: Instant| SearchResult {
        outcome,
        nodes,
        wall: start.elapsed(),
    };

    if t == 0 {
        return finish(SearchOutcome::Found(Cluster::new(Vec::new())), 0, start);
    }
    if g.n() < t {
        return finish(SearchOutcome::Absent, 0, start);
    }

    // Safe shrinking first (valid for t >= 4), then split into components:
    // for t >= 2 a cluster is connected, so it lives inside one of them.
    let reduced = if t >= 4 {
        Some(reduce::reduce_with_map(g, t))
    } else {
        None
    };
    let work = reduced.as_ref().map_or(g, |r| &r.graph);
    if work.n() < t {
        return finish(SearchOutcome::Absent, 0, start);
    }

    let parts: Vec<Graph> = if t >= 2 {
        work.components()
            .into_iter()
            .map(|c| work.induced_subgraph(&c).unwrap())
            .collect()
    } else {
        vec![work.clone()]
    };

    let mut timed_out = false;
    for part in &parts {
        if part.n() < t {
            continue;
        }
        let Some(compact) = Compact::from_graph(part) else {
            timed_out = true;
            continue;
        };
        let controls = Controls::new(budget.node_limit, deadline);
        let (outcome, nodes) = run_engines(&compact, t, &controls, workers);
        total_nodes += nodes;
        match outcome {
            EngineOutcome::Found(masks) => {
                let mut cluster = cluster_from_masks(&compact, &masks);
                if let Some(r) = &reduced {
                    cluster = lift_through_reduction(&cluster, &r.preimage);
                }
                let cluster = minimize_cluster(g, cluster);
                debug_assert_eq!(validate_cluster(g, &cluster, t), Ok(()));
                return finish(SearchOutcome::Found(cluster), total_nodes, start);
            }
            EngineOutcome::Absent => {}
            EngineOutcome::Timeout => timed_out = true,
        }
    }
    if timed_out {
        finish(SearchOutcome::Timeout, total_nodes, start)
    } else {
        finish(SearchOutcome::Absent, total_nodes, start)
    }
}

fn run_engines(
    compact: &Compact,
    t: usize,
    controls: &Controls,
    workers: usize,
) -> (EngineOutcome, u64) {
    if workers <= 1 {
        let mut eng = Engine::new(compact, t, controls, (0, 1));
        let outcome = eng.run();
        return (outcome, eng.nodes());
    }
    let results: Vec<(EngineOutcome, u64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    let mut eng = Engine::new(compact, t, controls, (w as u64, workers as u64));
                    let outcome = eng.run();
                    if matches!(outcome, EngineOutcome::Found(_)) {
                        controls.stop.store(true, std::sync::atomic::Ordering::Relaxed);
                    }
                    (outcome, eng.nodes())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut nodes = 0;
    let mut found = None;
    let mut timed_out = false;
    for (outcome, n) in results {
        nodes += n;
        match outcome {
            EngineOutcome::Found(m) if found.is_none() => found = Some(m),
            EngineOutcome::Timeout => timed_out = true,
            _ => {}
        }
    }
    // A worker aborted by the winner's stop flag reports Timeout; the find
    // takes precedence, and a genuine budget blowout is flagged separately.
    let outcome = if let Some(m) = found {
        EngineOutcome::Found(m)
    } else if timed_out || controls.timed_out.load(std::sync::atomic::Ordering::Relaxed) {
        EngineOutcome::Timeout
    } else {
        EngineOutcome::Absent
    };
    (outcome, nodes)
}

fn cluster_from_masks(c: &Compact, masks: &[u128]) -> Cluster {
    Cluster::new(
        masks
            .iter()
            .map(|&mask| {
                let mut s = VertexSet::new();
                let mut m = mask;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    s.insert(c.ids[v]);
                }
                s
            })
            .collect(),
    )
}

fn lift_through_reduction(
    cluster: &Cluster,
    preimage: &std::collections::BTreeMap<usize, VertexSet>,
) -> Cluster {
    Cluster::new(
        cluster
            .branch_sets()
            .iter()
            .map(|s| {
                let mut out = VertexSet::new();
                for v in s {
                    out.union_with(&preimage[&v]);
                }
                out
            })
            .collect(),
    )
}

/// Greedily drop vertices from branch sets while the certificate stays
/// valid; smaller certificates are easier to audit.
pub fn minimize_cluster(g: &Graph, cluster: Cluster) -> Cluster {
    let mut sets: Vec<VertexSet> = cluster.branch_sets().to_vec();
    let t = sets.len();
    loop {
        let mut changed = false;
        for i in 0..t {
            let members: Vec<usize> = sets[i].to_vec();
            for &v in members.iter().rev() {
                if sets[i].len() == 1 {
                    break;
                }
                let mut candidate = sets[i];
                candidate.remove(v);
                if !g.is_connected_set(&candidate) {
                    continue;
                }
                let nbrs = g.neighbors_of_set(&candidate);
                let still_linked = (0..t)
                    .filter(|&j| j != i)
                    .all(|j| nbrs.intersects(&sets[j]));
                if still_linked {
                    sets[i] = candidate;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Cluster::new(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gen_complete_bipartite, gen_fig1};
    use crate::graph::make;

    fn outcome(g: &Graph, t: usize) -> SearchOutcome {
        find_t_cluster(g, t, &SearchBudget::unlimited()).outcome
    }

    #[test]
    fn k6_minus_an_edge_has_no_k6() {
        let k6 = make::complete(6);
        assert!(matches!(outcome(&k6, 6), SearchOutcome::Found(_)));
        let mut edges = k6.edges();
        edges.retain(|&e| e != (0, 1));
        let g = Graph::from_edges(0..6, edges).unwrap();
        assert_eq!(outcome(&g, 6), SearchOutcome::Absent);
        assert!(matches!(outcome(&g, 5), SearchOutcome::Found(_)));
    }

    #[test]
    fn k35_has_no_k5() {
        let (g, _) = gen_complete_bipartite(3, 5).unwrap();
        assert_eq!(outcome(&g, 5), SearchOutcome::Absent);
        assert_eq!(
            brute_force_t_cluster(&g, 5).unwrap().is_some(),
            false
        );
    }

    #[test]
    fn certificates_validate_and_are_small() {
        let g = make::complete(7);
        let SearchOutcome::Found(c) = outcome(&g, 6) else {
            panic!("K7 has a K6 minor")
        };
        assert_eq!(validate_cluster(&g, &c, 6), Ok(()));
        assert_eq!(c.support().len(), 6, "minimized to singletons");
    }

    #[test]
    fn timeout_fires_on_tiny_node_budget() {
        let (g, _) = gen_fig1(3).unwrap();
        let r = find_t_cluster(&g, 5, &SearchBudget::nodes(10));
        assert_eq!(r.outcome, SearchOutcome::Timeout);
    }

    #[test]
    fn cluster_found_in_second_component() {
        // A triangle component plus a K5 component.
        let mut edges = vec![(0, 1), (1, 2), (0, 2)];
        for u in 3..8 {
            for v in u + 1..8 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(0..8, edges).unwrap();
        assert!(matches!(outcome(&g, 5), SearchOutcome::Found(_)));
        assert_eq!(outcome(&g, 6), SearchOutcome::Absent);
    }

    #[test]
    fn monotone_in_t() {
        let (g, _) = gen_complete_bipartite(4, 6).unwrap();
        let mut last_found = true;
        for t in 1..=8 {
            let found = matches!(outcome(&g, t), SearchOutcome::Found(_));
            assert!(
                !found || last_found,
                "a K_{t} minor without a K_{} minor",
                t - 1
            );
            last_found = found;
        }
    }
}
