use kminor::constructions::gen_fig1;
use kminor::{find_t_cluster, SearchBudget};
use std::time::Instant;

fn main() {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let (g, _) = gen_fig1(k).unwrap();
    println!("fig1({k}): n={}, m={}", g.n(), g.edge_count());
    let start = Instant::now();
    let r = find_t_cluster(&g, 5, &SearchBudget::unlimited());
    println!("outcome: {:?}", r.outcome);
    println!("nodes: {}, wall: {:.3}s", r.nodes, start.elapsed().as_secs_f64());
}
