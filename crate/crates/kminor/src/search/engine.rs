//! The exact t-cluster branch-and-bound.
//!
//! The search grows `t` rooted branch sets. Canonical form kills the set
//! symmetry: the root of a set is its smallest member, and roots are chosen
//! in increasing order, so every cluster is explored exactly once up to the
//! labelling of its sets.
//!
//! From a rooted state the search picks the unlinked pair of sets with the
//! fewest growth options (fail-first) and branches on attaching one frontier
//! vertex to either set. Pruning:
//!   (a) a set can only ever grow inside its reachable region (free vertices
//!       above its root), so a pair with no potential edge between regions
//!       is dead;
//!   (b) growth candidates for a pair are restricted to corridor components
//!       that still touch the other set's region;
//!   (c) states whose subtree already failed are remembered and skipped.
//!
//! Vertices are relabelled by descending degree before the search, which
//! makes the root layering bite: once the first root passes the hubs, the
//! remaining graph is too sparse to link and whole root families die at
//! placement time.

use std::collections::HashSet;
use std::hash::{BuildHasherDefault, Hasher};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

/// Compact graph for the engine: vertices `0..n`, `n <= 128`, bitset rows.
pub(crate) struct Compact {
    pub n: usize,
    pub adj: Vec<u128>,
    /// Compact index -> original vertex id.
    pub ids: Vec<usize>,
}

pub(crate) const ENGINE_CAP: usize = 128;
const MAX_T: usize = 8;
const MEMO_CAP: usize = 1 << 20;

impl Compact {
    pub fn from_graph(g: &crate::graph::Graph) -> Option<Compact> {
        let mut ids: Vec<usize> = g.vertices().to_vec();
        if ids.len() > ENGINE_CAP {
            return None;
        }
        ids.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let index_of = |v: usize| ids.iter().position(|&x| x == v).unwrap();
        let mut adj = vec![0u128; ids.len()];
        for (u, v) in g.edges() {
            let (iu, iv) = (index_of(u), index_of(v));
            adj[iu] |= 1 << iv;
            adj[iv] |= 1 << iu;
        }
        Some(Compact {
            n: ids.len(),
            adj,
            ids,
        })
    }
}

/// Multiply-fold hasher for the memo keys; the keys are already uniform
/// bit soup, so SipHash buys nothing here.
#[derive(Default)]
struct FoldHasher(u64);

impl Hasher for FoldHasher {
    fn write(&mut self, bytes: &[u8]) {
        for chunk in bytes.chunks(8) {
            let mut w = [0u8; 8];
            w[..chunk.len()].copy_from_slice(chunk);
            self.0 = (self.0 ^ u64::from_le_bytes(w)).wrapping_mul(0x9e37_79b9_7f4a_7c15);
            self.0 ^= self.0 >> 29;
        }
    }
    fn finish(&self) -> u64 {
        self.0
    }
}

type MemoSet = HashSet<[u128; MAX_T], BuildHasherDefault<FoldHasher>>;

pub(crate) enum EngineOutcome {
    Found(Vec<u128>),
    Absent,
    Timeout,
}

enum Flow {
    Found,
    Exhausted,
    Aborted,
}

/// Shared controls so parallel workers can stop each other and share the
/// node budget.
pub(crate) struct Controls {
    pub stop: AtomicBool,
    pub nodes: AtomicU64,
    pub node_limit: u64,
    pub deadline: Option<Instant>,
    pub timed_out: AtomicBool,
}

impl Controls {
    pub fn new(node_limit: u64, deadline: Option<Instant>) -> Self {
        Controls {
            stop: AtomicBool::new(false),
            nodes: AtomicU64::new(0),
            node_limit,
            deadline,
            timed_out: AtomicBool::new(false),
        }
    }
}

pub(crate) struct Engine<'a> {
    adj: &'a [u128],
    n: usize,
    t: usize,
    all: u128,
    sets: [u128; MAX_T],
    set_nbrs: [u128; MAX_T],
    allowed: [u128; MAX_T],
    used: u128,
    /// linked[i] has bit j set when sets i and j already touch.
    linked: [u16; MAX_T],
    controls: &'a Controls,
    local_nodes: u64,
    memo: MemoSet,
    solution: Option<Vec<u128>>,
    /// Worker stride over root combinations (index, modulus).
    stride: (u64, u64),
    combo_counter: u64,
}

impl<'a> Engine<'a> {
    pub fn new(c: &'a Compact, t: usize, controls: &'a Controls, stride: (u64, u64)) -> Engine<'a> {
        Engine {
            adj: &c.adj,
            n: c.n,
            t,
            all: if c.n == 128 { !0 } else { (1u128 << c.n) - 1 },
            sets: [0; MAX_T],
            set_nbrs: [0; MAX_T],
            allowed: [0; MAX_T],
            used: 0,
            linked: [0; MAX_T],
            controls,
            local_nodes: 0,
            memo: MemoSet::default(),
            solution: None,
            stride,
            combo_counter: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.local_nodes
    }

    pub fn run(&mut self) -> EngineOutcome {
        if self.t == 0 {
            return EngineOutcome::Found(Vec::new());
        }
        if self.t > self.n {
            return EngineOutcome::Absent;
        }
        if self.t > MAX_T {
            return EngineOutcome::Timeout;
        }
        match self.choose_roots(0, 0) {
            Flow::Found => EngineOutcome::Found(self.solution.take().unwrap()),
            Flow::Exhausted => EngineOutcome::Absent,
            Flow::Aborted => EngineOutcome::Timeout,
        }
    }

    fn charge_node(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes % 1024 == 0 {
            let total = self
                .controls
                .nodes
                .fetch_add(1024, Ordering::Relaxed)
                .wrapping_add(1024);
            if total > self.controls.node_limit {
                self.controls.timed_out.store(true, Ordering::Relaxed);
                self.controls.stop.store(true, Ordering::Relaxed);
                return false;
            }
            if let Some(d) = self.controls.deadline {
                if Instant::now() >= d {
                    self.controls.timed_out.store(true, Ordering::Relaxed);
                    self.controls.stop.store(true, Ordering::Relaxed);
                    return false;
                }
            }
            if self.controls.stop.load(Ordering::Relaxed) {
                return false;
            }
        }
        true
    }

    fn choose_roots(&mut self, depth: usize, min_root: usize) -> Flow {
        if depth == self.t {
            self.combo_counter += 1;
            if (self.combo_counter - 1) % self.stride.1 != self.stride.0 {
                return Flow::Exhausted;
            }
            return self.link_dfs();
        }
        // Leave room for the remaining roots.
        let hi = self.n - (self.t - depth - 1);
        for r in min_root..hi {
            let bit = 1u128 << r;
            self.sets[depth] = bit;
            self.set_nbrs[depth] = self.adj[r];
            self.allowed[depth] = self.all & !((bit << 1).wrapping_sub(1));
            self.used |= bit;
            for j in 0..depth {
                if self.adj[r] & self.sets[j] != 0 {
                    self.linked[depth] |= 1 << j;
                    self.linked[j] |= 1 << depth;
                }
            }
            let flow = if self.roots_viable(depth) {
                self.choose_roots(depth + 1, r + 1)
            } else {
                Flow::Exhausted
            };
            self.used &= !bit;
            self.sets[depth] = 0;
            self.set_nbrs[depth] = 0;
            for j in 0..depth {
                self.linked[j] &= !(1u16 << depth);
            }
            self.linked[depth] = 0;
            match flow {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        Flow::Exhausted
    }

    /// Placed roots must already be pairwise linkable; this kills whole
    /// families of root completions as soon as the layering isolates one.
    fn roots_viable(&mut self, depth: usize) -> bool {
        if depth == 0 {
            return true;
        }
        let mut reach = [0u128; MAX_T];
        for i in 0..=depth {
            reach[i] = self.reach(i);
        }
        for i in 0..=depth {
            let nbrs = self.nbrs_of(reach[i]);
            for j in i + 1..=depth {
                if self.linked[i] & (1 << j) == 0 && nbrs & reach[j] == 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Reachable region of set `i`: its vertices plus every free vertex above
    /// its root that a growth sequence could absorb.
    fn reach(&self, i: usize) -> u128 {
        let free = !self.used & self.allowed[i];
        let mut comp = self.sets[i];
        let mut frontier = comp;
        while frontier != 0 {
            let mut nbrs = 0u128;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                nbrs |= self.adj[v];
            }
            frontier = nbrs & free & !comp;
            comp |= frontier;
        }
        comp
    }

    fn nbrs_of(&self, mask: u128) -> u128 {
        let mut out = 0u128;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= self.adj[v];
        }
        out
    }

    /// Growth candidates for the pair (i, j) on side i: frontier vertices of
    /// set i whose corridor component still reaches the region of j.
    fn corridor_candidates(&self, i: usize, reach_i: u128, reach_j: u128) -> u128 {
        let frontier = self.set_nbrs[i] & !self.used & self.allowed[i];
        if frontier == 0 {
            return 0;
        }
        // Components of the reachable region minus the set itself; keep the
        // ones that touch something adjacent to reach_j.
        let mut keep = 0u128;
        let mut rest = reach_i & !self.sets[i];
        let touch = self.nbrs_of(reach_j);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let mut comp = 1u128 << v;
            let mut fr = comp;
            while fr != 0 {
                fr = self.nbrs_of(fr) & rest & !comp;
                comp |= fr;
            }
            rest &= !comp;
            if comp & touch != 0 {
                keep |= comp;
            }
        }
        frontier & keep
    }

    fn link_dfs(&mut self) -> Flow {
        if !self.charge_node() {
            return Flow::Aborted;
        }
        if self.memo.contains(&self.sets) {
            return Flow::Exhausted;
        }

        let full: u16 = ((1u32 << self.t) - 1) as u16;
        let mut reach = [0u128; MAX_T];
        let mut reach_nbrs = [0u128; MAX_T];
        let mut need = [0u16; MAX_T];
        let mut any_unlinked = false;
        for i in 0..self.t {
            need[i] = full & !self.linked[i] & !(1 << i);
            if need[i] != 0 {
                any_unlinked = true;
            }
        }
        if !any_unlinked {
            self.solution = Some(self.sets[..self.t].to_vec());
            return Flow::Found;
        }
        for i in 0..self.t {
            if need[i] != 0 {
                reach[i] = self.reach(i);
                reach_nbrs[i] = self.nbrs_of(reach[i]);
            }
        }

        // Fail-first: every unlinked pair must stay linkable; pick the one
        // with the fewest immediate growth moves.
        let mut best: Option<(usize, usize, u32)> = None;
        for i in 0..self.t {
            let mut js = need[i] & !((1u32 << (i + 1)) - 1) as u16;
            while js != 0 {
                let j = js.trailing_zeros() as usize;
                js &= js - 1;
                if reach_nbrs[i] & reach[j] == 0 {
                    return Flow::Exhausted;
                }
                let cand = (self.set_nbrs[i] & !self.used & self.allowed[i]).count_ones()
                    + (self.set_nbrs[j] & !self.used & self.allowed[j]).count_ones();
                if best.map_or(true, |(_, _, c)| cand < c) {
                    best = Some((i, j, cand));
                }
            }
        }
        let (i, j, _) = best.unwrap();

        let cand_i = self.corridor_candidates(i, reach[i], reach[j]);
        let cand_j = self.corridor_candidates(j, reach[j], reach[i]);
        if cand_i == 0 && cand_j == 0 {
            return Flow::Exhausted;
        }
        for (side, cand) in [(i, cand_i), (j, cand_j)] {
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                let saved_nbrs = self.set_nbrs[side];
                let saved_linked = self.linked;
                let bit = 1u128 << v;
                self.sets[side] |= bit;
                self.used |= bit;
                self.set_nbrs[side] |= self.adj[v];
                for k in 0..self.t {
                    if k != side && self.adj[v] & self.sets[k] != 0 {
                        self.linked[side] |= 1 << k;
                        self.linked[k] |= 1 << side;
                    }
                }
                let flow = self.link_dfs();
                self.sets[side] &= !bit;
                self.used &= !bit;
                self.set_nbrs[side] = saved_nbrs;
                self.linked = saved_linked;
                match flow {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
        }
        // Remember the failed state; growth orders form a DAG, so revisits
        // dominate the tree without this.
        if self.memo.len() < MEMO_CAP {
            self.memo.insert(self.sets);
        }
        Flow::Exhausted
    }
}
