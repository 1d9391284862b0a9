//! Per-edge random rank keys realizing weighted random contraction.
//!
//! An edge of weight `w` draws its rank from the distribution of the minimum
//! of `w` independent uniforms, so the minimum-rank edge over the whole graph
//! is distributed proportionally to weight. Instead of the raw rank
//! `r = 1 - (1-t)^(1/w)` we store the key `-ln(1-t) / w`, a strictly
//! increasing transform of `r` (`-ln(1-r) = -ln(1-t)/w`) that stays well
//! separated in double precision even when `w` is huge and `r` underflows
//! toward zero. Edge ids break exact key ties, so the order over edges is
//! always strict and total.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, VertexSet, WeightedGraph};

/// Default master seed used by the CLI when none is given.
pub const DEFAULT_SEED: u64 = 0x6b65_6370;

/// Deterministic source of independent trial substreams.
///
/// Trial `i` of a stream is an independent ChaCha stream derived from
/// `(master, i)`; `substream` splits off statistically independent child
/// streams so that concurrent consumers never share randomness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeedStream {
    master: u64,
}

impl SeedStream {
    pub fn new(master: u64) -> Self {
        SeedStream { master }
    }

    pub fn master(&self) -> u64 {
        self.master
    }

    /// Child stream `index`, independent of this one and of other indices.
    pub fn substream(&self, index: u64) -> SeedStream {
        SeedStream {
            master: splitmix64(
                self.master
                    .wrapping_add((index.wrapping_add(1)).wrapping_mul(0x9e37_79b9_7f4a_7c15)),
            ),
        }
    }

    pub(crate) fn trial_rng(&self, trial: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(trial);
        rng
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Comparison key for one uniform draw `t in [0,1)` on an edge of weight
/// `weight`: `-ln(1-t) / weight`. Orders edges exactly as the rank
/// `1 - (1-t)^(1/weight)` would.
pub fn sample_rank(weight: u64, draw: f64) -> Result<f64> {
    if weight == 0 {
        return Err(Error::RankWeightZero);
    }
    if !(0.0..1.0).contains(&draw) {
        return Err(Error::DrawOutOfRange { draw });
    }
    Ok(-(-draw).ln_1p() / weight as f64)
}

/// Strict total order over edges: key bits first, edge id as tie-break.
/// Keys are non-negative finite doubles, so their IEEE bit patterns order
/// exactly like the values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRank {
    bits: u64,
    pub edge: EdgeId,
}

impl EdgeRank {
    fn new(key: f64, edge: EdgeId) -> Self {
        debug_assert!(key.is_finite() && key >= 0.0);
        EdgeRank {
            bits: key.to_bits(),
            edge,
        }
    }

    pub fn key(&self) -> f64 {
        f64::from_bits(self.bits)
    }
}

/// One rank function: a key per edge, reproducible from `(seed, trial)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RankAssignment {
    keys: Vec<f64>,
    seed: u64,
    trial: u64,
}

impl RankAssignment {
    pub fn key(&self, e: EdgeId) -> f64 {
        self.keys[e]
    }

    pub fn order_key(&self, e: EdgeId) -> EdgeRank {
        EdgeRank::new(self.keys[e], e)
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn trial(&self) -> u64 {
        self.trial
    }

    /// Edge holding the minimum key, by the strict total order.
    pub fn min_edge(&self) -> Option<EdgeId> {
        (0..self.keys.len()).map(|e| self.order_key(e)).min().map(|r| r.edge)
    }
}

/// Samples an independent key for every edge of `g` from trial `trial` of
/// `stream`. Pure: the same `(graph, stream, trial)` always yields the same
/// assignment.
pub fn sample_assignment(g: &WeightedGraph, stream: &SeedStream, trial: u64) -> RankAssignment {
    let mut rng = stream.trial_rng(trial);
    let keys = g
        .edges()
        .iter()
        .map(|e| {
            let t: f64 = rng.random();
            sample_rank(e.weight, t).expect("weights are >= 1 and draws are in [0,1)")
        })
        .collect();
    RankAssignment {
        keys,
        seed: stream.master(),
        trial,
    }
}

/// Testing oracle: does `s` respect the rank assignment `r`?
///
/// Builds the full minimum spanning tree under the key order and checks that
/// exactly one MST edge crosses the cut of `s` and that this crossing edge
/// outranks every MST edge inside the induced subgraph on `s`. Costs a full
/// MST build; the search algorithms never call this.
pub fn respects(g: &WeightedGraph, s: &VertexSet, r: &RankAssignment) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if s.len() == g.vertex_count() {
        return Err(Error::FullVertexSet);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    order.sort_unstable_by_key(|&e| r.order_key(e));
    let mut dsu = DisjointSets::new(g.vertex_count());
    let mut mst = Vec::with_capacity(g.vertex_count().saturating_sub(1));
    for e in order {
        let edge = g.edge(e);
        if dsu.union(edge.u, edge.v) {
            mst.push(e);
        }
    }
    let mut crossing = None;
    let mut max_inside: Option<EdgeRank> = None;
    for &e in &mst {
        let edge = g.edge(e);
        match (s.contains(edge.u), s.contains(edge.v)) {
            (true, true) => {
                let rank = r.order_key(e);
                if max_inside.map_or(true, |m| rank > m) {
                    max_inside = Some(rank);
                }
            }
            (true, false) | (false, true) => {
                if crossing.is_some() {
                    return Ok(false);
                }
                crossing = Some(r.order_key(e));
            }
            (false, false) => {}
        }
    }
    match crossing {
        Some(c) => Ok(max_inside.map_or(true, |m| c > m)),
        None => Ok(false),
    }
}


struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: VertexId, y: VertexId) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        match self.rank[rx].cmp(&self.rank[ry]) {
            std::cmp::Ordering::Less => self.parent[rx] = ry,
            std::cmp::Ordering::Greater => self.parent[ry] = rx,
            std::cmp::Ordering::Equal => {
                self.parent[ry] = rx;
                self.rank[rx] += 1;
            }
        }
        true
    }
}
