//! Global partition algorithms: the recursive-mincut baseline and the
//! local-cut driven partition with volume and cardinality parameter
//! schedules.
//!
//! Both compute the maximal k-edge-connected partition: the unique partition
//! of the vertices where every part induces a k-edge-connected subgraph and
//! no union of parts does. The baseline recursively splits along global
//! minimum cuts. The local algorithm first peels off small sets found by the
//! amplified local search, then splits the residue along one global minimum
//! cut, recursing only into the side that kept more than half of the edges;
//! the peeling keeps that recursion shallow.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{VertexId, VertexSet, WeightedGraph};
use crate::local::{
    build_trial_structures, local_kcut_cardinality, local_kcut_volume, trial_count, LocalCutQuery,
    LocalCutOutcome,
};
use crate::mincut::{global_mincut, mincut_atleast};
use crate::rank::SeedStream;

/// Default constant in the trial-count formula
/// `ceil(c * sigma*(sigma-1)/2 * ln n)`.
pub const DEFAULT_TRIALS_CONSTANT: f64 = 2.0;

/// A partition of the vertices `0..n`, normalized: parts sorted internally
/// and ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    k: u64,
    n: usize,
    parts: Vec<Vec<VertexId>>,
}

impl Partition {
    pub fn new(k: u64, n: usize, parts: Vec<Vec<VertexId>>) -> Partition {
        let mut parts: Vec<Vec<VertexId>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p.dedup();
                p
            })
            .filter(|p| !p.is_empty())
            .collect();
        parts.sort_unstable();
        Partition { k, n, parts }
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Vec<VertexId>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part index of every vertex. Panics if the parts do not cover `0..n`
    /// disjointly.
    pub fn part_assignment(&self) -> Vec<usize> {
        let mut assignment = vec![usize::MAX; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                assert!(assignment[v] == usize::MAX, "vertex {v} in two parts");
                assignment[v] = i;
            }
        }
        assert!(
            assignment.iter().all(|&a| a != usize::MAX),
            "parts do not cover all vertices"
        );
        assignment
    }

    pub fn same_part(&self, u: VertexId, v: VertexId) -> bool {
        let assignment = self.part_assignment();
        assignment[u] == assignment[v]
    }

    /// True when every part of `self` is contained in some part of
    /// `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.n != coarser.n {
            return false;
        }
        let coarse = coarser.part_assignment();
        self.parts.iter().all(|part| {
            let target = coarse[part[0]];
            part.iter().all(|&v| coarse[v] == target)
        })
    }
}

/// Bounds and trial count driving one level of the local algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalCutParams {
    /// Strict volume bound; `None` in the cardinality variant.
    pub volume_bound: Option<u64>,
    /// Strict cardinality bound.
    pub size_bound: usize,
    /// Independent rank assignments per local search.
    pub trials: usize,
}

/// Which local-search parameterization drives the partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Volume,
    Cardinality,
    Auto,
}

/// Resolves `Auto` for a graph of `m` edges and `n` vertices: the
/// cardinality variant wins in the dense regime `m >= n^(16/15)`.
pub fn resolve_variant(m: usize, n: usize, variant: Variant) -> Variant {
    match variant {
        Variant::Auto => {
            if (m as f64) >= (n.max(1) as f64).powf(16.0 / 15.0) {
                Variant::Cardinality
            } else {
                Variant::Volume
            }
        }
        v => v,
    }
}

/// Bounds for one graph size: volume variant uses
/// `nu = max(2, ceil((m ln n)^(1/4)))` with the trivial `sigma = nu`;
/// cardinality variant uses `sigma = max(2, ceil((n (ln n)^2)^(1/5)))`
/// with unbounded volume.
pub fn parameter_schedule(m: usize, n: usize, variant: Variant) -> LocalCutParams {
    parameter_schedule_with(m, n, variant, DEFAULT_TRIALS_CONSTANT)
}

pub fn parameter_schedule_with(m: usize, n: usize, variant: Variant, c: f64) -> LocalCutParams {
    let ln_n = (n.max(1) as f64).ln();
    match resolve_variant(m, n, variant) {
        Variant::Volume => {
            let nu = (((m as f64) * ln_n).powf(0.25).ceil() as u64).max(2);
            let sigma = nu as usize;
            LocalCutParams {
                volume_bound: Some(nu),
                size_bound: sigma,
                trials: trial_count(sigma, n, c),
            }
        }
        Variant::Cardinality => {
            let sigma = (((n as f64) * ln_n * ln_n).powf(0.2).ceil() as usize).max(2);
            LocalCutParams {
                volume_bound: None,
                size_bound: sigma,
                trials: trial_count(sigma, n, c),
            }
        }
        Variant::Auto => unreachable!("resolve_variant never returns Auto"),
    }
}

/// Diagnostic events recorded while partitioning. Vertex lists in
/// `LocalSetRemoved` use the coordinates of the graph the emitting
/// invocation ran on; `PartFinalized` always uses the ids of the graph the
/// partition was requested for, so replaying those events reconstructs the
/// partition.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "kebab-case")]
pub enum TraceEvent {
    LevelStart {
        n: usize,
        m: usize,
        depth: usize,
    },
    LocalSetRemoved {
        vertices: Vec<VertexId>,
        cut_value: u64,
        volume: u64,
    },
    CandidatesAdded {
        vertices: Vec<VertexId>,
    },
    LocalSearchMissed {
        seed_vertex: VertexId,
    },
    MincutSplit {
        lambda: u64,
        side_size: usize,
    },
    SetEmitted {
        size: usize,
        internal_edges: usize,
        declared_k_connected: bool,
    },
    PartFinalized {
        vertices: Vec<VertexId>,
    },
}

/// Counters for one top-level `k_cut_partition` call, including its own
/// recursion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KCutRunStats {
    pub n: usize,
    pub m: usize,
    pub volume_bound: Option<u64>,
    pub size_bound: usize,
    pub half_volume_threshold: u64,
    pub local_kcut_calls: usize,
    pub mincut_calls: usize,
    pub recursion_depth: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct PartitionTrace {
    pub events: Vec<TraceEvent>,
    pub runs: Vec<KCutRunStats>,
}

impl PartitionTrace {
    pub fn local_kcut_calls(&self) -> usize {
        self.runs.iter().map(|r| r.local_kcut_calls).sum()
    }

    pub fn mincut_calls(&self) -> usize {
        self.runs.iter().map(|r| r.mincut_calls).sum()
    }

    pub fn max_recursion_depth(&self) -> usize {
        self.runs.iter().map(|r| r.recursion_depth).max().unwrap_or(0)
    }

    /// Partition reconstructed from the finalized-part events.
    pub fn replay_partition(&self, k: u64, n: usize) -> Partition {
        let parts = self
            .events
            .iter()
            .filter_map(|e| match e {
                TraceEvent::PartFinalized { vertices } => Some(vertices.clone()),
                _ => None,
            })
            .collect();
        Partition::new(k, n, parts)
    }
}

/// The recursive-mincut baseline: split along any global minimum cut of
/// value below `k` and recurse on both sides. Deterministic, exact, and the
/// correctness oracle for the local algorithm.
pub fn rec_mincut(g: &WeightedGraph, k: u64) -> Partition {
    let mut stats = BaselineStats::default();
    rec_mincut_traced(g, k, &mut stats)
}

/// Counters for the baseline: one entry per `global_mincut` invocation and
/// the deepest recursion reached.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BaselineStats {
    pub mincut_calls: usize,
    pub max_depth: usize,
}

pub fn rec_mincut_traced(g: &WeightedGraph, k: u64, stats: &mut BaselineStats) -> Partition {
    let n = g.vertex_count();
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    let mut work: Vec<(WeightedGraph, Vec<VertexId>, usize)> =
        vec![(g.clone(), (0..n).collect(), 1)];
    while let Some((h, ids, depth)) = work.pop() {
        stats.max_depth = stats.max_depth.max(depth);
        if h.vertex_count() == 0 {
            continue;
        }
        if h.vertex_count() == 1 {
            parts.push(ids);
            continue;
        }
        stats.mincut_calls += 1;
        let mc = global_mincut(&h).expect("graph has at least two vertices");
        if mc.lambda >= k {
            parts.push(ids);
            continue;
        }
        let other = mc.cut.side.complement(h.vertex_count());
        for side in [mc.cut.side, other] {
            let (sub, map) = h
                .induced_subgraph(&side)
                .expect("cut sides are non-empty");
            let sub_ids = map.into_iter().map(|v| ids[v]).collect();
            work.push((sub, sub_ids, depth + 1));
        }
    }
    Partition::new(k, n, parts)
}

/// One pass of the local partition: peel local sets around the candidate
/// list, then split the residue along a global minimum cut, recursing only
/// into a side that still holds more than `half_volume_threshold` edges.
///
/// Returns a coarse partition of the vertices of `g` that the maximal
/// k-edge-connected partition refines. Candidate order is FIFO; every
/// removal reinserts the surviving endpoints of the removed cut edges.
pub fn k_cut_partition(
    g: &WeightedGraph,
    params: &LocalCutParams,
    k: u64,
    candidates: &[VertexId],
    half_volume_threshold: u64,
    stream: SeedStream,
    trace: &mut PartitionTrace,
) -> Vec<VertexSet> {
    let run = trace.runs.len();
    trace.runs.push(KCutRunStats {
        n: g.vertex_count(),
        m: g.edge_count(),
        volume_bound: params.volume_bound,
        size_bound: params.size_bound,
        half_volume_threshold,
        local_kcut_calls: 0,
        mincut_calls: 0,
        recursion_depth: 0,
    });
    let sets = kcp_recurse(
        g,
        params,
        k,
        candidates.to_vec(),
        half_volume_threshold,
        stream,
        trace,
        run,
        1,
    );
    debug_assert_eq!(
        sets.iter().map(|s| s.len()).sum::<usize>(),
        g.vertex_count(),
        "emitted sets must partition the vertices"
    );
    sets
}

#[allow(clippy::too_many_arguments)]
fn kcp_recurse(
    g: &WeightedGraph,
    params: &LocalCutParams,
    k: u64,
    candidates: Vec<VertexId>,
    half_volume_threshold: u64,
    stream: SeedStream,
    trace: &mut PartitionTrace,
    run: usize,
    depth: usize,
) -> Vec<VertexSet> {
    let n0 = g.vertex_count();
    trace.runs[run].recursion_depth = trace.runs[run].recursion_depth.max(depth);
    trace.events.push(TraceEvent::LevelStart {
        n: n0,
        m: g.edge_count(),
        depth,
    });

    let mut out: Vec<VertexSet> = Vec::new();
    let mut resid = g.clone();
    // resid index -> id in g, and its partial inverse.
    let mut resid_ids: Vec<VertexId> = (0..n0).collect();
    let mut to_resid: Vec<Option<usize>> = (0..n0).map(Some).collect();

    let mut queue: VecDeque<VertexId> = VecDeque::new();
    let mut queued = vec![false; n0];
    for &x in &candidates {
        if !queued[x] {
            queued[x] = true;
            queue.push_back(x);
        }
    }
    let mut next_substream = 0u64;
    let mut fresh_stream = move || {
        let s = stream.substream(next_substream);
        next_substream += 1;
        s
    };

    while let Some(x) = queue.pop_front() {
        queued[x] = false;
        let Some(x_resid) = to_resid[x] else {
            continue; // removed together with an earlier local set
        };
        trace.runs[run].local_kcut_calls += 1;
        let outcome = run_local_kcut(&resid, params, k, x_resid, fresh_stream());
        let found = match outcome {
            LocalCutOutcome::Found(found) => found,
            LocalCutOutcome::NoExtremeSet => {
                trace.events.push(TraceEvent::LocalSearchMissed { seed_vertex: x });
                continue;
            }
        };
        debug_assert!(found.cut_value < k);
        // Surviving endpoints of the removed cut edges become candidates.
        let in_set: Vec<bool> = {
            let mut mask = vec![false; resid.vertex_count()];
            for v in found.set.iter() {
                mask[v] = true;
            }
            mask
        };
        let mut added = Vec::new();
        for e in resid.edges() {
            if in_set[e.u] != in_set[e.v] {
                let outside = if in_set[e.u] { e.v } else { e.u };
                let level = resid_ids[outside];
                if !queued[level] {
                    queued[level] = true;
                    queue.push_back(level);
                    added.push(level);
                }
            }
        }
        let level_set = VertexSet::new(found.set.iter().map(|v| resid_ids[v]));
        trace.events.push(TraceEvent::LocalSetRemoved {
            vertices: level_set.members().to_vec(),
            cut_value: found.cut_value,
            volume: resid.volume(&found.set),
        });
        trace.events.push(TraceEvent::CandidatesAdded { vertices: added });
        let internal = count_internal_edges(&resid, &in_set);
        trace.events.push(TraceEvent::SetEmitted {
            size: level_set.len(),
            internal_edges: internal,
            declared_k_connected: false,
        });
        out.push(level_set);

        let keep = found.set.complement(resid.vertex_count());
        let (next_resid, map) = resid
            .induced_subgraph(&keep)
            .expect("found sets are proper subsets");
        resid_ids = map.into_iter().map(|old| resid_ids[old]).collect();
        to_resid = vec![None; n0];
        for (idx, &level) in resid_ids.iter().enumerate() {
            to_resid[level] = Some(idx);
        }
        resid = next_resid;
    }

    // Candidate list drained: one global minimum cut decides the residue.
    if resid.vertex_count() == 1 {
        out.push(VertexSet::new(resid_ids.iter().copied()));
        trace.events.push(TraceEvent::SetEmitted {
            size: 1,
            internal_edges: 0,
            declared_k_connected: true,
        });
        return out;
    }
    trace.runs[run].mincut_calls += 1;
    let mc = global_mincut(&resid).expect("residue has at least two vertices");
    if mc.lambda >= k {
        out.push(VertexSet::new(resid_ids.iter().copied()));
        trace.events.push(TraceEvent::SetEmitted {
            size: resid.vertex_count(),
            internal_edges: resid.edge_count(),
            declared_k_connected: true,
        });
        return out;
    }
    let side_a = mc.cut.side;
    let side_b = side_a.complement(resid.vertex_count());
    trace.events.push(TraceEvent::MincutSplit {
        lambda: mc.lambda,
        side_size: side_a.len(),
    });
    let mask_a: Vec<bool> = {
        let mut mask = vec![false; resid.vertex_count()];
        for v in side_a.iter() {
            mask[v] = true;
        }
        mask
    };
    let internal_a = count_internal_edges(&resid, &mask_a);
    let crossing: Vec<_> = resid
        .edges()
        .iter()
        .filter(|e| mask_a[e.u] != mask_a[e.v])
        .cloned()
        .collect();
    let internal_b = resid.edge_count() - internal_a - crossing.len();

    // At most one side can keep more than half of the edges.
    let recurse_into = if internal_a as u64 > half_volume_threshold {
        Some(true)
    } else if internal_b as u64 > half_volume_threshold {
        Some(false)
    } else {
        None
    };
    match recurse_into {
        Some(a_is_big) => {
            let (big, small, small_internal) = if a_is_big {
                (side_a, side_b, internal_b)
            } else {
                (side_b, side_a, internal_a)
            };
            out.push(VertexSet::new(small.iter().map(|v| resid_ids[v])));
            trace.events.push(TraceEvent::SetEmitted {
                size: small.len(),
                internal_edges: small_internal,
                declared_k_connected: false,
            });
            let (sub, map) = resid
                .induced_subgraph(&big)
                .expect("cut sides are non-empty");
            let mut to_sub = vec![usize::MAX; resid.vertex_count()];
            for (idx, &old) in map.iter().enumerate() {
                to_sub[old] = idx;
            }
            let mut sub_candidates = Vec::new();
            for e in &crossing {
                for endpoint in [e.u, e.v] {
                    if big.contains(endpoint) {
                        let c = to_sub[endpoint];
                        if !sub_candidates.contains(&c) {
                            sub_candidates.push(c);
                        }
                    }
                }
            }
            let child_sets = kcp_recurse(
                &sub,
                params,
                k,
                sub_candidates,
                half_volume_threshold,
                fresh_stream(),
                trace,
                run,
                depth + 1,
            );
            for set in child_sets {
                out.push(VertexSet::new(set.iter().map(|v| resid_ids[map[v]])));
            }
        }
        None => {
            for (side, internal) in [(side_a, internal_a), (side_b, internal_b)] {
                trace.events.push(TraceEvent::SetEmitted {
                    size: side.len(),
                    internal_edges: internal,
                    declared_k_connected: false,
                });
                out.push(VertexSet::new(side.iter().map(|v| resid_ids[v])));
            }
        }
    }
    out
}

fn run_local_kcut(
    resid: &WeightedGraph,
    params: &LocalCutParams,
    k: u64,
    x: VertexId,
    stream: SeedStream,
) -> LocalCutOutcome {
    match params.volume_bound {
        Some(nu) => {
            let q = LocalCutQuery::volume_bounded(x, nu, params.size_bound, k);
            local_kcut_volume(resid, &q, stream, params.trials)
                .expect("query parameters are valid")
        }
        None => {
            let q = LocalCutQuery::cardinality(x, params.size_bound, k);
            let mut structures = build_trial_structures(resid, stream, params.trials);
            local_kcut_cardinality(resid, &mut structures, &q)
                .expect("query parameters are valid")
        }
    }
}

fn count_internal_edges(g: &WeightedGraph, mask: &[bool]) -> usize {
    g.edges().iter().filter(|e| mask[e.u] && mask[e.v]).count()
}

/// The maximal k-edge-connected partition via the local algorithm.
///
/// Applies `k_cut_partition` with per-level parameter schedules and recurses
/// into each emitted set until every part is k-edge-connected. The volume
/// bound is clamped to half the level's edge count so peeled sets obey the
/// same halving guarantee as the mincut sides.
pub fn maximal_partition(
    g: &WeightedGraph,
    k: u64,
    variant: Variant,
    stream: SeedStream,
) -> Partition {
    let mut trace = PartitionTrace::default();
    maximal_partition_traced(g, k, variant, stream, &mut trace)
}

pub fn maximal_partition_traced(
    g: &WeightedGraph,
    k: u64,
    variant: Variant,
    stream: SeedStream,
    trace: &mut PartitionTrace,
) -> Partition {
    maximal_partition_with(g, k, variant, DEFAULT_TRIALS_CONSTANT, stream, trace)
}

pub fn maximal_partition_with(
    g: &WeightedGraph,
    k: u64,
    variant: Variant,
    trials_constant: f64,
    stream: SeedStream,
    trace: &mut PartitionTrace,
) -> Partition {
    let n = g.vertex_count();
    if k == 0 {
        // Everything is 0-edge-connected.
        let all: Vec<VertexId> = (0..n).collect();
        trace
            .events
            .push(TraceEvent::PartFinalized { vertices: all.clone() });
        return Partition::new(k, n, vec![all]);
    }
    let mut parts: Vec<Vec<VertexId>> = Vec::new();
    let mut work: Vec<(WeightedGraph, Vec<VertexId>, SeedStream)> =
        vec![(g.clone(), (0..n).collect(), stream)];
    while let Some((h, ids, level_stream)) = work.pop() {
        let (hn, hm) = (h.vertex_count(), h.edge_count());
        if hn == 0 {
            continue;
        }
        if hn == 1 {
            trace
                .events
                .push(TraceEvent::PartFinalized { vertices: ids.clone() });
            parts.push(ids);
            continue;
        }
        let mut params = parameter_schedule_with(hm, hn, variant, trials_constant);
        let half = (hm as u64).div_ceil(2);
        if let Some(nu) = params.volume_bound.as_mut() {
            *nu = (*nu).min(half.max(1));
        }
        let candidates: Vec<VertexId> = (0..hn).collect();
        let sets = k_cut_partition(
            &h,
            &params,
            k,
            &candidates,
            half,
            level_stream.substream(0),
            trace,
        );
        if sets.len() == 1 {
            // Single emitted set covering the level: k-edge-connected.
            trace
                .events
                .push(TraceEvent::PartFinalized { vertices: ids.clone() });
            parts.push(ids);
            continue;
        }
        for (i, set) in sets.into_iter().enumerate() {
            let (sub, map) = h
                .induced_subgraph(&set)
                .expect("emitted sets are non-empty");
            let sub_ids: Vec<VertexId> = map.into_iter().map(|v| ids[v]).collect();
            work.push((sub, sub_ids, level_stream.substream(1 + i as u64)));
        }
    }
    Partition::new(k, n, parts)
}

/// Verification outcome of [`verify_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub failures: Vec<VerifyFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum VerifyFailure {
    /// Parts do not disjointly cover the vertex set.
    CoverageViolation { detail: String },
    /// A part's induced subgraph has minimum cut below k.
    PartBelowThreshold { part: usize, mincut: u64 },
    /// Two edge-joined parts whose union still induces a k-edge-connected
    /// subgraph: the partition is not maximal.
    MergeableParts { part_a: usize, part_b: usize },
}

/// Checks that `p` is the maximal k-edge-connected partition of `g`:
/// disjoint cover, every part k-edge-connected, and no two edge-joined parts
/// mergeable.
pub fn verify_partition(g: &WeightedGraph, p: &Partition, k: u64) -> VerifyReport {
    let mut failures = Vec::new();
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    let mut coverage_ok = p.vertex_count() == n;
    if !coverage_ok {
        failures.push(VerifyFailure::CoverageViolation {
            detail: format!("partition is over {} vertices, graph has {}", p.vertex_count(), n),
        });
    }
    for (i, part) in p.parts().iter().enumerate() {
        for &v in part {
            if v >= n {
                coverage_ok = false;
                failures.push(VerifyFailure::CoverageViolation {
                    detail: format!("vertex {v} out of range"),
                });
            } else if owner[v] != usize::MAX {
                coverage_ok = false;
                failures.push(VerifyFailure::CoverageViolation {
                    detail: format!("vertex {v} appears in parts {} and {}", owner[v], i),
                });
            } else {
                owner[v] = i;
            }
        }
    }
    if coverage_ok && owner.iter().any(|&o| o == usize::MAX) {
        coverage_ok = false;
        let missing: Vec<_> = (0..n).filter(|&v| owner[v] == usize::MAX).collect();
        failures.push(VerifyFailure::CoverageViolation {
            detail: format!("vertices {missing:?} not covered"),
        });
    }
    if !coverage_ok {
        return VerifyReport {
            passed: false,
            failures,
        };
    }

    for (i, part) in p.parts().iter().enumerate() {
        let set = VertexSet::new(part.iter().copied());
        let (sub, _) = g.induced_subgraph(&set).expect("parts are non-empty");
        if sub.vertex_count() >= 2 {
            let mc = global_mincut(&sub).expect("at least two vertices");
            if mc.lambda < k {
                failures.push(VerifyFailure::PartBelowThreshold {
                    part: i,
                    mincut: mc.lambda,
                });
            }
        }
    }

    // Only pairs joined by at least one edge can possibly merge.
    let mut joined: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (owner[e.u], owner[e.v]);
            (a.min(b), a.max(b))
        })
        .filter(|&(a, b)| a != b)
        .collect();
    joined.sort_unstable();
    joined.dedup();
    for (a, b) in joined {
        let union = VertexSet::new(
            p.parts()[a]
                .iter()
                .chain(p.parts()[b].iter())
                .copied(),
        );
        let (sub, _) = g.induced_subgraph(&union).expect("non-empty union");
        if mincut_atleast(&sub, k) {
            failures.push(VerifyFailure::MergeableParts { part_a: a, part_b: b });
        }
    }

    VerifyReport {
        passed: failures.is_empty(),
        failures,
    }
}
