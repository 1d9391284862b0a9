//! Local cut search: grow a set from a seed vertex along minimum-rank cut
//! edges, and amplify over independent rank assignments.
//!
//! A single growth pass (the volume- or cardinality-bounded local Prim walk)
//! either finds a set whose cut drops below the threshold inside the bounds
//! or gives up. Amplification over enough independent assignments turns a
//! per-assignment success probability of at least `2/(sigma(sigma-1))` for
//! any qualifying extreme set into a high-probability guarantee: a `Found`
//! answer is always valid, and `NoExtremeSet` is wrong only with probability
//! `(1 - 2/(sigma(sigma-1)))^trials`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{VertexId, VertexSet, WeightedGraph};
use crate::rank::{sample_assignment, EdgeRank, RankAssignment, SeedStream};
use crate::sorted_adjacency::SortedAdjacency;

/// A local cut query around a seed vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalCutQuery {
    /// The vertex every candidate set must contain.
    pub seed_vertex: VertexId,
    /// Strict volume bound (`None` = unbounded).
    pub volume_bound: Option<u64>,
    /// Strict cardinality bound.
    pub size_bound: usize,
    /// Candidate sets must have cut value strictly below this.
    pub cut_threshold: u64,
}

impl LocalCutQuery {
    pub fn volume_bounded(x: VertexId, nu: u64, sigma: usize, k: u64) -> Self {
        LocalCutQuery {
            seed_vertex: x,
            volume_bound: Some(nu),
            size_bound: sigma,
            cut_threshold: k,
        }
    }

    pub fn cardinality(x: VertexId, sigma: usize, k: u64) -> Self {
        LocalCutQuery {
            seed_vertex: x,
            volume_bound: None,
            size_bound: sigma,
            cut_threshold: k,
        }
    }

    pub(crate) fn validate(&self, g: &WeightedGraph) -> Result<()> {
        if self.seed_vertex >= g.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: self.seed_vertex,
                n: g.vertex_count(),
            });
        }
        if self.size_bound < 1 {
            return Err(Error::InvalidQuery {
                reason: "size bound must be at least 1".into(),
            });
        }
        if self.volume_bound == Some(0) {
            return Err(Error::InvalidQuery {
                reason: "volume bound must be at least 1 when bounded".into(),
            });
        }
        if self.cut_threshold < 1 {
            return Err(Error::InvalidQuery {
                reason: "cut threshold must be at least 1".into(),
            });
        }
        Ok(())
    }
}

/// A set found by the local search, with its cut value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoundCut {
    pub set: VertexSet,
    pub cut_value: u64,
}

impl FoundCut {
    /// Checks the full contract against the graph: contains the seed, within
    /// both bounds, cut below the threshold, and a proper subset of V.
    pub fn satisfies(&self, g: &WeightedGraph, q: &LocalCutQuery) -> bool {
        if !self.set.contains(q.seed_vertex) || self.set.len() >= q.size_bound {
            return false;
        }
        if self.set.len() >= g.vertex_count() {
            return false;
        }
        if let Some(nu) = q.volume_bound {
            if g.volume(&self.set) >= nu {
                return false;
            }
        }
        match g.cut_value(&self.set) {
            Ok(value) => value == self.cut_value && value < q.cut_threshold,
            Err(_) => false,
        }
    }
}

/// Answer of the amplified search. `Found` is unconditionally valid;
/// `NoExtremeSet` rules out qualifying extreme sets with high probability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum LocalCutOutcome {
    Found(FoundCut),
    NoExtremeSet,
}

impl LocalCutOutcome {
    pub fn found(&self) -> Option<&FoundCut> {
        match self {
            LocalCutOutcome::Found(f) => Some(f),
            LocalCutOutcome::NoExtremeSet => None,
        }
    }

    pub fn is_found(&self) -> bool {
        self.found().is_some()
    }
}

/// Set membership with O(1) insert/query and O(1) reset between runs.
#[derive(Debug, Default)]
pub(crate) struct Membership {
    stamp: Vec<u64>,
    epoch: u64,
}

impl Membership {
    pub(crate) fn begin(&mut self, n: usize) {
        if self.stamp.len() < n {
            self.stamp.resize(n, 0);
        }
        self.epoch += 1;
    }

    pub(crate) fn insert(&mut self, v: VertexId) {
        self.stamp[v] = self.epoch;
    }

    pub(crate) fn contains(&self, v: VertexId) -> bool {
        self.stamp[v] == self.epoch
    }
}

/// One volume-bounded growth pass under a fixed rank assignment.
///
/// Starting from the seed, repeatedly absorbs the far endpoint of the
/// minimum-key cut edge while the cut stays at or above the threshold and the
/// bounds hold. Returns the grown set only when it meets the query contract
/// in full; `None` means this assignment gave nothing.
pub fn local_prim_volume(
    g: &WeightedGraph,
    q: &LocalCutQuery,
    r: &RankAssignment,
) -> Result<Option<FoundCut>> {
    q.validate(g)?;
    let mut membership = Membership::default();
    Ok(local_prim_volume_with(g, q, r, &mut membership))
}

pub(crate) fn local_prim_volume_with(
    g: &WeightedGraph,
    q: &LocalCutQuery,
    r: &RankAssignment,
    membership: &mut Membership,
) -> Option<FoundCut> {
    let n = g.vertex_count();
    membership.begin(n);
    let x = q.seed_vertex;
    let mut members = vec![x];
    membership.insert(x);
    // Frontier holds exactly the current cut edges, ordered by rank.
    let mut frontier: BTreeSet<EdgeRank> =
        g.incident(x).iter().map(|&(e, _)| r.order_key(e)).collect();
    let mut cut_weight = g.weighted_degree(x);
    let mut volume = g.degree(x) as u64;

    loop {
        if cut_weight < q.cut_threshold {
            break;
        }
        if let Some(nu) = q.volume_bound {
            if volume >= nu {
                break;
            }
        }
        if members.len() >= q.size_bound {
            break;
        }
        let top = match frontier.iter().next() {
            Some(&top) => top,
            None => {
                debug_assert_eq!(cut_weight, 0);
                break;
            }
        };
        let edge = g.edge(top.edge);
        let v = if membership.contains(edge.u) {
            edge.v
        } else {
            edge.u
        };
        absorb_volume(g, r, membership, v, &mut frontier, &mut cut_weight, &mut volume);
        membership.insert(v);
        members.push(v);
    }

    finish(g, q, members, cut_weight)
}

fn absorb_volume(
    g: &WeightedGraph,
    r: &RankAssignment,
    membership: &Membership,
    v: VertexId,
    frontier: &mut BTreeSet<EdgeRank>,
    cut_weight: &mut u64,
    volume: &mut u64,
) {
    for &(e, other) in g.incident(v) {
        let w = g.edge(e).weight;
        if membership.contains(other) {
            frontier.remove(&r.order_key(e));
            *cut_weight -= w;
        } else {
            frontier.insert(r.order_key(e));
            *cut_weight += w;
            *volume += 1;
        }
    }
}

fn finish(
    g: &WeightedGraph,
    q: &LocalCutQuery,
    members: Vec<VertexId>,
    cut_weight: u64,
) -> Option<FoundCut> {
    if cut_weight >= q.cut_threshold {
        return None;
    }
    if members.len() >= q.size_bound || members.len() >= g.vertex_count() {
        return None;
    }
    if let Some(nu) = q.volume_bound {
        let set = VertexSet::new(members);
        if g.volume(&set) >= nu {
            return None;
        }
        return Some(FoundCut {
            set,
            cut_value: cut_weight,
        });
    }
    Some(FoundCut {
        set: VertexSet::new(members),
        cut_value: cut_weight,
    })
}

/// Amplified volume-bounded search: runs the growth pass under `trials`
/// independent assignments drawn from `stream` and returns the first hit.
pub fn local_kcut_volume(
    g: &WeightedGraph,
    q: &LocalCutQuery,
    stream: SeedStream,
    trials: usize,
) -> Result<LocalCutOutcome> {
    q.validate(g)?;
    if q.volume_bound.is_none() {
        return Err(Error::InvalidQuery {
            reason: "volume-bounded search needs a volume bound".into(),
        });
    }
    if q.size_bound <= 1 {
        // No set can contain the seed and have fewer than one vertex.
        return Ok(LocalCutOutcome::NoExtremeSet);
    }
    let mut membership = Membership::default();
    for trial in 0..trials {
        let r = sample_assignment(g, &stream, trial as u64);
        if let Some(found) = local_prim_volume_with(g, q, &r, &mut membership) {
            debug_assert!(found.satisfies(g, q));
            return Ok(LocalCutOutcome::Found(found));
        }
    }
    Ok(LocalCutOutcome::NoExtremeSet)
}

/// One cardinality-bounded growth pass on a prebuilt sorted adjacency
/// structure. No volume guard; cut maintenance probes each current member
/// for an edge to the absorbed vertex, deleting internalized edges into the
/// journal. The journal is undone before returning, so the structure is
/// left exactly as found.
pub fn local_prim_cardinality(
    g: &WeightedGraph,
    sa: &mut SortedAdjacency,
    q: &LocalCutQuery,
) -> Result<Option<FoundCut>> {
    q.validate(g)?;
    if q.volume_bound.is_some() {
        return Err(Error::InvalidQuery {
            reason: "cardinality-bounded search takes no volume bound".into(),
        });
    }
    let mut membership = Membership::default();
    Ok(local_prim_cardinality_with(g, sa, q, &mut membership).0)
}

pub(crate) fn local_prim_cardinality_with(
    g: &WeightedGraph,
    sa: &mut SortedAdjacency,
    q: &LocalCutQuery,
    membership: &mut Membership,
) -> (Option<FoundCut>, usize) {
    let n = g.vertex_count();
    membership.begin(n);
    let x = q.seed_vertex;
    let mut members = vec![x];
    membership.insert(x);
    let mut cut_weight = g.weighted_degree(x);

    loop {
        if cut_weight < q.cut_threshold {
            break;
        }
        if members.len() >= q.size_bound {
            break;
        }
        // Members' lists hold exactly the cut edges: internal edges are
        // deleted the moment both endpoints are absorbed.
        let e = match sa.next_edge(members.iter().copied()) {
            Some(e) => e,
            None => {
                debug_assert_eq!(cut_weight, 0);
                break;
            }
        };
        let edge = g.edge(e);
        let v = if membership.contains(edge.u) {
            edge.v
        } else {
            edge.u
        };
        // w(delta) gains the weighted degree of v minus twice the weight of
        // edges between v and the current set; computed as -into +(deg-into)
        // so partial sums never exceed the total weight.
        let mut into = 0u64;
        for &u in &members {
            if let Some(uv) = g.edge_between(u, v) {
                into += g.edge(uv).weight;
                sa.delete(uv).expect("cut edges are never deleted twice");
            }
        }
        cut_weight -= into;
        cut_weight += g.weighted_degree(v) - into;
        membership.insert(v);
        members.push(v);
    }

    let journal_entries = sa.journal_len();
    sa.undo_journal();
    (finish(g, q, members, cut_weight), journal_entries)
}

/// Builds one sorted adjacency structure per trial, each under an
/// independent assignment from `stream`. This is the preprocessing step of
/// the cardinality-parameterized search.
pub fn build_trial_structures(
    g: &WeightedGraph,
    stream: SeedStream,
    trials: usize,
) -> Vec<SortedAdjacency> {
    (0..trials)
        .map(|trial| {
            let r = sample_assignment(g, &stream, trial as u64);
            SortedAdjacency::build(g, &r)
        })
        .collect()
}

/// Amplified cardinality-bounded search over prebuilt structures. Every
/// trial leaves its structure unchanged.
pub fn local_kcut_cardinality(
    g: &WeightedGraph,
    structures: &mut [SortedAdjacency],
    q: &LocalCutQuery,
) -> Result<LocalCutOutcome> {
    q.validate(g)?;
    if q.volume_bound.is_some() {
        return Err(Error::InvalidQuery {
            reason: "cardinality-bounded search takes no volume bound".into(),
        });
    }
    if q.size_bound <= 1 {
        return Ok(LocalCutOutcome::NoExtremeSet);
    }
    let mut membership = Membership::default();
    for sa in structures.iter_mut() {
        let (outcome, _) = local_prim_cardinality_with(g, sa, q, &mut membership);
        if let Some(found) = outcome {
            debug_assert!(found.satisfies(g, q));
            return Ok(LocalCutOutcome::Found(found));
        }
    }
    Ok(LocalCutOutcome::NoExtremeSet)
}

/// Trial count for the amplified searches:
/// `ceil(c * sigma*(sigma-1)/2 * ln n)`, at least 1.
pub fn trial_count(sigma: usize, n: usize, c: f64) -> usize {
    let pairs = (sigma.saturating_sub(1) * sigma) as f64 / 2.0;
    let ln_n = (n.max(1) as f64).ln();
    ((c * pairs * ln_n).ceil() as usize).max(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::sample_assignment;

    fn two_triangles() -> WeightedGraph {
        WeightedGraph::from_edges(
            6,
            [
                (0, 1, 1),
                (1, 2, 1),
                (0, 2, 1),
                (3, 4, 1),
                (4, 5, 1),
                (3, 5, 1),
                (2, 3, 1),
            ],
        )
        .unwrap()
    }

    use crate::rank::test_support::assignment_from_keys;

    /// Keys that make the growth sweep triangle {0,1,2} first.
    /// Edge ids by sorted pair: (0,1)=0 (0,2)=1 (1,2)=2 (2,3)=3 (3,4)=4 (3,5)=5 (4,5)=6.
    fn triangle_first_keys(_g: &WeightedGraph) -> RankAssignment {
        assignment_from_keys(vec![0.1, 0.2, 0.3, 0.5, 0.6, 0.7, 0.8])
    }

    #[test]
    fn seed_below_threshold_is_found_immediately() {
        let g = two_triangles();
        let q = LocalCutQuery::volume_bounded(0, 10, 5, 3);
        let r = sample_assignment(&g, &SeedStream::new(0), 0);
        let found = local_prim_volume(&g, &q, &r).unwrap().unwrap();
        assert_eq!(found.set, VertexSet::singleton(0));
        assert_eq!(found.cut_value, 2);
    }

    #[test]
    fn triangle_first_keys_find_the_bridge_side() {
        let g = two_triangles();
        let q = LocalCutQuery::volume_bounded(0, 6, 4, 2);
        let r = triangle_first_keys(&g);
        let found = local_prim_volume(&g, &q, &r).unwrap().unwrap();
        assert_eq!(found.set, VertexSet::new([0, 1, 2]));
        assert_eq!(found.cut_value, 1);
    }

    #[test]
    fn bridge_first_keys_stay_sound() {
        let g = two_triangles();
        let q = LocalCutQuery::volume_bounded(0, 6, 4, 2);
        // Bridge gets the smallest key: growth leaks across the bridge and
        // must not return anything violating the bounds.
        let r = assignment_from_keys(vec![0.1, 0.2, 0.3, 0.05, 0.6, 0.7, 0.8]);
        if let Some(found) = local_prim_volume(&g, &q, &r).unwrap() {
            assert!(found.satisfies(&g, &q));
        }
    }

    #[test]
    fn amplified_search_finds_the_triangle() {
        let g = two_triangles();
        let q = LocalCutQuery::volume_bounded(0, 6, 4, 2);
        let trials = trial_count(4, 6, 2.0);
        let outcome = local_kcut_volume(&g, &q, SeedStream::new(5), trials).unwrap();
        let found = outcome.found().expect("triangle should be found");
        assert_eq!(found.set, VertexSet::new([0, 1, 2]));
        assert_eq!(found.cut_value, 1);
    }

    #[test]
    fn threshold_one_on_connected_graph_finds_nothing() {
        let g = two_triangles();
        for x in 0..6 {
            let q = LocalCutQuery::volume_bounded(x, 20, 6, 1);
            let outcome = local_kcut_volume(&g, &q, SeedStream::new(1), 40).unwrap();
            assert_eq!(outcome, LocalCutOutcome::NoExtremeSet);
        }
    }

    #[test]
    fn degenerate_size_bound_returns_no_extreme_set() {
        let g = two_triangles();
        let q = LocalCutQuery::volume_bounded(0, 10, 1, 100);
        let outcome = local_kcut_volume(&g, &q, SeedStream::new(2), 10).unwrap();
        assert_eq!(outcome, LocalCutOutcome::NoExtremeSet);

        let mut structures = build_trial_structures(&g, SeedStream::new(2), 10);
        let q = LocalCutQuery::cardinality(0, 1, 100);
        let outcome = local_kcut_cardinality(&g, &mut structures, &q).unwrap();
        assert_eq!(outcome, LocalCutOutcome::NoExtremeSet);
    }

    #[test]
    fn whole_graph_is_never_returned() {
        // k=1 on a connected unit graph: no proper subset has cut below 1,
        // so growth swallows all vertices, the cut drops to zero, and the
        // full vertex set must still be rejected.
        let g = two_triangles();
        let q = LocalCutQuery::volume_bounded(0, 1000, 1000, 1);
        for trial in 0..10 {
            let r = sample_assignment(&g, &SeedStream::new(3), trial);
            assert_eq!(local_prim_volume(&g, &q, &r).unwrap(), None);
        }
    }

    #[test]
    fn star_center_with_tight_size_bound() {
        let g = WeightedGraph::from_edges(5, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)]).unwrap();
        // Center has weighted degree 4; with sigma=2 no proper shrink fits.
        let q = LocalCutQuery::cardinality(0, 2, 4);
        let mut structures = build_trial_structures(&g, SeedStream::new(0), 20);
        let outcome = local_kcut_cardinality(&g, &mut structures, &q).unwrap();
        assert_eq!(outcome, LocalCutOutcome::NoExtremeSet);
        // With k above the degree, the center alone qualifies.
        let q = LocalCutQuery::cardinality(0, 2, 5);
        let outcome = local_kcut_cardinality(&g, &mut structures, &q).unwrap();
        let found = outcome.found().unwrap();
        assert_eq!(found.set, VertexSet::singleton(0));
    }

    #[test]
    fn cardinality_variant_matches_volume_variant() {
        let g = two_triangles();
        let stream = SeedStream::new(77);
        for trial in 0..60 {
            let r = sample_assignment(&g, &stream, trial);
            let mut sa = SortedAdjacency::build(&g, &r);
            let before = sa.clone();
            for x in 0..6 {
                for k in 1..=3u64 {
                    for sigma in 1..=6usize {
                        let qv = LocalCutQuery {
                            seed_vertex: x,
                            volume_bound: None,
                            size_bound: sigma,
                            cut_threshold: k,
                        };
                        let via_volume = local_prim_volume(&g, &qv, &r).unwrap();
                        let via_lists = local_prim_cardinality(&g, &mut sa, &qv).unwrap();
                        assert_eq!(via_volume, via_lists);
                        assert_eq!(sa, before);
                    }
                }
            }
        }
    }

    #[test]
    fn journal_stays_within_sigma_squared() {
        let g = two_triangles();
        let r = triangle_first_keys(&g);
        let mut sa = SortedAdjacency::build(&g, &r);
        let q = LocalCutQuery::cardinality(0, 4, 2);
        let mut membership = Membership::default();
        let (found, journal) = local_prim_cardinality_with(&g, &mut sa, &q, &mut membership);
        assert!(found.is_some());
        assert!(journal <= 4 * 4);
        assert_eq!(sa.journal_len(), 0);
    }

    #[test]
    fn trial_count_formula() {
        // sigma=4, n=6: ceil(2 * 6 * ln 6) = ceil(21.50...) = 22.
        assert_eq!(trial_count(4, 6, 2.0), 22);
        assert_eq!(trial_count(2, 1, 2.0), 1);
    }
}
