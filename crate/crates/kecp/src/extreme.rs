//! Extreme sets: the brute-force extremeness oracle and the minimal
//! extreme-set search.
//!
//! A set X is extreme when every strict non-empty subset has a strictly
//! larger cut value; equivalently X is the unique minimum cut of the graph
//! with the complement contracted. Extreme sets form a laminar family, so
//! all extreme sets containing a fixed vertex are nested and a minimal one
//! is well defined.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{VertexSet, WeightedGraph};
use crate::local::{LocalCutQuery, Membership};
use crate::rank::{sample_assignment, EdgeRank, SeedStream};

/// Largest set size the subset-enumeration oracle accepts.
pub const EXTREME_SET_CAP: usize = 20;

/// Exact extremeness check by enumerating all strict non-empty subsets.
///
/// Cut values are evaluated directly in `g` over the edges incident to `x`,
/// so this stays independent of the contraction-based route it is
/// cross-checked against. Sets larger than [`EXTREME_SET_CAP`] are rejected.
pub fn is_extreme(g: &WeightedGraph, x: &VertexSet) -> Result<bool> {
    if x.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    if x.len() > EXTREME_SET_CAP {
        return Err(Error::SubsetTooLarge {
            size: x.len(),
            cap: EXTREME_SET_CAP,
        });
    }
    let n = g.vertex_count();
    for &v in x.members() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let s = x.len();
    // Local bit position of each member; only edges incident to x can cross
    // any subset of x.
    let mut local = vec![usize::MAX; n];
    for (i, &v) in x.members().iter().enumerate() {
        local[v] = i;
    }
    let mut incident: Vec<(u32, u32, u64)> = Vec::new();
    let full: u32 = (1u32 << s) - 1;
    for e in g.edges() {
        let bu = if local[e.u] != usize::MAX {
            1u32 << local[e.u]
        } else {
            0
        };
        let bv = if local[e.v] != usize::MAX {
            1u32 << local[e.v]
        } else {
            0
        };
        if bu != 0 || bv != 0 {
            incident.push((bu, bv, e.weight));
        }
    }
    let cut_of = |mask: u32| -> u64 {
        incident
            .iter()
            .filter(|&&(bu, bv, _)| (bu & mask != 0) != (bv & mask != 0))
            .map(|&(_, _, w)| w)
            .sum()
    };
    let base = cut_of(full);
    for mask in 1..full {
        if cut_of(mask) <= base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of the minimal extreme-set search. Candidates that outgrew the
/// brute-force cap before their extremeness could be checked are counted
/// rather than failing the whole search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalExtremeOutcome {
    pub set: Option<VertexSet>,
    pub skipped_oversize_candidates: usize,
}

/// Searches for the minimal extreme set containing the seed vertex that
/// meets the query bounds.
///
/// Each trial grows the set along minimum-rank cut edges; whenever the
/// current set has cut below the threshold, is extreme, and is a strict
/// subset of the best set so far, it becomes the new best and the trial
/// ends. Laminarity of extreme sets makes the final best the minimal
/// qualifying extreme set with high probability; when no qualifying extreme
/// set exists the search never updates and returns `None`.
pub fn minimal_extreme_set(
    g: &WeightedGraph,
    q: &LocalCutQuery,
    stream: SeedStream,
    trials: usize,
) -> Result<MinimalExtremeOutcome> {
    q.validate(g)?;
    let n = g.vertex_count();
    let mut best: Option<VertexSet> = None;
    let mut skipped = 0usize;
    let mut membership = Membership::default();

    for trial in 0..trials {
        let r = sample_assignment(g, &stream, trial as u64);
        membership.begin(n);
        let x = q.seed_vertex;
        let mut members = vec![x];
        membership.insert(x);
        let mut frontier: BTreeSet<EdgeRank> =
            g.incident(x).iter().map(|&(e, _)| r.order_key(e)).collect();
        let mut cut_weight = g.weighted_degree(x);
        let mut volume = g.degree(x) as u64;

        loop {
            if let Some(nu) = q.volume_bound {
                if volume >= nu {
                    break;
                }
            }
            if members.len() >= q.size_bound {
                break;
            }
            if cut_weight < q.cut_threshold && members.len() < n {
                let shrinks = match &best {
                    None => true,
                    Some(b) => members.len() < b.len() && members.iter().all(|&v| b.contains(v)),
                };
                if shrinks {
                    if members.len() > EXTREME_SET_CAP {
                        skipped += 1;
                    } else {
                        let candidate = VertexSet::new(members.iter().copied());
                        if is_extreme(g, &candidate)
                            .expect("candidate within cap and in range")
                        {
                            best = Some(candidate);
                            break;
                        }
                    }
                }
            }
            let top = match frontier.iter().next() {
                Some(&top) => top,
                None => break,
            };
            let edge = g.edge(top.edge);
            let v = if membership.contains(edge.u) {
                edge.v
            } else {
                edge.u
            };
            for &(e, other) in g.incident(v) {
                let w = g.edge(e).weight;
                if membership.contains(other) {
                    frontier.remove(&r.order_key(e));
                    cut_weight -= w;
                } else {
                    frontier.insert(r.order_key(e));
                    cut_weight += w;
                    volume += 1;
                }
            }
            membership.insert(v);
            members.push(v);
        }
    }

    Ok(MinimalExtremeOutcome {
        set: best,
        skipped_oversize_candidates: skipped,
    })
}

/// Reference check used in tests: X is extreme iff it is the unique minimum
/// cut of the graph with the complement of X contracted. Enumerates every
/// cut of the contracted graph.
pub fn is_unique_mincut_of_contraction(g: &WeightedGraph, x: &VertexSet) -> Result<bool> {
    if x.len() > 12 {
        return Err(Error::SubsetTooLarge {
            size: x.len(),
            cap: 12,
        });
    }
    let contracted = g.contract_complement(x)?;
    // Vertices 0..s are the members of x in sorted order, s is the
    // super-vertex. Enumerate sides not containing the super-vertex.
    let s = x.len();
    let full: u32 = (1u32 << s) - 1;
    let mut best = u64::MAX;
    let mut best_count = 0usize;
    let mut full_is_best = false;
    for mask in 1..=full {
        let side = VertexSet::new((0..s).filter(|&i| mask & (1 << i) != 0));
        let value = contracted.cut_value(&side)?;
        if value < best {
            best = value;
            best_count = 1;
            full_is_best = mask == full;
        } else if value == best {
            best_count += 1;
            if mask == full {
                full_is_best = true;
            }
        }
    }
    Ok(best_count == 1 && full_is_best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::trial_count;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

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

    fn parallel_paths() -> WeightedGraph {
        WeightedGraph::from_edges(
            5,
            [
                (0, 1, 1),
                (0, 2, 1),
                (0, 3, 1),
                (1, 4, 1),
                (2, 4, 1),
                (3, 4, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn singletons_are_extreme() {
        let g = two_triangles();
        for v in 0..6 {
            assert!(is_extreme(&g, &VertexSet::singleton(v)).unwrap());
        }
    }

    #[test]
    fn triangle_side_is_extreme() {
        let g = two_triangles();
        assert!(is_extreme(&g, &VertexSet::new([0, 1, 2])).unwrap());
    }

    #[test]
    fn parallel_paths_pair_is_not_extreme() {
        // cut({s,u1}) = 3 equals cut({s}) = 3, so not strictly smaller.
        let g = parallel_paths();
        assert!(!is_extreme(&g, &VertexSet::new([0, 1])).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let g = WeightedGraph::from_edges(25, (0..24).map(|i| (i, i + 1, 1))).unwrap();
        let big = VertexSet::new(0..21);
        assert!(matches!(
            is_extreme(&g, &big),
            Err(Error::SubsetTooLarge { size: 21, cap: 20 })
        ));
    }

    #[test]
    fn agrees_with_unique_mincut_of_contraction() {
        let mut rng = ChaCha8Rng::seed_from_u64(4242);
        let mut checked = 0;
        for _ in 0..60 {
            let n = rng.random_range(4..=9usize);
            let all_pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            let m = rng.random_range(n - 1..=all_pairs.len());
            let mut pairs = all_pairs.clone();
            for i in 0..m {
                let j = rng.random_range(i..pairs.len());
                pairs.swap(i, j);
            }
            let edges: Vec<_> = pairs[..m]
                .iter()
                .map(|&(u, v)| (u, v, rng.random_range(1..=6u64)))
                .collect();
            let g = WeightedGraph::from_edges(n, edges).unwrap();
            for _ in 0..20 {
                let size = rng.random_range(1..n);
                let mut verts: Vec<usize> = (0..n).collect();
                for i in 0..size {
                    let j = rng.random_range(i..verts.len());
                    verts.swap(i, j);
                }
                let x = VertexSet::new(verts[..size].iter().copied());
                let direct = is_extreme(&g, &x).unwrap();
                let via_contraction = is_unique_mincut_of_contraction(&g, &x).unwrap();
                assert_eq!(direct, via_contraction, "x = {:?}", x);
                checked += 1;
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn finds_the_triangle_as_minimal_extreme_set() {
        let g = two_triangles();
        let q = LocalCutQuery::volume_bounded(0, 6, 4, 2);
        let trials = trial_count(4, 6, 2.0);
        let out = minimal_extreme_set(&g, &q, SeedStream::new(9), trials).unwrap();
        assert_eq!(out.set, Some(VertexSet::new([0, 1, 2])));
        assert_eq!(out.skipped_oversize_candidates, 0);
    }

    #[test]
    fn returns_bottom_when_nothing_qualifies() {
        let g = two_triangles();
        // k=1: no cut below 1 exists in a connected unit-weight graph.
        let q = LocalCutQuery::volume_bounded(0, 20, 6, 1);
        let out = minimal_extreme_set(&g, &q, SeedStream::new(1), 50).unwrap();
        assert_eq!(out.set, None);
    }

    #[test]
    fn nested_extreme_sets_resolve_to_the_inner_one() {
        // Heavy pair {0,1} inside a medium blob {0,1,2,3}, weakly tied to a
        // hub. cut({0,1}) = 4, every strict subset cuts >= 10; the blob cuts
        // 2 with strict subsets all above it. Both are extreme and nested.
        let g = WeightedGraph::from_edges(
            6,
            [
                (0, 1, 10),
                (0, 2, 2),
                (1, 3, 2),
                (2, 3, 6),
                (2, 4, 1),
                (3, 4, 1),
                (4, 5, 3),
            ],
        )
        .unwrap();
        let inner = VertexSet::new([0, 1]);
        let outer = VertexSet::new([0, 1, 2, 3]);
        assert!(is_extreme(&g, &inner).unwrap());
        assert!(is_extreme(&g, &outer).unwrap());
        assert_eq!(g.cut_value(&inner).unwrap(), 4);
        assert_eq!(g.cut_value(&outer).unwrap(), 2);

        let q = LocalCutQuery::volume_bounded(0, 100, 5, 5);
        let trials = trial_count(5, 6, 2.0);
        let out = minimal_extreme_set(&g, &q, SeedStream::new(3), trials).unwrap();
        assert_eq!(out.set, Some(inner));
    }
}
