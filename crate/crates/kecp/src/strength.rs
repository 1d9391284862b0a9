//! Edge strength: the largest k for which some induced subgraph containing
//! both endpoints is k-edge-connected.
//!
//! The approximation sweeps k over a geometric grid and reads off, per edge,
//! the largest grid point where the endpoints still share a part of the
//! maximal k-edge-connected partition (a lower bound) and the smallest grid
//! point separating them (a strict upper bound). Refinement monotonicity in
//! k makes the sweep well defined and allows the exact oracle to binary
//! search co-partitioning over the baseline partitions.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::partition::{maximal_partition, rec_mincut, Variant};
use crate::rank::SeedStream;

/// Per-edge strength bracket: `lower <= strength < upper`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrengthBound {
    pub lower: u64,
    pub upper: u64,
}

/// Brackets for every edge, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrengthEstimates {
    pub epsilon: f64,
    pub bounds: Vec<StrengthBound>,
}

/// Integer grid `{ceil((1+epsilon)^j)}` up to `max_strength`, deduplicated,
/// plus the first grid value beyond it (the sentinel upper bound for edges
/// the sweep never separates).
pub fn strength_grid(epsilon: f64, max_strength: u64) -> (Vec<u64>, u64) {
    let mut grid = Vec::new();
    let mut exponent = 0i32;
    loop {
        let value = (1.0 + epsilon).powi(exponent).ceil() as u64;
        if value > max_strength {
            return (grid, value.max(max_strength + 1));
        }
        if grid.last() != Some(&value) {
            grid.push(value);
        }
        exponent += 1;
    }
}

/// Largest strength any edge can have: disconnecting a vertex never needs
/// more than `(n-1)` edges of maximum weight.
pub fn max_possible_strength(g: &WeightedGraph) -> u64 {
    (g.vertex_count().saturating_sub(1) as u64) * g.max_weight()
}

/// (1+epsilon)-approximates the strength of every edge by a geometric sweep
/// of maximal partitions. Grid points after every edge has been separated
/// are skipped. Grid point `j` consumes substream `j`, so the whole sweep is
/// reproducible from one stream.
pub fn approx_strengths(
    g: &WeightedGraph,
    epsilon: f64,
    stream: SeedStream,
) -> Result<StrengthEstimates> {
    if epsilon <= 0.0 {
        return Err(Error::NonPositiveEpsilon { epsilon });
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(StrengthEstimates {
            epsilon,
            bounds: Vec::new(),
        });
    }
    let (grid, sentinel) = strength_grid(epsilon, max_possible_strength(g));
    let mut lower = vec![1u64; m];
    let mut upper: Vec<Option<u64>> = vec![None; m];
    let mut open = m;
    for (j, &k) in grid.iter().enumerate() {
        if open == 0 {
            break;
        }
        let partition = maximal_partition(g, k, Variant::Auto, stream.substream(j as u64));
        let assignment = partition.part_assignment();
        for (e, edge) in g.edges().iter().enumerate() {
            if upper[e].is_some() {
                continue;
            }
            if assignment[edge.u] == assignment[edge.v] {
                lower[e] = k;
            } else {
                upper[e] = Some(k);
                open -= 1;
            }
        }
    }
    let bounds = lower
        .into_iter()
        .zip(upper)
        .map(|(lower, upper)| StrengthBound {
            lower,
            upper: upper.unwrap_or(sentinel),
        })
        .collect();
    Ok(StrengthEstimates { epsilon, bounds })
}

/// Exact strength of every edge: binary-search the largest integer k at
/// which the endpoints are still co-partitioned by the recursive-mincut
/// baseline. Valid because strengths are integral for integral weights and
/// partitions refine monotonically in k. Partitions are memoized across
/// edges.
pub fn exact_strengths(g: &WeightedGraph) -> Vec<u64> {
    let mut memo: HashMap<u64, Vec<usize>> = HashMap::new();
    let hi_cap = max_possible_strength(g);
    let mut same_part = |k: u64, u: usize, v: usize| -> bool {
        let assignment = memo
            .entry(k)
            .or_insert_with(|| rec_mincut(g, k).part_assignment());
        assignment[u] == assignment[v]
    };
    g.edges()
        .iter()
        .map(|edge| {
            // Both endpoints alone are w(e)-edge-connected, so the strength
            // is at least the edge weight.
            let mut lo = edge.weight;
            let mut hi = hi_cap;
            debug_assert!(same_part(lo, edge.u, edge.v));
            while lo < hi {
                let mid = lo + (hi - lo + 1) / 2;
                if same_part(mid, edge.u, edge.v) {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            lo
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;

    fn triangle() -> WeightedGraph {
        WeightedGraph::from_edges(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)]).unwrap()
    }

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

    #[test]
    fn grid_is_deduplicated_and_covers_the_range() {
        let (grid, sentinel) = strength_grid(0.5, 20);
        assert_eq!(grid[0], 1);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
        assert!(*grid.last().unwrap() <= 20);
        assert!(sentinel > 20);

        let (grid, _) = strength_grid(0.1, 10);
        // Small range: every integer shows up.
        assert_eq!(grid, vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
    }

    #[test]
    fn exact_strength_of_fixtures() {
        assert_eq!(exact_strengths(&triangle()), vec![2, 2, 2]);

        let g = two_triangles();
        let strengths = exact_strengths(&g);
        for (e, edge) in g.edges().iter().enumerate() {
            let inside_triangle =
                (edge.u < 3 && edge.v < 3) || (edge.u >= 3 && edge.v >= 3);
            assert_eq!(strengths[e], if inside_triangle { 2 } else { 1 });
        }
    }

    #[test]
    fn parallel_paths_edges_all_have_strength_two() {
        let g = WeightedGraph::from_edges(
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
        .unwrap();
        assert_eq!(exact_strengths(&g), vec![2; 6]);
    }

    #[test]
    fn isolated_heavy_edge_has_its_weight_as_strength() {
        let g = WeightedGraph::from_edges(2, [(0, 1, 5)]).unwrap();
        assert_eq!(exact_strengths(&g), vec![5]);
        let est = approx_strengths(&g, 0.1, SeedStream::new(0)).unwrap();
        let b = est.bounds[0];
        assert!(b.lower <= 5 && 5 < b.upper);
    }

    #[test]
    fn brackets_hold_on_fixtures() {
        let g = two_triangles();
        let exact = exact_strengths(&g);
        for eps in [0.1, 0.5] {
            let est = approx_strengths(&g, eps, SeedStream::new(7)).unwrap();
            for (e, b) in est.bounds.iter().enumerate() {
                assert!(b.lower <= exact[e] && exact[e] < b.upper);
                let allowed = ((b.lower as f64) * (1.0 + eps)).ceil() as u64;
                assert!(b.upper <= allowed.max(b.lower + 1));
            }
        }
    }

    #[test]
    fn rejects_non_positive_epsilon() {
        let g = triangle();
        assert!(matches!(
            approx_strengths(&g, 0.0, SeedStream::new(0)),
            Err(Error::NonPositiveEpsilon { .. })
        ));
    }

    #[test]
    fn strength_is_at_least_the_edge_weight() {
        let g = WeightedGraph::from_edges(4, [(0, 1, 7), (1, 2, 1), (2, 3, 2), (0, 3, 1)]).unwrap();
        let exact = exact_strengths(&g);
        for (e, edge) in g.edges().iter().enumerate() {
            assert!(exact[e] >= edge.weight);
        }
    }
}
