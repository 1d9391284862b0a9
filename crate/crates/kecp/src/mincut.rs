//! Global minimum cut via deterministic maximum-adjacency orderings.
//!
//! Each phase grows an ordering by repeatedly adding the vertex most strongly
//! connected to the ordered prefix; the connectivity of the last vertex is a
//! cut, and the best cut over all phases (merging the last two vertices after
//! each) is a global minimum cut. Deterministic, so repeated runs and the
//! partition algorithms built on top are reproducible.

use crate::error::{Error, Result};
use crate::graph::{Cut, VertexId, VertexSet, WeightedGraph};

/// A global minimum cut; `lambda` equals `cut.value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MincutResult {
    pub cut: Cut,
    pub lambda: u64,
}

/// Computes a global minimum cut of `g`. Needs at least two vertices.
/// A disconnected graph yields value 0 with one connected component as the
/// side. Any minimum cut may be returned when several exist.
pub fn global_mincut(g: &WeightedGraph) -> Result<MincutResult> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices {
            required: 2,
            found: n,
        });
    }
    let components = g.connected_components();
    if components.len() > 1 {
        let side = VertexSet::new(components[0].iter().copied());
        return Ok(MincutResult {
            cut: Cut { side, value: 0 },
            lambda: 0,
        });
    }

    let mut weight = vec![vec![0u64; n]; n];
    for e in g.edges() {
        weight[e.u][e.v] = e.weight;
        weight[e.v][e.u] = e.weight;
    }
    let mut groups: Vec<Vec<VertexId>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best_value = u64::MAX;
    let mut best_side: Vec<VertexId> = Vec::new();

    while active.len() > 1 {
        let mut added = vec![false; n];
        let mut conn = vec![0u64; n];
        let first = active[0];
        added[first] = true;
        for &x in &active {
            conn[x] = weight[first][x];
        }
        let mut last = first;
        let mut second_last = first;
        for _ in 1..active.len() {
            let mut next = usize::MAX;
            for &x in &active {
                if !added[x] && (next == usize::MAX || conn[x] > conn[next]) {
                    next = x;
                }
            }
            added[next] = true;
            second_last = last;
            last = next;
            for &x in &active {
                if !added[x] {
                    conn[x] += weight[next][x];
                }
            }
        }
        let cut_of_phase = conn[last];
        if cut_of_phase < best_value {
            best_value = cut_of_phase;
            best_side = groups[last].clone();
        }
        // Merge `last` into `second_last`.
        let absorbed = std::mem::take(&mut groups[last]);
        groups[second_last].extend(absorbed);
        for &x in &active {
            if x != last && x != second_last {
                weight[second_last][x] += weight[last][x];
                weight[x][second_last] = weight[second_last][x];
            }
        }
        active.retain(|&x| x != last);
    }

    let side = VertexSet::new(best_side);
    debug_assert!(!side.is_empty() && side.len() < n);
    debug_assert_eq!(g.cut_value(&side).unwrap(), best_value);
    Ok(MincutResult {
        cut: Cut {
            side,
            value: best_value,
        },
        lambda: best_value,
    })
}

/// True iff `g` is k-edge-connected. Graphs with at most one vertex are
/// k-edge-connected for every k.
pub fn mincut_atleast(g: &WeightedGraph, k: u64) -> bool {
    if g.vertex_count() <= 1 {
        return true;
    }
    global_mincut(g)
        .expect("graph has at least two vertices")
        .lambda
        >= k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

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

    /// Minimum over every side containing vertex 0, by enumeration.
    fn brute_force_mincut(g: &WeightedGraph) -> u64 {
        let n = g.vertex_count();
        assert!(n >= 2 && n <= 20);
        let mut best = u64::MAX;
        for mask in 0u32..(1 << (n - 1)) {
            // Sides containing vertex 0: bit i decides vertex i+1.
            let mut side = vec![0];
            for v in 1..n {
                if mask & (1 << (v - 1)) != 0 {
                    side.push(v);
                }
            }
            if side.len() == n {
                continue;
            }
            let value = g.cut_value(&VertexSet::new(side)).unwrap();
            best = best.min(value);
        }
        best
    }

    #[test]
    fn triangle_mincut_is_two() {
        let r = global_mincut(&triangle()).unwrap();
        assert_eq!(r.lambda, 2);
        assert_eq!(r.cut.value, 2);
    }

    #[test]
    fn bridge_is_the_unique_minimum() {
        let r = global_mincut(&two_triangles()).unwrap();
        assert_eq!(r.lambda, 1);
        let side = r.cut.side.members();
        assert!(side == [0, 1, 2] || side == [3, 4, 5]);
    }

    #[test]
    fn parallel_paths_mincut() {
        let r = global_mincut(&parallel_paths()).unwrap();
        assert_eq!(r.lambda, 2);
        assert_eq!(r.cut.side.len(), 1);
    }

    #[test]
    fn disconnected_returns_zero_with_component_side() {
        let g = WeightedGraph::from_edges(5, [(0, 1, 3), (2, 3, 1), (3, 4, 1), (2, 4, 1)]).unwrap();
        let r = global_mincut(&g).unwrap();
        assert_eq!(r.lambda, 0);
        assert_eq!(r.cut.side.members(), [0, 1]);
    }

    #[test]
    fn single_vertex_is_always_connected_enough() {
        let g = WeightedGraph::from_edges(1, []).unwrap();
        assert!(mincut_atleast(&g, 1));
        assert!(mincut_atleast(&g, 1_000_000));
        assert!(matches!(
            global_mincut(&g),
            Err(Error::TooFewVertices { .. })
        ));
    }

    #[test]
    fn connectivity_thresholds() {
        assert!(mincut_atleast(&triangle(), 2));
        assert!(!mincut_atleast(&triangle(), 3));
        let k4 = WeightedGraph::from_edges(
            4,
            [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)],
        )
        .unwrap();
        assert!(mincut_atleast(&k4, 3));
        assert!(!mincut_atleast(&k4, 4));
    }

    #[test]
    fn symmetric_sides_report_the_same_value() {
        let g = two_triangles();
        let r = global_mincut(&g).unwrap();
        let other = r.cut.side.complement(g.vertex_count());
        assert_eq!(g.cut_value(&other).unwrap(), r.lambda);
    }

    #[test]
    fn matches_enumeration_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let n = rng.random_range(2..=8usize);
            let max_m = n * (n - 1) / 2;
            let m = rng.random_range(1..=max_m);
            let mut pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for i in 0..m {
                let j = rng.random_range(i..pairs.len());
                pairs.swap(i, j);
            }
            let edges: Vec<_> = pairs[..m]
                .iter()
                .map(|&(u, v)| (u, v, rng.random_range(1..=10u64)))
                .collect();
            let g = WeightedGraph::from_edges(n, edges).unwrap();
            let fast = global_mincut(&g).unwrap();
            assert_eq!(fast.lambda, brute_force_mincut(&g));
            assert_eq!(g.cut_value(&fast.cut.side).unwrap_or(0), fast.lambda);
        }
    }
}
