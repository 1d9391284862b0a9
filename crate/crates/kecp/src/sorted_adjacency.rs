//! Per-vertex adjacency lists sorted by rank key, with O(1) journaled
//! deletion and exact undo.
//!
//! Each edge owns two list nodes, one per endpoint, linked into that
//! endpoint's circular doubly-linked list behind a sentinel. Deleting an edge
//! unlinks both nodes without touching their own pointers, so undoing the
//! journal in reverse order relinks them and restores the structure
//! bit-identically.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId, WeightedGraph};
use crate::rank::{EdgeRank, RankAssignment};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortedAdjacency {
    m: usize,
    n: usize,
    rank: Vec<EdgeRank>,
    next: Vec<usize>,
    prev: Vec<usize>,
    present: Vec<bool>,
    journal: Vec<EdgeId>,
}

impl SortedAdjacency {
    /// Builds the structure for `g` under the keys of `r`.
    pub fn build(g: &WeightedGraph, r: &RankAssignment) -> SortedAdjacency {
        let m = g.edge_count();
        let n = g.vertex_count();
        let nodes = 2 * m + n;
        let mut sa = SortedAdjacency {
            m,
            n,
            rank: (0..m).map(|e| r.order_key(e)).collect(),
            next: (0..nodes).collect(),
            prev: (0..nodes).collect(),
            present: vec![true; m],
            journal: Vec::new(),
        };
        let mut entries: Vec<(EdgeRank, usize)> = Vec::new();
        for v in 0..n {
            entries.clear();
            for &(e, _) in g.incident(v) {
                let node = if g.edge(e).u == v { 2 * e } else { 2 * e + 1 };
                entries.push((sa.rank[e], node));
            }
            entries.sort_unstable();
            let sentinel = sa.sentinel(v);
            let mut tail = sentinel;
            for &(_, node) in entries.iter() {
                sa.next[tail] = node;
                sa.prev[node] = tail;
                tail = node;
            }
            sa.next[tail] = sentinel;
            sa.prev[sentinel] = tail;
        }
        sa
    }

    fn sentinel(&self, v: VertexId) -> usize {
        2 * self.m + v
    }

    pub fn rank_of(&self, e: EdgeId) -> EdgeRank {
        self.rank[e]
    }

    pub fn is_present(&self, e: EdgeId) -> bool {
        self.present[e]
    }

    pub fn journal_len(&self) -> usize {
        self.journal.len()
    }

    /// Minimum-key edge in `v`'s list, if any.
    pub fn head_edge(&self, v: VertexId) -> Option<EdgeId> {
        let s = self.sentinel(v);
        let h = self.next[s];
        if h == s {
            None
        } else {
            Some(h / 2)
        }
    }

    /// Minimum-key edge over the list heads of the given vertices.
    pub fn next_edge(&self, xs: impl IntoIterator<Item = VertexId>) -> Option<EdgeId> {
        xs.into_iter()
            .filter_map(|v| self.head_edge(v))
            .min_by_key(|&e| self.rank[e])
    }

    /// Unlinks `e` from both endpoint lists and records it in the journal.
    pub fn delete(&mut self, e: EdgeId) -> Result<()> {
        if e >= self.m || !self.present[e] {
            return Err(Error::EdgeAbsent { edge: e });
        }
        self.unlink(2 * e);
        self.unlink(2 * e + 1);
        self.present[e] = false;
        self.journal.push(e);
        Ok(())
    }

    /// Undoes every journaled deletion in reverse order, restoring the exact
    /// pre-journal state.
    pub fn undo_journal(&mut self) {
        while let Some(e) = self.journal.pop() {
            self.relink(2 * e + 1);
            self.relink(2 * e);
            self.present[e] = true;
        }
    }

    fn unlink(&mut self, node: usize) {
        let (p, nx) = (self.prev[node], self.next[node]);
        self.next[p] = nx;
        self.prev[nx] = p;
    }

    fn relink(&mut self, node: usize) {
        let (p, nx) = (self.prev[node], self.next[node]);
        self.next[p] = node;
        self.prev[nx] = node;
    }

    /// Non-deleted edges of `v`'s list in rank order, for inspection.
    pub fn list(&self, v: VertexId) -> Vec<EdgeId> {
        let s = self.sentinel(v);
        let mut out = Vec::new();
        let mut node = self.next[s];
        while node != s {
            out.push(node / 2);
            node = self.next[node];
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_capacity(&self) -> usize {
        self.m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::{sample_assignment, SeedStream};
    use proptest::prelude::*;

    fn triangle() -> WeightedGraph {
        WeightedGraph::from_edges(3, [(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap()
    }

    fn keyed(g: &WeightedGraph, seed: u64) -> RankAssignment {
        sample_assignment(g, &SeedStream::new(seed), 0)
    }

    #[test]
    fn empty_graph_builds_empty_structure() {
        let g = WeightedGraph::from_edges(3, []).unwrap();
        let sa = SortedAdjacency::build(&g, &keyed(&g, 0));
        for v in 0..3 {
            assert_eq!(sa.list(v), Vec::<EdgeId>::new());
            assert_eq!(sa.head_edge(v), None);
        }
        assert_eq!(sa.next_edge(0..3), None);
    }

    #[test]
    fn lists_are_sorted_by_rank() {
        let g = triangle();
        for seed in 0..50 {
            let r = keyed(&g, seed);
            let sa = SortedAdjacency::build(&g, &r);
            for v in 0..3 {
                let list = sa.list(v);
                assert_eq!(list.len(), 2);
                assert!(r.order_key(list[0]) < r.order_key(list[1]));
            }
        }
    }

    #[test]
    fn next_edge_picks_global_head_minimum() {
        let g = triangle();
        let r = keyed(&g, 3);
        let sa = SortedAdjacency::build(&g, &r);
        assert_eq!(sa.next_edge([]), None);
        let e = sa.next_edge([0]).unwrap();
        assert_eq!(e, sa.head_edge(0).unwrap());
        let all = sa.next_edge(0..3).unwrap();
        let min = (0..3).map(|e| r.order_key(e)).min().unwrap();
        assert_eq!(r.order_key(all), min);
    }

    #[test]
    fn delete_then_undo_restores_exactly() {
        let g = triangle();
        let sa0 = SortedAdjacency::build(&g, &keyed(&g, 11));
        let mut sa = sa0.clone();
        sa.delete(0).unwrap();
        sa.delete(2).unwrap();
        assert_ne!(sa, sa0);
        sa.undo_journal();
        assert_eq!(sa, sa0);
    }

    #[test]
    fn delete_skips_list_entries() {
        let g = triangle();
        // Edge ids by sorted pair: (0,1)=0, (0,2)=1, (1,2)=2.
        let r = keyed(&g, 1);
        let mut sa = SortedAdjacency::build(&g, &r);
        let first = sa.next_edge([0]).unwrap();
        sa.delete(first).unwrap();
        let second = sa.next_edge([0]).unwrap();
        assert_ne!(first, second);
        assert!(r.order_key(first) < r.order_key(second));
    }

    #[test]
    fn deleting_absent_edge_errors() {
        let g = triangle();
        let mut sa = SortedAdjacency::build(&g, &keyed(&g, 0));
        sa.delete(1).unwrap();
        assert!(matches!(sa.delete(1), Err(Error::EdgeAbsent { edge: 1 })));
        assert!(matches!(sa.delete(9), Err(Error::EdgeAbsent { edge: 9 })));
    }

    proptest! {
        #[test]
        fn any_delete_sequence_undoes_cleanly(
            seed in 0u64..1000,
            order in proptest::collection::vec(0usize..12, 0..12),
        ) {
            let g = WeightedGraph::from_edges(
                5,
                [
                    (0, 1, 2), (0, 2, 1), (0, 3, 4), (1, 2, 3),
                    (1, 4, 1), (2, 3, 2), (3, 4, 5), (2, 4, 2),
                ],
            ).unwrap();
            let sa0 = SortedAdjacency::build(&g, &keyed(&g, seed));
            let mut sa = sa0.clone();
            for e in order {
                if e < g.edge_count() && sa.is_present(e) {
                    sa.delete(e).unwrap();
                }
            }
            sa.undo_journal();
            prop_assert_eq!(sa, sa0);
        }
    }
}
