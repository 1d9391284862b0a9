//! Immutable weighted undirected graphs with the cut, volume, and
//! contraction queries the partition algorithms are built on.
//!
//! Graphs are simple (no self-loops, at most one edge per vertex pair) with
//! positive integer weights. Parallel edges in the input are merged by
//! summing their weights. Vertex ids are dense `0..n`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Undirected edge with a positive integer weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: u64,
}

impl Edge {
    /// The endpoint that is not `v`. Caller must pass one of the endpoints.
    pub fn other(&self, v: VertexId) -> VertexId {
        debug_assert!(v == self.u || v == self.v);
        if v == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Total edge weight may not exceed this, so that any cut value and any
/// partial sum during incremental maintenance fits comfortably in a `u64`.
pub const MAX_TOTAL_WEIGHT: u128 = 1 << 63;

#[derive(Clone)]
pub struct WeightedGraph {
    edges: Vec<Edge>,
    adj: Vec<Vec<(EdgeId, VertexId)>>,
    pair_index: HashMap<(VertexId, VertexId), EdgeId>,
    total_weight: u64,
}

impl WeightedGraph {
    /// Builds a graph from `(u, v, weight)` triples. Parallel edges are merged
    /// by summing weights; self-loops and zero weights are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Result<Self> {
        let mut merged: HashMap<(VertexId, VertexId), u128> = HashMap::new();
        let mut total: u128 = 0;
        for (u, v, w) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            if w == 0 {
                return Err(Error::ZeroWeight { u, v });
            }
            let key = (u.min(v), u.max(v));
            *merged.entry(key).or_insert(0) += w as u128;
            total += w as u128;
            if total > MAX_TOTAL_WEIGHT {
                return Err(Error::WeightOverflow);
            }
        }
        let mut pairs: Vec<((VertexId, VertexId), u128)> = merged.into_iter().collect();
        pairs.sort_unstable_by_key(|&(key, _)| key);
        let mut g = WeightedGraph {
            edges: Vec::with_capacity(pairs.len()),
            adj: vec![Vec::new(); n],
            pair_index: HashMap::with_capacity(pairs.len()),
            total_weight: total as u64,
        };
        for ((u, v), w) in pairs {
            let id = g.edges.len();
            g.edges.push(Edge {
                u,
                v,
                weight: w as u64,
            });
            g.adj[u].push((id, v));
            g.adj[v].push((id, u));
            g.pair_index.insert((u, v), id);
        }
        Ok(g)
    }

    /// Parses the edge-list format: first non-comment line `n m`, then `m`
    /// lines `u v w`. Lines starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut content = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) = content.next().ok_or(Error::MalformedLine {
            line: 1,
            reason: "missing `n m` header".into(),
        })?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), header_line, "vertex count")?;
        let m: usize = parse_field(it.next(), header_line, "edge count")?;
        if it.next().is_some() {
            return Err(Error::MalformedLine {
                line: header_line,
                reason: "header must be exactly `n m`".into(),
            });
        }
        let mut triples = Vec::with_capacity(m);
        let mut last_line = header_line;
        for _ in 0..m {
            let (line, l) = content.next().ok_or(Error::MalformedLine {
                line: last_line + 1,
                reason: format!("expected {} edge lines, found {}", m, triples.len()),
            })?;
            last_line = line;
            let mut it = l.split_whitespace();
            let u: usize = parse_field(it.next(), line, "endpoint")?;
            let v: usize = parse_field(it.next(), line, "endpoint")?;
            let w_text = it.next().ok_or_else(|| Error::MalformedLine {
                line,
                reason: "missing edge weight".into(),
            })?;
            if it.next().is_some() {
                return Err(Error::MalformedLine {
                    line,
                    reason: "edge line must be exactly `u v w`".into(),
                });
            }
            let w: u64 = match w_text.parse() {
                Ok(w) => w,
                Err(_) if w_text.parse::<i128>().map_or(false, |x| x <= 0) => {
                    return Err(Error::NonPositiveWeight { line })
                }
                Err(_) => {
                    return Err(Error::MalformedLine {
                        line,
                        reason: format!("cannot parse weight `{}`", w_text),
                    })
                }
            };
            if w == 0 {
                return Err(Error::NonPositiveWeight { line });
            }
            if u >= n {
                return Err(Error::VertexOutOfRangeLine { line, vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRangeLine { line, vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoopLine { line, vertex: u });
            }
            triples.push((u, v, w));
        }
        if let Some((line, _)) = content.next() {
            return Err(Error::MalformedLine {
                line,
                reason: "unexpected content after the declared edges".into(),
            });
        }
        Self::from_edges(n, triples)
    }

    /// Renders the canonical edge-list document for this graph.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for e in &self.edges {
            out.push_str(&format!("{} {} {}\n", e.u, e.v, e.weight));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.vertex_count()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    /// Incident `(edge id, other endpoint)` pairs of `v`.
    pub fn incident(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn weighted_degree(&self, v: VertexId) -> u64 {
        self.adj[v].iter().map(|&(e, _)| self.edges[e].weight).sum()
    }

    pub fn max_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).max().unwrap_or(0)
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    /// Edge id between `u` and `v`, if present.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.pair_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Total weight of edges with exactly one endpoint in `x`.
    /// `x` must be a non-empty proper subset of the vertices.
    pub fn cut_value(&self, x: &VertexSet) -> Result<u64> {
        let mask = self.checked_mask(x)?;
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if x.len() == self.vertex_count() {
            return Err(Error::FullVertexSet);
        }
        Ok(self.cut_of_mask(&mask))
    }

    pub(crate) fn cut_of_mask(&self, mask: &[bool]) -> u64 {
        self.edges
            .iter()
            .filter(|e| mask[e.u] != mask[e.v])
            .map(|e| e.weight)
            .sum()
    }

    /// Unweighted count of edges with at least one endpoint in `x`.
    pub fn volume(&self, x: &VertexSet) -> u64 {
        let mask = self
            .checked_mask(x)
            .expect("vertex set out of range for volume");
        self.edges
            .iter()
            .filter(|e| mask[e.u] || mask[e.v])
            .count() as u64
    }

    /// The graph after contracting the complement of `x` into a single
    /// super-vertex. Vertices of `x` keep their sorted order as ids
    /// `0..x.len()`; the super-vertex is the last id. Edges into the
    /// complement are merged by weight summation; edges inside the
    /// complement are dropped.
    pub fn contract_complement(&self, x: &VertexSet) -> Result<WeightedGraph> {
        let mask = self.checked_mask(x)?;
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if x.len() == self.vertex_count() {
            return Err(Error::FullVertexSet);
        }
        let mut rank = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in x.members().iter().enumerate() {
            rank[v] = i;
        }
        let super_vertex = x.len();
        let triples = self.edges.iter().filter_map(|e| {
            match (mask[e.u], mask[e.v]) {
                (true, true) => Some((rank[e.u], rank[e.v], e.weight)),
                (true, false) => Some((rank[e.u], super_vertex, e.weight)),
                (false, true) => Some((rank[e.v], super_vertex, e.weight)),
                (false, false) => None,
            }
        });
        WeightedGraph::from_edges(x.len() + 1, triples.collect::<Vec<_>>())
    }

    /// Induced subgraph on `x`, plus the map from new vertex ids to the
    /// original ids (sorted order of `x`).
    pub fn induced_subgraph(&self, x: &VertexSet) -> Result<(WeightedGraph, Vec<VertexId>)> {
        let mask = self.checked_mask(x)?;
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let map: Vec<VertexId> = x.members().to_vec();
        let mut rank = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in map.iter().enumerate() {
            rank[v] = i;
        }
        let triples: Vec<_> = self
            .edges
            .iter()
            .filter(|e| mask[e.u] && mask[e.v])
            .map(|e| (rank[e.u], rank[e.v], e.weight))
            .collect();
        Ok((WeightedGraph::from_edges(map.len(), triples)?, map))
    }

    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &(_, other) in &self.adj[v] {
                    if !seen[other] {
                        seen[other] = true;
                        comp.push(other);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.connected_components().len() == 1
    }

    fn checked_mask(&self, x: &VertexSet) -> Result<Vec<bool>> {
        let n = self.vertex_count();
        let mut mask = vec![false; n];
        for &v in x.members() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            mask[v] = true;
        }
        Ok(mask)
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("n", &self.vertex_count())
            .field("m", &self.edge_count())
            .field("edges", &self.edges)
            .finish()
    }
}

/// A set of vertex ids, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<VertexId>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = VertexId>) -> Self {
        let mut members: Vec<VertexId> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn singleton(v: VertexId) -> Self {
        VertexSet { members: vec![v] }
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet {
            members: (0..n).collect(),
        }
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.members.iter().copied()
    }

    /// Vertices of `0..n` not in this set.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<T: IntoIterator<Item = VertexId>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// One side of a cut together with the total weight crossing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub side: VertexSet,
    pub value: u64,
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize> {
    field
        .ok_or_else(|| Error::MalformedLine {
            line,
            reason: format!("missing {}", what),
        })?
        .parse()
        .map_err(|_| Error::MalformedLine {
            line,
            reason: format!("cannot parse {}", what),
        })
}
