//! Deterministic instance generators: the named fixtures, random weighted
//! graphs, and instances with a planted extreme set shipped with its
//! certificate.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extreme::is_extreme;
use crate::graph::{VertexSet, WeightedGraph};
use crate::local::LocalCutQuery;

/// s = 0, u1..u3 = 1..3, t = 4, joined by three parallel length-2 unit
/// paths. s and t are 3-edge-connected as a vertex pair, yet no induced
/// subgraph containing any two vertices is 3-edge-connected.
pub fn parallel_paths() -> WeightedGraph {
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
    .expect("fixture is valid")
}

/// Unit triangles {0,1,2} and {3,4,5} joined by the unit bridge 2-3.
pub fn two_triangles() -> WeightedGraph {
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
    .expect("fixture is valid")
}

/// Unit path on `n` vertices.
pub fn path_graph(n: usize) -> WeightedGraph {
    WeightedGraph::from_edges(n, (1..n).map(|v| (v - 1, v, 1))).expect("fixture is valid")
}

/// Complete graph on `n` vertices with uniform edge weight.
pub fn complete_graph(n: usize, weight: u64) -> WeightedGraph {
    let edges = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v, weight)));
    WeightedGraph::from_edges(n, edges.collect::<Vec<_>>()).expect("fixture is valid")
}

/// A unit path of `path_vertices` vertices attached by one edge to a unit
/// clique of `clique_size` vertices. Clique edges have strength
/// `clique_size - 1`; path edges (including the attachment) have strength 1.
pub fn lollipop(path_vertices: usize, clique_size: usize) -> WeightedGraph {
    assert!(path_vertices >= 1 && clique_size >= 2);
    let n = path_vertices + clique_size;
    let mut edges: Vec<(usize, usize, u64)> = (1..path_vertices).map(|v| (v - 1, v, 1)).collect();
    edges.push((path_vertices - 1, path_vertices, 1));
    for u in path_vertices..n {
        for v in (u + 1)..n {
            edges.push((u, v, 1));
        }
    }
    WeightedGraph::from_edges(n, edges).expect("fixture is valid")
}

/// Random simple graph: `edge_target` distinct pairs (capped at the maximum
/// possible) with weights uniform in `1..=max_weight`. Deterministic per
/// seed; may be disconnected.
pub fn random_weighted(n: usize, edge_target: usize, max_weight: u64, seed: u64) -> WeightedGraph {
    assert!(max_weight >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let m = edge_target.min(pairs.len());
    for i in 0..m {
        let j = rng.random_range(i..pairs.len());
        pairs.swap(i, j);
    }
    let edges: Vec<_> = pairs[..m]
        .iter()
        .map(|&(u, v)| (u, v, rng.random_range(1..=max_weight)))
        .collect();
    WeightedGraph::from_edges(n, edges).expect("generated edges are valid")
}

/// A graph with a planted extreme set and the query that finds it.
#[derive(Debug, Clone)]
pub struct PlantedExtreme {
    pub graph: WeightedGraph,
    /// The planted set; extreme by construction and re-checked at
    /// generation.
    pub core: VertexSet,
    /// Cut value of the planted set.
    pub core_cut: u64,
    /// A query satisfied exactly by the planted set.
    pub query: LocalCutQuery,
}

/// Plants a heavy clique core of `core_size` vertices inside a random unit
/// periphery of `periphery_size` vertices. Each core vertex hangs off the
/// periphery by one unit edge, so the core cut is `core_size`; internal
/// clique edges weigh `core_size + 1`, making every strict subset of the
/// core strictly more expensive to cut. The certificate is verified with
/// the brute-force extremeness oracle before returning.
pub fn planted_extreme(core_size: usize, periphery_size: usize, seed: u64) -> PlantedExtreme {
    assert!((2..=16).contains(&core_size));
    assert!(periphery_size >= 1);
    let n = core_size + periphery_size;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let heavy = core_size as u64 + 1;
    let mut edges: Vec<(usize, usize, u64)> = Vec::new();
    for u in 0..core_size {
        for v in (u + 1)..core_size {
            edges.push((u, v, heavy));
        }
    }
    // Periphery: a random tree plus a few extra unit edges.
    for v in (core_size + 1)..n {
        let parent = rng.random_range(core_size..v);
        edges.push((parent, v, 1));
    }
    let extra = periphery_size / 2;
    for _ in 0..extra {
        let u = rng.random_range(core_size..n);
        let v = rng.random_range(core_size..n);
        if u != v {
            edges.push((u.min(v), u.max(v), 1));
        }
    }
    // One unit edge from every core vertex into the periphery.
    for u in 0..core_size {
        let anchor = rng.random_range(core_size..n);
        edges.push((u, anchor, 1));
    }
    let graph = WeightedGraph::from_edges(n, edges).expect("generated edges are valid");
    let core = VertexSet::new(0..core_size);
    let core_cut = graph.cut_value(&core).expect("core is a proper subset");
    assert_eq!(core_cut, core_size as u64);
    assert!(
        is_extreme(&graph, &core).expect("core is within the oracle cap"),
        "planted core must be extreme"
    );
    let volume = graph.volume(&core);
    let query = LocalCutQuery::volume_bounded(
        0,
        volume + 1,
        core_size + 1,
        core_cut + 1,
    );
    PlantedExtreme {
        graph,
        core,
        core_cut,
        query,
    }
}

/// Edge-list document for a planted instance, certificate in the comments.
pub fn planted_extreme_document(p: &PlantedExtreme) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# planted-extreme core={:?} cut={} query: x={} nu={:?} sigma={} k={}\n",
        p.core.members(),
        p.core_cut,
        p.query.seed_vertex,
        p.query.volume_bound,
        p.query.size_bound,
        p.query.cut_threshold,
    ));
    out.push_str(&p.graph.to_edge_list());
    out
}
