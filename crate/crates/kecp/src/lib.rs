//! Maximal k-edge-connected partitions of weighted undirected graphs, and
//! (1+eps)-approximate edge strengths built on top of them.
//!
//! The partition of a graph at threshold `k` is the unique decomposition of
//! the vertices into maximal sets whose induced subgraphs are
//! k-edge-connected. Two algorithms compute it:
//!
//! * [`partition::rec_mincut`] — the recursive-mincut baseline: split along
//!   any global minimum cut below `k` and recurse. Exact and deterministic;
//!   serves as the correctness oracle.
//! * [`partition::maximal_partition`] — the local algorithm: peel off small
//!   low-cut sets found by randomized local search
//!   ([`local::local_kcut_volume`] / [`local::local_kcut_cardinality`])
//!   before every global mincut, which keeps the splitting recursion
//!   shallow.
//!
//! The local search grows a set from a seed vertex along minimum-rank cut
//! edges under random per-edge ranks ([`rank`]) whose minimum is
//! weight-proportional, the weighted analogue of random contraction.
//! [`strength::approx_strengths`] sweeps `k` over a geometric grid of
//! partitions to bracket the strength of every edge within a factor of
//! (1+eps).
//!
//! ```
//! use kecp::generate::two_triangles;
//! use kecp::partition::{maximal_partition, rec_mincut, Variant};
//! use kecp::rank::SeedStream;
//!
//! let g = two_triangles();
//! let baseline = rec_mincut(&g, 2);
//! let local = maximal_partition(&g, 2, Variant::Auto, SeedStream::new(42));
//! assert_eq!(baseline, local);
//! assert_eq!(baseline.parts(), &[vec![0, 1, 2], vec![3, 4, 5]]);
//! ```

pub mod error;
pub mod extreme;
pub mod generate;
pub mod graph;
pub mod local;
pub mod mincut;
pub mod partition;
pub mod rank;
pub mod sorted_adjacency;
pub mod strength;

pub use error::{Error, Result};
pub use graph::{Cut, Edge, EdgeId, VertexId, VertexSet, WeightedGraph};
pub use local::{FoundCut, LocalCutOutcome, LocalCutQuery};
pub use mincut::{global_mincut, mincut_atleast, MincutResult};
pub use partition::{
    k_cut_partition, maximal_partition, parameter_schedule, rec_mincut, verify_partition,
    Partition, PartitionTrace, Variant,
};
pub use rank::{sample_assignment, sample_rank, RankAssignment, SeedStream, DEFAULT_SEED};
pub use strength::{approx_strengths, exact_strengths, StrengthEstimates};
