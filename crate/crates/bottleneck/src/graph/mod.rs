//! Bottleneck cycles in undirected multigraphs, directed graphs, and mixed
//! graphs. All solvers are max-min native; min-max flips the weight
//! comparisons and reports the original weights.

mod digraph;
mod mixed;
mod undirected;

pub use digraph::{
    bottleneck_cycle_directed, bottleneck_cycle_directed_sorted,
    bottleneck_cycle_directed_with_stats, sorted_edge_order, validate_directed_cycle, DiEdge,
    DriverStats, WeightedDigraph,
};
pub use mixed::{
    bottleneck_cycle_mixed, mixed_to_directed, validate_mixed_cycle, EdgeOrigin, MixedCycle,
    MixedCycleStep, MixedEdgeRef, MixedGraph,
};
pub use undirected::{bottleneck_cycle_undirected, validate_undirected_cycle, WeightedMultigraph};

use serde::Serialize;
use thiserror::Error;

use crate::quality::Direction;

/// A bottleneck cycle: its extreme weight and a witnessing ordered edge
/// list, closed and vertex-simple under the graph class's rules.
#[derive(Clone, Debug, Serialize)]
pub struct CycleResult<W> {
    pub value: W,
    pub edges: Vec<usize>,
    pub direction: Direction,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("the graph contains no cycle of the required kind")]
    NoCycle,
    #[error("internal reconstruction failure: {0}")]
    Internal(String),
}
