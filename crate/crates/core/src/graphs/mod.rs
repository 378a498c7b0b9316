//! Multigraphs with loops and parallel edges, crossing graphs of matchings and
//! partitions, the Tutte evaluation `T(1, q)`, and orientation counting.

mod multigraph;
mod orient;
pub mod population;
mod tutte;

pub use multigraph::{
    crossing_graph, crossing_graph_partition, is_connected_graph, normalized_partition_sum,
    partition_sum_u, spanning_tree_count, CrossingGraph, Multigraph, RootedMultigraph,
};
pub use orient::{
    count_root_connected, count_single_source_acyclic, count_uniquesource_acyclic,
    enumerate_orientations, is_acyclic, is_root_connected, reachable_from, sources, Orientation,
};
pub use tutte::{tutte_1q, TutteEngine, TutteEvaluator};

use thiserror::Error;

use crate::exactpoly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("root {root} outside 0..{n}")]
    RootOutOfRange { root: usize, n: usize },
    #[error("graph is not connected")]
    DisconnectedInput,
    #[error("graph has no vertices")]
    NoVertices,
    #[error("orientation has {got} directions, graph has {expected} edges")]
    OrientationLength { expected: usize, got: usize },
    #[error("graph too large for exhaustive enumeration")]
    TooLarge,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
