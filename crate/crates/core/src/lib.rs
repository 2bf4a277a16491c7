//! Exact polytopes of edge-type vectors for chemical graphs.

pub mod error;
pub mod builder;
pub mod exec;
pub mod expr;
pub mod facets;
pub mod graph;
pub mod index;
pub mod model;
mod numser;
pub mod optimize;
pub mod oracle;
pub mod polytope;
pub mod realize;
pub mod small;
pub mod verify;
pub mod vertices;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::ChemicalGraph;
pub use model::{
    derive_degree_counts, derive_full_vector, reduce_index, DegreeCounts, EdgeTypeVector,
    IndexSpec, OrderSize, Point3, ReducedIndex,
};
