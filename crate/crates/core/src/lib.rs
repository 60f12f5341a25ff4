//! Multigraph algorithms around strong immersions: immersion search and
//! verification, edge flows, path-like and tree-cut decompositions with
//! checkable certificates, and the associated constants.
//!
//! Graphs are values: every operation returns a new [`Multigraph`] and
//! never mutates its inputs. Edges carry their own identifiers so parallel
//! edges stay distinguishable and certificates can name them.

pub mod bounds;
pub mod connectivity;
pub mod error;
pub mod generators;
pub mod graph;
pub mod immersion;
pub mod iso;
pub mod path_decomp;
pub mod tree_cut;

mod indexed;

pub use error::{Error, Result};
pub use graph::{vertex_set, Multigraph, Separation, VertexSet};
