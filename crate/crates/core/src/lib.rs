//! Lines in graph metric spaces.
//!
//! For a connected graph `G` the line through two vertices `a` and `b` is the
//! set of vertices lying on a common shortest path with `a` and `b`. This
//! crate computes line systems, decides the graph classes they are studied
//! on (locally connected, chordal, 2-connected, plane embeddings), and runs
//! exhaustive and randomized sweeps that check the known structural results
//! about lines in connected locally connected graphs.

pub mod bitset;
pub mod classes;
pub mod error;
pub mod graph;
pub mod lines;
pub mod metric;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{Graph, NamedGraph};
pub use lines::{Line, LineSystem};
pub use metric::DistanceMatrix;

/// Schema tag written into every JSON document.
pub const SCHEMA: &str = "metric-lines/1";
