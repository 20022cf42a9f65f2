//! Exact zero forcing, Z-Grundy domination, total domination and power
//! domination for small graphs, together with executable forms of the
//! constructive bounds relating them.

pub mod constructions;
pub mod deadline;
pub mod domination;
pub mod error;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod powerdom;

pub use deadline::Deadline;
pub use error::{Error, Graph6Error, Result};
pub use graph::{Graph, VertexSet};
