pub mod cli;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod io;
pub mod resolving;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{Graph, LatticeVector, VertexLabel};
