pub mod cycles;
pub mod density;
pub mod error;
pub mod format;
pub mod graph;
pub mod search;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexLabel};
