//! Canonical nested generating sets for the cycle spaces of finite planar
//! graphs.
//!
//! For 3-connected graphs the generators are the face boundaries. Lower
//! connectivity is handled through the block decomposition and the Tutte
//! decomposition of each block, after completing its adhesion sets.
//!
//! ```
//! use cyclenest::{fixtures, generator::generate_3connected};
//!
//! let d = generate_3connected(&fixtures::cube()).unwrap();
//! assert_eq!(d.len(), 6);
//! assert!(d.verify().unwrap().holds());
//! ```

pub mod decomposition;
pub mod duality;
pub mod embedding;
pub mod error;
pub mod fixtures;
pub mod generator;
pub mod graph;
pub mod nestedness;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Cut, Cycle, Edge, EdgeId, EdgeSet, Multigraph, Relabeling, VertexId};
