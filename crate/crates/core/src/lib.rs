//! Rainbow and strong rainbow connectivity for block and split graphs:
//! exact strong rainbow coloring of block graphs via clique trees, rc
//! bounds and the rc <= 4 classification of bridgeless block graphs, the
//! star-to-split hardness construction, and brute-force oracles that
//! cross-check all of it at desk scale.

pub mod chordal;
pub mod coloring;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod rc_analysis;
pub mod reduction;
pub mod src_algo;

pub use coloring::EdgeColoring;
pub use error::{Error, Result};
pub use graph::Graph;
