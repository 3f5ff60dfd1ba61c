//! Analysis of distance-balanced graphs: metric half-sets, the
//! distance-balanced / strongly-distance-balanced / partial-cube
//! predicates, minimal 2-cut decomposition into good and bad components,
//! the W(m, l) graph family, and a graph6 batch scanner that filters
//! streams for bipartite distance-balanced non-cycles that are not
//! 3-connected.

pub mod constructions;
pub mod decomposition;
pub mod error;
pub mod filter;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod metric;
pub mod properties;
pub mod report;
pub mod scan;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use metric::{all_pairs_distances, DistanceMatrix, UNREACHABLE};
