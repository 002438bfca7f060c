//! Single-source distance oracle for undirected unweighted graphs that
//! survives one edge fault.
//!
//! Build an [`OracleTree`] for a source `s`, then ask for the length of the
//! shortest `s → t` path avoiding any edge on the `s → t` shortest-path tree
//! route:
//!
//! ```
//! use sdo_core::{Distance, Graph, OracleTree};
//!
//! // 4-cycle 0-1-2-3-0
//! let g = Graph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
//! let oracle = OracleTree::build(&g, 0).unwrap();
//! assert_eq!(oracle.query(2, 0, 1).unwrap().distance, Distance::Finite(2));
//! assert_eq!(oracle.query(1, 0, 1).unwrap().distance, Distance::Finite(3));
//! ```

pub mod baseline;
pub mod departing;
pub mod distance;
pub mod error;
pub mod gen;
pub mod graph;
pub mod lca;
pub mod oracle;
pub mod rp_pair;
pub mod separator;
pub mod spt;

pub use baseline::{brute_query, brute_ssrp};
pub use departing::{brute_departing, build_dep, DepArray, DepEntry};
pub use distance::Distance;
pub use error::{Error, Result};
pub use graph::{Edge, EdgeId, EdgeKind, Graph, VertexId};
pub use oracle::{EdgeClass, OracleStats, OracleTree, QueryMode, QueryResult, Side, SsrpOutput, SsrpRecord};
pub use spt::{dijkstra, ShortestPathTree};
