//! The recursive oracle tree.
//!
//! Each internal node splits its shortest-path tree at a separator `r`
//! into `M` (holding the source) and `N` (hanging from `r`), stores the
//! tables needed to answer faults on the primary path `s → r` directly, and
//! recurses on two smaller graphs:
//!
//! * left: the subgraph induced by `V_M`, plus a weighted edge `r → v` for
//!   every `v ∈ V_M` priced at the shortest `r → v` route avoiding all of
//!   `M`'s edges;
//! * right: the subgraph induced by `V_N`, plus a fresh source with an edge
//!   to every `v ∈ V_N` priced at the shortest `s → v` route avoiding all of
//!   `N`'s edges.
//!
//! Nodes live in an arena; index 0 is the root.

mod build;
mod query;

use serde::{Deserialize, Serialize};

use crate::departing::{DepArray, DepStats};
use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::rp_pair::PathReplacementTable;
use crate::spt::{dijkstra, PathOnTree, ShortestPathTree};

pub use build::LEAF_MAX_VERTICES;
pub use query::{QueryMode, QueryResult, SsrpOutput, SsrpRecord};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    M,
    N,
    /// The separator, shared by both sides.
    Both,
}

impl Side {
    pub fn in_m(self) -> bool {
        matches!(self, Side::M | Side::Both)
    }

    pub fn in_n(self) -> bool {
        matches!(self, Side::N | Side::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeClass {
    MOnPrimary,
    MOffPrimary,
    N,
    Crossing,
}

impl EdgeClass {
    pub fn in_m(self) -> bool {
        matches!(self, EdgeClass::MOnPrimary | EdgeClass::MOffPrimary)
    }
}

/// Per-edge answers for a leaf: `rows[i] = (local edge id, distances)` for
/// every `Original` edge, sorted by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafTable {
    pub rows: Vec<(EdgeId, Vec<Distance>)>,
}

impl LeafTable {
    pub fn get(&self, e: EdgeId, t: VertexId) -> Option<Distance> {
        let i = self.rows.binary_search_by_key(&e, |(id, _)| *id).ok()?;
        self.rows[i].1.get(t).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InternalNode {
    pub separator: VertexId,
    pub primary_path: PathOnTree,
    pub spt_r: ShortestPathTree,
    /// Shortest `s → v` length with every `N` edge removed.
    pub dist_s_avoiding_n: Vec<Distance>,
    /// Shortest `r → v` length with every `M` edge removed.
    pub dist_r_avoiding_m: Vec<Distance>,
    pub sr_replacements: PathReplacementTable,
    pub dep: Vec<DepArray>,
    pub dep_stats: DepStats,
    pub side: Vec<Side>,
    pub edge_class: Vec<EdgeClass>,
    pub to_left: Vec<Option<VertexId>>,
    pub to_right: Vec<Option<VertexId>>,
    pub left: NodeId,
    pub right: NodeId,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum NodeBody {
    Leaf(LeafTable),
    Internal(Box<InternalNode>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleNode {
    pub graph: Graph,
    pub source: VertexId,
    pub depth: usize,
    pub spt_s: ShortestPathTree,
    /// `(input edge id, local edge id)` for every `Original` edge, sorted.
    pub origin_index: Vec<(EdgeId, EdgeId)>,
    pub body: NodeBody,
}

impl OracleNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.body, NodeBody::Leaf(_))
    }

    pub fn internal(&self) -> Option<&InternalNode> {
        match &self.body {
            NodeBody::Internal(inner) => Some(inner),
            NodeBody::Leaf(_) => None,
        }
    }

    /// Local id of the `Original` edge copied from input edge `origin`.
    pub fn local_edge(&self, origin: EdgeId) -> Result<EdgeId> {
        self.origin_index
            .binary_search_by_key(&origin, |(o, _)| *o)
            .map(|i| self.origin_index[i].1)
            .map_err(|_| Error::EdgeNotInNode(origin))
    }

    /// Which side of this node's split the input edge `origin` falls on.
    pub fn classify(&self, origin: EdgeId) -> Result<EdgeClass> {
        let local = self.local_edge(origin)?;
        match &self.body {
            NodeBody::Internal(inner) => Ok(inner.edge_class[local]),
            // A leaf has no split; everything is on its (only) side.
            NodeBody::Leaf(_) => Ok(EdgeClass::MOffPrimary),
        }
    }
}

/// Summary numbers for a built oracle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleStats {
    pub vertices: usize,
    pub edges: usize,
    pub component_size: usize,
    pub nodes: usize,
    pub leaves: usize,
    pub depth: usize,
    /// Sum over nodes of the node graph's vertex count.
    pub total_node_vertices: usize,
    pub total_dep_entries: usize,
    pub max_dep_len: usize,
    pub root_max_dep_len: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleTree {
    pub original_graph: Graph,
    pub original_source: VertexId,
    pub nodes: Vec<OracleNode>,
    /// Input vertex id → root-node vertex id; `None` outside the source's
    /// component.
    #[serde(skip)]
    to_root: Vec<Option<VertexId>>,
    /// Shortest-path tree of the input graph, with its ancestor index.
    #[serde(skip)]
    root_spt: Option<ShortestPathTree>,
}

impl OracleTree {
    pub fn root(&self) -> &OracleNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: NodeId) -> &OracleNode {
        &self.nodes[id]
    }

    pub fn source(&self) -> VertexId {
        self.original_source
    }

    pub fn graph(&self) -> &Graph {
        &self.original_graph
    }

    /// Fault-free shortest-path tree of the input graph.
    pub fn spt(&self) -> &ShortestPathTree {
        self.root_spt.as_ref().expect("index is rebuilt on construction and load")
    }

    pub fn to_root_vertex(&self, v: VertexId) -> Option<VertexId> {
        self.to_root.get(v).copied().flatten()
    }

    /// Maximum node depth (the root has depth 0).
    pub fn depth(&self) -> usize {
        self.nodes.iter().map(|n| n.depth).max().unwrap_or(0)
    }

    /// Depth bound `⌈log_{3/2} n⌉ + 2` for an input component of `n` vertices.
    pub fn depth_bound(n: usize) -> usize {
        if n <= 1 {
            return 2;
        }
        ((n as f64).ln() / 1.5f64.ln()).ceil() as usize + 2
    }

    pub fn stats(&self) -> OracleStats {
        let mut s = OracleStats {
            vertices: self.original_graph.vertex_count(),
            edges: self.original_graph.edge_count(),
            component_size: self.root().graph.vertex_count(),
            nodes: self.nodes.len(),
            depth: self.depth(),
            ..Default::default()
        };
        for (id, node) in self.nodes.iter().enumerate() {
            s.total_node_vertices += node.graph.vertex_count();
            match &node.body {
                NodeBody::Leaf(_) => s.leaves += 1,
                NodeBody::Internal(inner) => {
                    let longest = inner.dep.iter().map(DepArray::len).max().unwrap_or(0);
                    s.total_dep_entries += inner.dep.iter().map(DepArray::len).sum::<usize>();
                    s.max_dep_len = s.max_dep_len.max(longest);
                    if id == 0 {
                        s.root_max_dep_len = longest;
                    }
                }
            }
        }
        s
    }

    fn rebuild_indices(&mut self) {
        let spt = dijkstra(&self.original_graph, self.original_source, &[]).with_lca();
        let mut to_root = vec![None; self.original_graph.vertex_count()];
        let mut next = 0;
        for (v, slot) in to_root.iter_mut().enumerate() {
            if spt.is_reached(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        self.to_root = to_root;
        self.root_spt = Some(spt);
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(text: &str) -> Result<OracleTree> {
        let mut tree: OracleTree = serde_json::from_str(text)?;
        tree.rebuild_indices();
        Ok(tree)
    }
}
