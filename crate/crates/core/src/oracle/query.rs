use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId};

use super::{EdgeClass, NodeBody, NodeId, OracleTree, Side};

/// How to treat a fault on the primary path when the target is on the `M`
/// side.
///
/// `Complete` also recurses into the left child, which catches replacement
/// paths that rejoin the primary path below the fault without ever leaving
/// `M`. `NoPrimaryLeftRecursion` takes only the departing and via-separator
/// candidates; it exists so tests can show the recursion is needed.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum QueryMode {
    #[default]
    Complete,
    NoPrimaryLeftRecursion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryResult {
    pub distance: Distance,
    /// Depth of the deepest oracle node consulted.
    pub recursion_depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsrpRecord {
    pub t: VertexId,
    /// Tree edge on the source-to-`t` path, upper endpoint first.
    pub x: VertexId,
    pub y: VertexId,
    pub distance: Distance,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SsrpOutput {
    pub records: Vec<SsrpRecord>,
}

impl SsrpOutput {
    /// One `t\tx\ty\tdist` line per record.
    pub fn to_tsv(&self) -> String {
        let mut out = String::with_capacity(self.records.len() * 16);
        for r in &self.records {
            let _ = writeln!(out, "{}\t{}\t{}\t{}", r.t, r.x, r.y, r.distance);
        }
        out
    }
}

impl OracleTree {
    /// Length of the shortest source-to-`t` path avoiding edge `(x, y)`.
    pub fn query(&self, t: VertexId, x: VertexId, y: VertexId) -> Result<QueryResult> {
        self.query_with_mode(t, x, y, QueryMode::Complete)
    }

    pub fn query_with_mode(&self, t: VertexId, x: VertexId, y: VertexId, mode: QueryMode) -> Result<QueryResult> {
        let g = &self.original_graph;
        for v in [t, x, y] {
            g.check_vertex(v)?;
        }
        let e = g.find_edge(x, y).ok_or(Error::NoSuchEdge(x, y))?;
        self.query_edge(t, e, mode)
    }

    /// Same as [`query`](Self::query) with the fault given by input edge id.
    pub fn query_edge(&self, t: VertexId, e: EdgeId, mode: QueryMode) -> Result<QueryResult> {
        let g = &self.original_graph;
        g.check_vertex(t)?;
        if e >= g.edge_count() {
            return Err(Error::EdgeNotInNode(e));
        }
        let spt = self.spt();
        let base = QueryResult { distance: spt.dist[t], recursion_depth: 0 };
        if !spt.is_reached(t) || !spt.edge_on_tree_path(g, t, e) {
            return Ok(base);
        }
        let local_t = self.to_root_vertex(t).expect("reached vertices are in the root component");
        self.query_node(0, local_t, e, mode)
    }

    /// Case dispatch at one node; `t` is a vertex id of that node's graph and
    /// `e` an input edge id present in it.
    pub fn query_node(&self, id: NodeId, t: VertexId, e: EdgeId, mode: QueryMode) -> Result<QueryResult> {
        let node = &self.nodes[id];
        if t >= node.graph.vertex_count() {
            return Err(Error::VertexNotInNode(t));
        }
        let local = node.local_edge(e)?;
        let here = |distance| Ok(QueryResult { distance, recursion_depth: node.depth });

        let inner = match &node.body {
            NodeBody::Leaf(table) => return here(table.get(local, t).ok_or(Error::EdgeNotInNode(e))?),
            NodeBody::Internal(inner) => inner,
        };
        let d_st = node.spt_s.dist[t];
        let left = |t: VertexId| -> Result<QueryResult> {
            let ct = inner.to_left[t].ok_or(Error::VertexNotInNode(t))?;
            self.query_node(inner.left, ct, e, mode)
        };
        let right = |t: VertexId| -> Result<QueryResult> {
            let ct = inner.to_right[t].ok_or(Error::VertexNotInNode(t))?;
            self.query_node(inner.right, ct, e, mode)
        };

        match inner.edge_class[local] {
            EdgeClass::Crossing => here(d_st),
            EdgeClass::N => match inner.side[t] {
                Side::M => here(d_st),
                Side::N | Side::Both => right(t),
            },
            EdgeClass::MOffPrimary => match inner.side[t] {
                Side::N => here(d_st),
                Side::M | Side::Both => left(t),
            },
            EdgeClass::MOnPrimary => {
                let path = &inner.primary_path;
                let j = path.edge_position(&node.graph, local).expect("edge is classified on the primary path");
                let via_r = inner.sr_replacements.get(j) + inner.spt_r.dist[t];
                if t == inner.separator {
                    return here(inner.sr_replacements.get(j));
                }
                let mut best = via_r;
                if !path.contains(t) {
                    best = best.min(inner.dep[t].query(j));
                }
                let mut depth = node.depth;
                if inner.side[t] == Side::M && mode == QueryMode::Complete {
                    let sub = left(t)?;
                    best = best.min(sub.distance);
                    depth = sub.recursion_depth;
                }
                Ok(QueryResult { distance: best, recursion_depth: depth })
            }
        }
    }

    /// Every `(t, e)` with `e` a tree edge on the source-to-`t` path, in
    /// order of `t`, then of `e` from the source down.
    pub fn ssrp(&self) -> SsrpOutput {
        self.ssrp_with_mode(QueryMode::Complete)
    }

    pub fn ssrp_with_mode(&self, mode: QueryMode) -> SsrpOutput {
        let spt = self.spt();
        let g = &self.original_graph;
        let records = (0..g.vertex_count())
            .into_par_iter()
            .filter(|&t| spt.is_reached(t) && t != self.original_source)
            .flat_map_iter(|t| {
                let mut chain = Vec::with_capacity(spt.depth[t]);
                let mut v = t;
                while let Some(p) = spt.parent[v] {
                    chain.push((p, v, spt.parent_edge[v].expect("tree edge")));
                    v = p;
                }
                chain.reverse();
                chain.into_iter().map(move |(x, y, e)| {
                    let distance = self
                        .query_edge(t, e, mode)
                        .expect("tree edges and reached vertices are valid queries")
                        .distance;
                    SsrpRecord { t, x, y, distance }
                })
            })
            .collect();
        SsrpOutput { records }
    }
}
