//! Undirected multigraph with non-negative integer weights.
//!
//! Input graphs are unweighted; every edge is `Original` with weight 1 and
//! carries its own id as `origin`. Oracle child graphs add `Virtual`
//! weighted edges, and their `Original` edges keep the id of the input edge
//! they were copied from, so a fault named in the input graph can be located
//! at any depth of the recursion.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    Original,
    Virtual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: u64,
    pub kind: EdgeKind,
    /// Input-graph edge id for `Original` edges, `None` for `Virtual` ones.
    pub origin: Option<EdgeId>,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_original(&self) -> bool {
        self.kind == EdgeKind::Original
    }
}

/// Adjacency is stored in CSR form; each slot is `(neighbor, edge id)` and
/// every edge appears once in each endpoint's slice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    adjacency: Vec<(VertexId, EdgeId)>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl From<GraphRepr> for Graph {
    fn from(r: GraphRepr) -> Self {
        Graph::from_edges(r.vertex_count, r.edges)
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { vertex_count: g.vertex_count, edges: g.edges }
    }
}

impl Graph {
    /// Builds a graph from an edge list. Panics if an endpoint is out of range.
    pub fn from_edges(vertex_count: usize, edges: Vec<Edge>) -> Graph {
        let mut degree = vec![0usize; vertex_count + 1];
        for e in &edges {
            assert!(e.u < vertex_count && e.v < vertex_count, "edge endpoint out of range");
            degree[e.u] += 1;
            if e.v != e.u {
                degree[e.v] += 1;
            }
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        let mut acc = 0;
        for d in &degree[..vertex_count] {
            offsets.push(acc);
            acc += d;
        }
        offsets.push(acc);
        let mut fill = offsets.clone();
        let mut adjacency = vec![(0, 0); acc];
        for (id, e) in edges.iter().enumerate() {
            adjacency[fill[e.u]] = (e.v, id);
            fill[e.u] += 1;
            if e.v != e.u {
                adjacency[fill[e.v]] = (e.u, id);
                fill[e.v] += 1;
            }
        }
        Graph { vertex_count, edges, offsets, adjacency }
    }

    /// Unit-weight input graph; edge `i` gets origin `i`.
    pub fn unweighted(vertex_count: usize, pairs: &[(VertexId, VertexId)]) -> Graph {
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| Edge { u, v, weight: 1, kind: EdgeKind::Original, origin: Some(id) })
            .collect();
        Graph::from_edges(vertex_count, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// First edge joining `u` and `v`, if any.
    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).iter().filter(|&&(w, _)| w == b).map(|&(_, id)| id).min()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count })
        }
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines
    /// `u v`. Everything after `#` on a line is ignored.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) =
            lines.next().ok_or(Error::Parse { line: 1, msg: "missing `n m` header".into() })?;
        let [n, m] = parse_pair(header_line, header)?;

        let mut pairs = Vec::with_capacity(m);
        let mut seen = HashSet::with_capacity(m);
        for (line, l) in lines {
            if pairs.len() == m {
                return Err(Error::Parse { line, msg: format!("more than {m} edge lines") });
            }
            let [u, v] = parse_pair(line, l)?;
            for x in [u, v] {
                if x >= n {
                    return Err(Error::Parse { line, msg: format!("vertex {x} out of range 0..{n}") });
                }
            }
            if u == v {
                return Err(Error::Parse { line, msg: format!("self-loop at vertex {u}") });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Parse { line, msg: format!("duplicate edge {u} {v}") });
            }
            pairs.push((u, v));
        }
        if pairs.len() != m {
            let line = text.lines().count().max(1);
            return Err(Error::Parse { line, msg: format!("expected {m} edges, found {}", pairs.len()) });
        }
        Ok(Graph::unweighted(n, &pairs))
    }

    /// Writes the input-graph text format. Only meaningful for unit-weight
    /// `Original` graphs; weights and kinds are not recorded.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(16 * (self.edges.len() + 1));
        let _ = writeln!(out, "{} {}", self.vertex_count, self.edges.len());
        for e in &self.edges {
            let _ = writeln!(out, "{} {}", e.u, e.v);
        }
        out
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse { line, msg: "expected two integers".into() })?;
        tok.parse().map_err(|_| Error::Parse { line, msg: format!("`{tok}` is not a non-negative integer") })
    };
    let pair = [next()?, next()?];
    if let Some(extra) = it.next() {
        return Err(Error::Parse { line, msg: format!("unexpected token `{extra}`") });
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::unweighted(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]);
        for (id, e) in g.edges().iter().enumerate() {
            assert!(g.neighbors(e.u).contains(&(e.v, id)));
            assert!(g.neighbors(e.v).contains(&(e.u, id)));
        }
        assert_eq!(g.degree(2), 3);
        assert_eq!(g.find_edge(3, 2), Some(3));
        assert_eq!(g.find_edge(0, 3), None);
    }

    #[test]
    fn parse_roundtrip_and_comments() {
        let text = "# a path\n3 2\n0 1  # first\n\n1 2\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.edges().iter().all(|e| e.weight == 1 && e.is_original()));
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("3 2\n0 1\n1 5\n", 3),
            ("3 2\n0 1\n", 2),
            ("3 1\n0 x\n", 2),
            ("3 1\n1 1\n", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 1\n0 1\n1 2\n", 3),
        ];
        for (text, want) in cases {
            match Graph::parse(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn serde_rebuilds_adjacency() {
        let g = Graph::unweighted(3, &[(0, 1), (1, 2)]);
        let json = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
    }
}
