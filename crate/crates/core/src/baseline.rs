//! Brute-force reference answers, by one breadth-first search per fault.
//!
//! Nothing here touches the oracle code. The fault-free tree is rebuilt
//! from BFS levels with the same canonical parent choice as
//! [`dijkstra`](crate::spt::dijkstra) on unit weights (lowest-id neighbor
//! one level up, lowest edge id among parallels), so record order matches
//! [`OracleTree::ssrp`](crate::oracle::OracleTree::ssrp).

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::distance::Distance;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::oracle::{SsrpOutput, SsrpRecord};

/// Hop distances from `s` with edge `banned` removed. Edge weights are
/// ignored; the input graphs are unweighted.
pub fn bfs_avoiding(g: &Graph, s: VertexId, banned: Option<EdgeId>) -> Vec<Distance> {
    let mut dist = vec![Distance::Unreachable; g.vertex_count()];
    let mut queue = VecDeque::new();
    dist[s] = Distance::ZERO;
    queue.push_back((s, 0u64));
    while let Some((v, d)) = queue.pop_front() {
        for &(w, e) in g.neighbors(v) {
            if Some(e) == banned || dist[w].is_finite() {
                continue;
            }
            dist[w] = Distance::Finite(d + 1);
            queue.push_back((w, d + 1));
        }
    }
    dist
}

/// Shortest `s → t` length in `g` without edge `e`.
pub fn brute_query(g: &Graph, s: VertexId, t: VertexId, e: EdgeId) -> Distance {
    bfs_avoiding(g, s, Some(e))[t]
}

/// Canonical fault-free tree: `(parent, parent edge)` per reached vertex.
pub fn canonical_parents(g: &Graph, s: VertexId) -> Vec<Option<(VertexId, EdgeId)>> {
    let dist = bfs_avoiding(g, s, None);
    (0..g.vertex_count())
        .map(|v| {
            let d = dist[v].finite()?;
            if v == s {
                return None;
            }
            g.neighbors(v).iter().filter(|&&(u, _)| dist[u] == Distance::Finite(d - 1)).copied().min()
        })
        .collect()
}

/// Every `(t, e)` with `e` on the tree path to `t`, answered by one BFS per
/// tree edge. Ordered by `t`, then by `e` from the source down.
pub fn brute_ssrp(g: &Graph, s: VertexId) -> SsrpOutput {
    let parents = canonical_parents(g, s);
    let tree_edges: Vec<(VertexId, EdgeId)> =
        parents.iter().enumerate().filter_map(|(v, p)| p.map(|(_, e)| (v, e))).collect();
    // Answers for the edge above `v`, keyed by `v`.
    let answers: Vec<(VertexId, Vec<Distance>)> =
        tree_edges.par_iter().map(|&(v, e)| (v, bfs_avoiding(g, s, Some(e)))).collect();
    let mut below = vec![None; g.vertex_count()];
    for (v, dist) in answers {
        below[v] = Some(dist);
    }

    let mut records = Vec::new();
    for t in 0..g.vertex_count() {
        let mut chain = Vec::new();
        let mut v = t;
        while let Some((p, _)) = parents[v] {
            chain.push((p, v));
            v = p;
        }
        if v != s {
            continue;
        }
        for &(x, y) in chain.iter().rev() {
            let distance = below[y].as_ref().expect("tree edge answered")[t];
            records.push(SsrpRecord { t, x, y, distance });
        }
    }
    SsrpOutput { records }
}
