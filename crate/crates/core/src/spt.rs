//! Shortest-path trees and tree-path utilities.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::distance::Distance;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::lca::LcaIndex;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ShortestPathTree {
    pub source: VertexId,
    pub dist: Vec<Distance>,
    pub parent: Vec<Option<VertexId>>,
    pub parent_edge: Vec<Option<EdgeId>>,
    /// Hop count from the source along tree edges.
    pub depth: Vec<usize>,
    #[serde(skip)]
    lca_index: Option<LcaIndex>,
}

impl PartialEq for ShortestPathTree {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.dist == other.dist
            && self.parent == other.parent
            && self.parent_edge == other.parent_edge
            && self.depth == other.depth
    }
}

/// Dijkstra from `src` on `g` with the listed edges removed.
pub fn dijkstra(g: &Graph, src: VertexId, banned: &[EdgeId]) -> ShortestPathTree {
    if banned.is_empty() {
        return dijkstra_with(g, src, |_| false);
    }
    let mut mask = vec![false; g.edge_count()];
    for &e in banned {
        mask[e] = true;
    }
    dijkstra_with(g, src, |e| mask[e])
}

/// Dijkstra skipping every edge for which `is_banned` returns true.
///
/// Among equal-length routes a vertex keeps an `Original` parent edge over a
/// `Virtual` one, then the lowest predecessor id, then the lowest edge id,
/// so the tree is a pure function of the graph and the ban set.
pub fn dijkstra_with<F>(g: &Graph, src: VertexId, is_banned: F) -> ShortestPathTree
where
    F: Fn(EdgeId) -> bool,
{
    let n = g.vertex_count();
    let mut dist = vec![Distance::Unreachable; n];
    let mut parent: Vec<Option<VertexId>> = vec![None; n];
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut depth = vec![0usize; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();

    dist[src] = Distance::ZERO;
    heap.push(Reverse((0u64, usize::MAX, src)));

    while let Some(Reverse((d, pred, v))) = heap.pop() {
        if settled[v] || Distance::Finite(d) != dist[v] || parent[v].unwrap_or(usize::MAX) != pred {
            continue;
        }
        settled[v] = true;
        if let Some(p) = parent[v] {
            depth[v] = depth[p] + 1;
        }
        for &(w, e) in g.neighbors(v) {
            if settled[w] || is_banned(e) {
                continue;
            }
            let edge = g.edge(e);
            let nd = d + edge.weight;
            let better = match dist[w] {
                Distance::Unreachable => true,
                Distance::Finite(cur) => {
                    let cur_edge = parent_edge[w].expect("reached vertices other than the source have a parent");
                    let cur_virtual = !g.edge(cur_edge).is_original();
                    (nd, !edge.is_original(), v, e) < (cur, cur_virtual, parent[w].unwrap_or(usize::MAX), cur_edge)
                }
            };
            if better {
                dist[w] = Distance::Finite(nd);
                parent[w] = Some(v);
                parent_edge[w] = Some(e);
                heap.push(Reverse((nd, v, w)));
            }
        }
    }

    ShortestPathTree { source: src, dist, parent, parent_edge, depth, lca_index: None }
}

impl ShortestPathTree {
    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    pub fn is_reached(&self, v: VertexId) -> bool {
        self.dist[v].is_finite()
    }

    pub fn reached_count(&self) -> usize {
        self.dist.iter().filter(|d| d.is_finite()).count()
    }

    /// Builds the ancestor-query index and stores it in the tree.
    pub fn build_lca(&mut self) {
        self.lca_index = Some(LcaIndex::new(self.source, &self.parent));
    }

    pub fn with_lca(mut self) -> Self {
        self.build_lca();
        self
    }

    pub fn has_lca(&self) -> bool {
        self.lca_index.is_some()
    }

    /// Drops the ancestor-query index.
    pub fn drop_lca(&mut self) {
        self.lca_index = None;
    }

    /// Lowest common ancestor in this tree. Uses the stored index when
    /// present and walks parent pointers otherwise.
    pub fn lca(&self, u: VertexId, v: VertexId) -> Result<VertexId> {
        for x in [u, v] {
            if x >= self.vertex_count() {
                return Err(Error::VertexOutOfRange { vertex: x, count: self.vertex_count() });
            }
            if !self.is_reached(x) {
                return Err(Error::Unreachable(x));
            }
        }
        if let Some(idx) = &self.lca_index {
            return Ok(idx.lca(u, v).expect("reached vertices are indexed"));
        }
        let (mut a, mut b) = (u, v);
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("non-root has a parent");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("non-root has a parent");
        }
        while a != b {
            a = self.parent[a].expect("non-root has a parent");
            b = self.parent[b].expect("non-root has a parent");
        }
        Ok(a)
    }

    pub fn is_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        if a >= self.vertex_count() || b >= self.vertex_count() || !self.is_reached(a) || !self.is_reached(b) {
            return false;
        }
        if let Some(idx) = &self.lca_index {
            return idx.is_ancestor(a, b);
        }
        let mut x = b;
        while self.depth[x] > self.depth[a] {
            x = self.parent[x].expect("non-root has a parent");
        }
        x == a
    }

    /// The tree path from ancestor `u` down to `v`.
    pub fn tree_path(&self, u: VertexId, v: VertexId) -> Result<PathOnTree> {
        if !self.is_ancestor(u, v) {
            return Err(Error::NotAncestor { ancestor: u, vertex: v });
        }
        let mut vertices = vec![v];
        let mut edge_ids = Vec::new();
        let mut x = v;
        while x != u {
            edge_ids.push(self.parent_edge[x].expect("non-root has a parent edge"));
            x = self.parent[x].expect("non-root has a parent");
            vertices.push(x);
        }
        vertices.reverse();
        edge_ids.reverse();
        Ok(PathOnTree::new(self.vertex_count(), vertices, edge_ids))
    }

    /// True iff edge `e` of `g` is a tree edge on the source-to-`t` path.
    pub fn edge_on_tree_path(&self, g: &Graph, t: VertexId, e: EdgeId) -> bool {
        let edge = g.edge(e);
        let lower = if self.parent_edge[edge.v] == Some(e) {
            edge.v
        } else if self.parent_edge[edge.u] == Some(e) {
            edge.u
        } else {
            return false;
        };
        self.is_ancestor(lower, t)
    }

    /// Subtree sizes (counting only reached vertices), computed bottom-up.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut order: Vec<VertexId> = (0..self.vertex_count()).filter(|&v| self.is_reached(v)).collect();
        order.sort_by_key(|&v| Reverse(self.depth[v]));
        let mut size = vec![0usize; self.vertex_count()];
        for v in order {
            size[v] += 1;
            if let Some(p) = self.parent[v] {
                size[p] += size[v];
            }
        }
        size
    }

    /// Children lists of the tree, each sorted by vertex id.
    pub fn children(&self) -> Vec<Vec<VertexId>> {
        let mut ch = vec![Vec::new(); self.vertex_count()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                ch[p].push(v);
            }
        }
        ch
    }
}

/// A downward path in a shortest-path tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathOnTree {
    pub vertices: Vec<VertexId>,
    pub edge_ids: Vec<EdgeId>,
    /// Position of each vertex on the path, indexed by vertex id.
    pub index_of: Vec<Option<usize>>,
}

impl PathOnTree {
    pub fn new(vertex_count: usize, vertices: Vec<VertexId>, edge_ids: Vec<EdgeId>) -> PathOnTree {
        debug_assert_eq!(edge_ids.len() + 1, vertices.len());
        let mut index_of = vec![None; vertex_count];
        for (i, &v) in vertices.iter().enumerate() {
            index_of[v] = Some(i);
        }
        PathOnTree { vertices, edge_ids, index_of }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edge_ids.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.index_of.get(v).is_some_and(|i| i.is_some())
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.index_of.get(v).copied().flatten()
    }

    /// Index `i` such that `edge_ids[i]` is `e`, if `e` is on the path.
    pub fn edge_position(&self, g: &Graph, e: EdgeId) -> Option<usize> {
        let edge = g.edge(e);
        let (a, b) = (self.position(edge.u)?, self.position(edge.v)?);
        let upper = a.min(b);
        (a.abs_diff(b) == 1 && self.edge_ids[upper] == e).then_some(upper)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    /// Bellman-Ford style relaxation until fixpoint.
    fn relax_oracle(g: &Graph, src: VertexId, banned: &[EdgeId]) -> Vec<Distance> {
        let mut dist = vec![Distance::Unreachable; g.vertex_count()];
        dist[src] = Distance::ZERO;
        loop {
            let mut changed = false;
            for (id, e) in g.edges().iter().enumerate() {
                if banned.contains(&id) {
                    continue;
                }
                for (a, b) in [(e.u, e.v), (e.v, e.u)] {
                    let cand = dist[a].plus(e.weight);
                    if cand < dist[b] {
                        dist[b] = cand;
                        changed = true;
                    }
                }
            }
            if !changed {
                return dist;
            }
        }
    }

    fn random_graph(n: usize, raw: &[(prop::sample::Index, prop::sample::Index)]) -> Graph {
        let pairs: Vec<_> = raw.iter().map(|(a, b)| (a.index(n), b.index(n))).filter(|(a, b)| a != b).collect();
        Graph::unweighted(n, &pairs)
    }

    #[test]
    fn unit_path() {
        let g = Graph::unweighted(3, &[(0, 1), (1, 2)]);
        let t = dijkstra(&g, 0, &[]);
        assert_eq!(t.dist, vec![Distance::Finite(0), Distance::Finite(1), Distance::Finite(2)]);
        let t = dijkstra(&g, 0, &[1]);
        assert_eq!(t.dist[2], Distance::Unreachable);
        assert_eq!(t.parent[2], None);
    }

    #[test]
    fn four_cycle_with_ban() {
        // s=0, u=1, t=2, v=3
        let g = Graph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let t = dijkstra(&g, 0, &[0]);
        assert_eq!(t.dist[2], Distance::Finite(2));
        assert_eq!(t.parent[2], Some(3));
    }

    #[test]
    fn tree_path_and_edge_membership() {
        let g = Graph::unweighted(3, &[(0, 1), (1, 2)]);
        let t = dijkstra(&g, 0, &[]).with_lca();
        let p = t.tree_path(0, 2).unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2]);
        assert_eq!(p.edge_ids, vec![0, 1]);
        assert_eq!(t.tree_path(2, 2).unwrap().vertices, vec![2]);
        assert!(t.tree_path(2, 0).is_err());
        assert!(t.edge_on_tree_path(&g, 2, 0));
        assert!(!t.edge_on_tree_path(&g, 1, 1));
        assert_eq!(t.lca(1, 2).unwrap(), 1);
    }

    #[test]
    fn lca_rejects_unreached() {
        let g = Graph::unweighted(3, &[(0, 1)]);
        let t = dijkstra(&g, 0, &[]).with_lca();
        assert!(matches!(t.lca(1, 2), Err(Error::Unreachable(2))));
    }

    proptest! {
        #[test]
        fn distances_match_relaxation(
            n in 2usize..30,
            raw in prop::collection::vec(any::<(prop::sample::Index, prop::sample::Index)>(), 0..60),
            ban in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
        ) {
            let g = random_graph(n, &raw);
            let banned: Vec<EdgeId> = if g.edge_count() == 0 { vec![] } else {
                ban.iter().map(|i| i.index(g.edge_count())).collect()
            };
            let t = dijkstra(&g, 0, &banned);
            prop_assert_eq!(&t.dist, &relax_oracle(&g, 0, &banned));
            for v in 0..n {
                match t.parent[v] {
                    Some(p) => {
                        let e = t.parent_edge[v].unwrap();
                        prop_assert!(!banned.contains(&e));
                        prop_assert_eq!(t.dist[v], t.dist[p].plus(g.edge(e).weight));
                        prop_assert_eq!(t.depth[v], t.depth[p] + 1);
                    }
                    None => prop_assert!(v == 0 || !t.dist[v].is_finite()),
                }
            }
            // triangle test on every edge with both ends reached
            for (id, e) in g.edges().iter().enumerate() {
                if let (Some(a), Some(b)) = (t.dist[e.u].finite(), t.dist[e.v].finite()) {
                    if !banned.contains(&id) {
                        prop_assert!(a.abs_diff(b) <= e.weight);
                    }
                }
            }
            // rebuilding is bit-identical
            prop_assert_eq!(&dijkstra(&g, 0, &banned), &t);
        }

        #[test]
        fn tree_path_matches_parent_walk(
            n in 2usize..40,
            raw in prop::collection::vec(any::<(prop::sample::Index, prop::sample::Index)>(), 0..80),
        ) {
            let g = random_graph(n, &raw);
            let t = dijkstra(&g, 0, &[]).with_lca();
            for v in (0..n).filter(|&v| t.is_reached(v)) {
                let mut walk = vec![v];
                let mut x = v;
                while let Some(p) = t.parent[x] { walk.push(p); x = p; }
                walk.reverse();
                let path = t.tree_path(0, v).unwrap();
                prop_assert_eq!(&path.vertices, &walk);
                for (id, _) in g.edges().iter().enumerate() {
                    let on = path.edge_ids.contains(&id);
                    prop_assert_eq!(t.edge_on_tree_path(&g, v, id), on);
                }
            }
        }
    }
}
