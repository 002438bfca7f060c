//! Lowest common ancestor by Euler tour and a sparse table of range minima.
//!
//! Construction is `O(n log n)`; `lca` and `is_ancestor` are `O(1)`.

use serde::{Deserialize, Serialize};

use crate::graph::VertexId;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LcaIndex {
    /// Euler tour of vertex ids.
    tour: Vec<u32>,
    /// First and last position of each vertex in `tour`, `NONE` if the vertex
    /// is not in the tree.
    first: Vec<u32>,
    last: Vec<u32>,
    depth: Vec<u32>,
    /// `sparse[k][i]` = position in `tour` of the shallowest vertex in
    /// `tour[i..i + 2^k]`.
    sparse: Vec<Vec<u32>>,
}

impl LcaIndex {
    /// `parent[v]` is `None` for the root and for vertices outside the tree.
    pub fn new(root: VertexId, parent: &[Option<VertexId>]) -> LcaIndex {
        let n = parent.len();
        let mut children_start = vec![0usize; n + 1];
        for p in parent.iter().flatten() {
            children_start[*p + 1] += 1;
        }
        for i in 0..n {
            children_start[i + 1] += children_start[i];
        }
        let mut fill = children_start.clone();
        let mut children = vec![0u32; children_start[n]];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[fill[p]] = v as u32;
                fill[p] += 1;
            }
        }

        let mut tour = Vec::with_capacity(2 * n);
        let mut first = vec![NONE; n];
        let mut last = vec![NONE; n];
        let mut depth = vec![0u32; n];
        // (vertex, next child slot)
        let mut stack: Vec<(usize, usize)> = vec![(root, children_start[root])];
        first[root] = 0;
        tour.push(root as u32);
        while let Some(&mut (v, ref mut slot)) = stack.last_mut() {
            if *slot < children_start[v + 1] {
                let c = children[*slot] as usize;
                *slot += 1;
                depth[c] = depth[v] + 1;
                first[c] = tour.len() as u32;
                tour.push(c as u32);
                stack.push((c, children_start[c]));
            } else {
                last[v] = tour.len() as u32 - 1;
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    tour.push(p as u32);
                }
            }
        }

        let len = tour.len();
        let mut sparse: Vec<Vec<u32>> = vec![(0..len as u32).collect()];
        let mut k = 1;
        while (1 << k) <= len {
            let prev = &sparse[k - 1];
            let half = 1 << (k - 1);
            let row = (0..=len - (1 << k))
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + half]);
                    if depth[tour[b as usize] as usize] < depth[tour[a as usize] as usize] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            sparse.push(row);
            k += 1;
        }

        LcaIndex { tour, first, last, depth, sparse }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.first.get(v).is_some_and(|&f| f != NONE)
    }

    /// Lowest common ancestor; `None` if either vertex is outside the tree.
    pub fn lca(&self, u: VertexId, v: VertexId) -> Option<VertexId> {
        if !self.contains(u) || !self.contains(v) {
            return None;
        }
        let (a, b) = {
            let (x, y) = (self.first[u] as usize, self.first[v] as usize);
            (x.min(y), x.max(y))
        };
        let k = usize::BITS as usize - 1 - (b - a + 1).leading_zeros() as usize;
        let (i, j) = (self.sparse[k][a], self.sparse[k][b + 1 - (1 << k)]);
        let (vi, vj) = (self.tour[i as usize], self.tour[j as usize]);
        let best = if self.depth[vj as usize] < self.depth[vi as usize] { vj } else { vi };
        Some(best as usize)
    }

    /// True iff `a` is an ancestor of `b` (every vertex is its own ancestor).
    pub fn is_ancestor(&self, a: VertexId, b: VertexId) -> bool {
        self.contains(a) && self.contains(b) && self.first[a] <= self.first[b] && self.last[b] <= self.last[a]
    }
}
