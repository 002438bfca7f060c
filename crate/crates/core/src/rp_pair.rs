//! Replacement-path lengths between the two ends of one shortest path.
//!
//! For `P = u_0 … u_k` (a path of the source tree), removing edge
//! `e_j = (u_j, u_{j+1})` splits the tree into vertices whose branch leaves
//! `P` at index `≤ j` and those leaving at `> j`. In an undirected graph
//! with non-negative weights the best detour around `e_j` is the cheapest
//! non-tree edge `(x, y)` crossing that cut, priced
//! `dist_s(x) + w(x, y) + dist_r(y)`. Each edge crosses a contiguous range
//! of cuts, so all `k` answers come from one offline interval-minimum pass.

use serde::{Deserialize, Serialize};

use crate::distance::Distance;
use crate::graph::{Graph, VertexId};
use crate::spt::{PathOnTree, ShortestPathTree};

/// `lengths[j]` is the shortest path length between the ends of `P`
/// avoiding `P.edge_ids[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReplacementTable {
    pub lengths: Vec<Distance>,
}

impl PathReplacementTable {
    pub fn get(&self, j: usize) -> Distance {
        self.lengths[j]
    }
}

/// For every vertex, the index on `path` where its tree branch leaves the
/// path (the position of its lowest ancestor on `path`). `None` for vertices
/// the tree does not reach.
pub fn branch_points(spt: &ShortestPathTree, path: &PathOnTree) -> Vec<Option<usize>> {
    let mut order: Vec<VertexId> = (0..spt.vertex_count()).filter(|&v| spt.is_reached(v)).collect();
    order.sort_by_key(|&v| spt.depth[v]);
    let mut at = vec![None; spt.vertex_count()];
    for v in order {
        at[v] = match path.position(v) {
            Some(i) => Some(i),
            None => spt.parent[v].and_then(|p| at[p]),
        };
    }
    at
}

pub fn replacement_lengths_along_path(
    g: &Graph,
    spt_s: &ShortestPathTree,
    spt_r: &ShortestPathTree,
    path: &PathOnTree,
) -> PathReplacementTable {
    let k = path.len();
    if k == 0 {
        return PathReplacementTable { lengths: Vec::new() };
    }
    let branch = branch_points(spt_s, path);
    let on_path: std::collections::HashSet<usize> = path.edge_ids.iter().copied().collect();

    // (value, first cut, last cut)
    let mut intervals: Vec<(u64, usize, usize)> = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if on_path.contains(&id) {
            continue;
        }
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            let (Some(ax), Some(ay)) = (branch[x], branch[y]) else { continue };
            if ax >= ay {
                continue;
            }
            let (Some(dx), Some(dy)) = (spt_s.dist[x].finite(), spt_r.dist[y].finite()) else { continue };
            intervals.push((dx + e.weight + dy, ax, ay - 1));
        }
    }
    intervals.sort_unstable();

    // Paint cuts cheapest-first; `next[j]` skips over painted cuts.
    let mut lengths = vec![Distance::Unreachable; k];
    let mut next: Vec<usize> = (0..=k).collect();
    fn find(next: &mut [usize], mut j: usize) -> usize {
        while next[j] != j {
            next[j] = next[next[j]];
            j = next[j];
        }
        j
    }
    for (value, lo, hi) in intervals {
        let mut j = find(&mut next, lo);
        while j <= hi {
            lengths[j] = Distance::Finite(value);
            next[j] = j + 1;
            j = find(&mut next, j + 1);
        }
    }
    PathReplacementTable { lengths }
}
