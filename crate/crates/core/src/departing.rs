//! Candidate departing paths.
//!
//! A departing path to `t` leaves the primary path `P` at its detour point
//! and never touches `P` again. For a fault `e` on `P`, the shortest
//! departing path whose detour point lies at or above `e` avoids `e`.
//! For each `t ∉ P` the distinct such optima form a short list: as the fault
//! moves up `P`, the detour point must move up and the length strictly
//! grows. `DepArray` stores that list and answers a fault by binary search.
//!
//! Construction is a Dijkstra variant over (vertex, length) states: a vertex
//! may be settled several times, once per strictly higher detour point.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::distance::Distance;
use crate::graph::{EdgeId, Graph, VertexId};
use crate::spt::{dijkstra_with, PathOnTree, ShortestPathTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepEntry {
    pub length: u64,
    /// Detour point, a vertex of the primary path.
    pub dp: VertexId,
    /// Position of `dp` on the primary path (0 = source).
    pub dp_depth: usize,
    pub end: VertexId,
    pub last_edge: EdgeId,
    pub last_edge_weight: u64,
}

/// Entries sorted by strictly increasing `length` and strictly decreasing
/// `dp_depth`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepArray {
    pub entries: Vec<DepEntry>,
}

impl DepArray {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Length of the shortest entry whose detour point is at or above
    /// primary-path position `upper`.
    pub fn query(&self, upper: usize) -> Distance {
        let i = self.entries.partition_point(|e| e.dp_depth > upper);
        self.entries.get(i).map_or(Distance::Unreachable, |e| Distance::Finite(e.length))
    }

    pub fn is_doubly_monotone(&self) -> bool {
        self.entries.windows(2).all(|w| w[0].length < w[1].length && w[0].dp_depth > w[1].dp_depth)
    }
}

/// Heap element: a departing path known only by its length, detour point
/// and last edge. Ordered by length, then by detour point closer to the
/// source; remaining ties pop the higher end vertex first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct CandidatePath {
    length: u64,
    dp_depth: usize,
    end: Reverse<VertexId>,
    last_edge: EdgeId,
}

/// Work counters for one `build_dep` run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepStats {
    pub seeds: usize,
    pub accepted: usize,
    /// Accepted paths that replaced a seed of equal length.
    pub replaced: usize,
    pub pushes: usize,
    pub pops: usize,
}

/// Per-vertex departing arrays. Vertices on `path` and vertices the tree
/// does not reach get empty arrays.
pub fn build_dep(g: &Graph, spt_s: &ShortestPathTree, path: &PathOnTree) -> (Vec<DepArray>, DepStats) {
    let n = g.vertex_count();
    let mut dep = vec![DepArray::default(); n];
    let mut stats = DepStats::default();
    if path.is_empty() {
        return (dep, stats);
    }
    let r = *path.vertices.last().expect("non-empty path");
    let mut heap: BinaryHeap<Reverse<CandidatePath>> = BinaryHeap::new();

    let push_extensions = |heap: &mut BinaryHeap<Reverse<CandidatePath>>, stats: &mut DepStats, v: VertexId, length: u64, dp_depth: usize| {
        for &(w, e) in g.neighbors(v) {
            if path.contains(w) {
                continue;
            }
            heap.push(Reverse(CandidatePath {
                length: length + g.edge(e).weight,
                dp_depth,
                end: Reverse(w),
                last_edge: e,
            }));
            stats.pushes += 1;
        }
    };

    // Seeds: the tree path to v departs at lca(v, r).
    for v in 0..n {
        if path.contains(v) {
            continue;
        }
        let Some(length) = spt_s.dist[v].finite() else { continue };
        let dp = spt_s.lca(v, r).expect("reached vertices have an lca");
        let dp_depth = path.position(dp).expect("lca with r lies on the s-r path");
        let last_edge = spt_s.parent_edge[v].expect("v is not the source");
        dep[v].entries.push(DepEntry {
            length,
            dp,
            dp_depth,
            end: v,
            last_edge,
            last_edge_weight: g.edge(last_edge).weight,
        });
        stats.seeds += 1;
    }
    for v in 0..n {
        if let Some(seed) = dep[v].entries.first().copied() {
            push_extensions(&mut heap, &mut stats, v, seed.length, seed.dp_depth);
        }
    }
    // Departures through non-tree edges leaving the path itself.
    for (i, &x) in path.vertices.iter().enumerate() {
        let length = spt_s.dist[x].finite().expect("path vertices are reached");
        push_extensions(&mut heap, &mut stats, x, length, i);
    }

    while let Some(Reverse(cand)) = heap.pop() {
        stats.pops += 1;
        let v = cand.end.0;
        let last = dep[v].entries.last_mut().expect("every reachable off-path vertex is seeded");
        if cand.dp_depth >= last.dp_depth {
            continue;
        }
        let entry = DepEntry {
            length: cand.length,
            dp: path.vertices[cand.dp_depth],
            dp_depth: cand.dp_depth,
            end: v,
            last_edge: cand.last_edge,
            last_edge_weight: g.edge(cand.last_edge).weight,
        };
        if cand.length == last.length {
            // Same length, higher detour point: the seed is dominated.
            *last = entry;
            stats.replaced += 1;
        } else {
            dep[v].entries.push(entry);
        }
        stats.accepted += 1;
        push_extensions(&mut heap, &mut stats, v, cand.length, cand.dp_depth);
    }

    (dep, stats)
}

/// Reference answer for departing paths, by one restricted Dijkstra per
/// primary-path vertex.
///
/// `result[t][j]` is the shortest path that follows `P` from the source to
/// some `u_i` with `i ≤ j`, then reaches `t` without touching `P` again.
/// Rows for vertices on `P` are all `Unreachable`.
pub fn brute_departing(g: &Graph, spt_s: &ShortestPathTree, path: &PathOnTree) -> Vec<Vec<Distance>> {
    let n = g.vertex_count();
    let k = path.len();
    let mut best = vec![vec![Distance::Unreachable; k]; n];
    let mut running = vec![Distance::Unreachable; n];
    for j in 0..k {
        let uj = path.vertices[j];
        let from_uj = dijkstra_with(g, uj, |e| {
            let edge = g.edge(e);
            (edge.u != uj && path.contains(edge.u)) || (edge.v != uj && path.contains(edge.v))
        });
        for t in 0..n {
            if path.contains(t) {
                continue;
            }
            running[t] = running[t].min(spt_s.dist[uj] + from_uj.dist[t]);
            best[t][j] = running[t];
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::spt::dijkstra;

    fn setup(g: &Graph, s: VertexId, r: VertexId) -> (ShortestPathTree, PathOnTree) {
        let spt = dijkstra(g, s, &[]).with_lca();
        let path = spt.tree_path(s, r).unwrap();
        (spt, path)
    }

    #[test]
    fn off_path_neighbor_of_source() {
        // P = 0-1-2-3, t = 4 hangs off the source
        let g = Graph::unweighted(5, &[(0, 1), (1, 2), (2, 3), (0, 4)]);
        let (spt, path) = setup(&g, 0, 3);
        let (dep, _) = build_dep(&g, &spt, &path);
        assert_eq!(dep[4].len(), 1);
        assert_eq!((dep[4].entries[0].length, dep[4].entries[0].dp), (1, 0));
        for upper in 0..3 {
            assert_eq!(dep[4].query(upper), Distance::Finite(1));
        }
        assert!(dep[1].is_empty() && dep[3].is_empty());
    }

    #[test]
    fn tied_departures_keep_the_higher_detour_point() {
        // s=0, a=1, r=2, x=3, t=4; P = s-a-r, edges s-x, x-t, a-t.
        // The tree reaches t through a (lower predecessor id), but s-x-t has
        // the same length and departs at s.
        let g = Graph::unweighted(5, &[(0, 1), (1, 2), (0, 3), (3, 4), (1, 4)]);
        let (spt, path) = setup(&g, 0, 2);
        assert_eq!(path.vertices, vec![0, 1, 2]);
        assert_eq!(spt.parent[4], Some(1));
        let (dep, stats) = build_dep(&g, &spt, &path);
        assert_eq!(dep[4].entries.iter().map(|e| (e.length, e.dp)).collect::<Vec<_>>(), vec![(2, 0)]);
        assert_eq!(stats.replaced, 1);
        let brute = brute_departing(&g, &spt, &path);
        assert_eq!(brute[4], vec![Distance::Finite(2), Distance::Finite(2)]);
    }

    #[test]
    fn two_entry_intervals() {
        // P = u0..u3 (0..3). t=7 reached from u2 via 2-5-7 (length 4) and
        // from u0 via 0-4-6-8-9-7 (length 5)... build the case where the
        // farther detour is strictly longer.
        let g = Graph::unweighted(
            10,
            &[(0, 1), (1, 2), (2, 3), (2, 5), (5, 7), (0, 4), (4, 6), (6, 8), (8, 9), (9, 7)],
        );
        let (spt, path) = setup(&g, 0, 3);
        let (dep, _) = build_dep(&g, &spt, &path);
        let got: Vec<_> = dep[7].entries.iter().map(|e| (e.length, e.dp_depth)).collect();
        assert_eq!(got, vec![(4, 2), (5, 0)]);
        // edge u0-u1 (upper 0) needs dp at u0; edge u2-u3 (upper 2) takes the short one
        assert_eq!(dep[7].query(0), Distance::Finite(5));
        assert_eq!(dep[7].query(1), Distance::Finite(5));
        assert_eq!(dep[7].query(2), Distance::Finite(4));
        let brute = brute_departing(&g, &spt, &path);
        assert_eq!(brute[7], vec![Distance::Finite(5), Distance::Finite(5), Distance::Finite(4)]);
    }

    #[test]
    fn no_qualifying_entry() {
        // t=3 hangs below u1 only; faults above u1 have no departing path
        let g = Graph::unweighted(4, &[(0, 1), (1, 2), (1, 3)]);
        let (spt, path) = setup(&g, 0, 2);
        let (dep, _) = build_dep(&g, &spt, &path);
        assert_eq!(dep[3].query(0), Distance::Unreachable);
        assert_eq!(dep[3].query(1), Distance::Finite(2));
        let brute = brute_departing(&g, &spt, &path);
        assert_eq!(brute[3], vec![Distance::Unreachable, Distance::Finite(2)]);
    }

    #[test]
    fn empty_array_queries_unreachable() {
        assert_eq!(DepArray::default().query(5), Distance::Unreachable);
    }
}
