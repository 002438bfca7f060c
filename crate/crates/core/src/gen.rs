//! Seeded random graph families.

use std::collections::HashSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};

/// Uniform random labelled tree on `n` vertices, decoded from a random
/// Prüfer sequence.
pub fn uniform_tree<R: Rng>(n: usize, rng: &mut R) -> Vec<(VertexId, VertexId)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<VertexId> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    prufer_decode(n, &code)
}

/// Tree with Prüfer code `code` (length `n - 2`, entries below `n`).
pub fn prufer_decode(n: usize, code: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<VertexId> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<_> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Adds up to `k` distinct new edges between random vertex pairs.
pub fn add_chords<R: Rng>(n: usize, edges: &mut Vec<(VertexId, VertexId)>, k: usize, rng: &mut R) {
    let max_edges = n * n.saturating_sub(1) / 2;
    let target = (edges.len() + k).min(max_edges);
    let mut seen: HashSet<(VertexId, VertexId)> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    while edges.len() < target {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v && seen.insert((u.min(v), u.max(v))) {
            edges.push((u, v));
        }
    }
}

pub fn tree_with_chords<R: Rng>(n: usize, k: usize, rng: &mut R) -> Graph {
    let mut edges = uniform_tree(n, rng);
    add_chords(n, &mut edges, k, rng);
    Graph::unweighted(n, &edges)
}

/// Connected graph with about `3n` edges: a uniform tree plus `2n` chords.
pub fn sparse<R: Rng>(n: usize, rng: &mut R) -> Graph {
    tree_with_chords(n, 2 * n, rng)
}

/// `rows × cols` grid, vertex `(i, j)` at index `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::unweighted(rows * cols, &edges)
}

/// Source 0 with primary path `0-1-2-3`, a shortcut `0-4-1` around the first
/// path edge, a chain of `branch` vertices hanging from 1 and a chain of
/// `tail` vertices hanging from 3.
///
/// With edge `(0, 1)` removed, the best route to the branch is `0-4-1` and
/// then down, rejoining the path below the fault without ever reaching 3.
pub fn gadget(branch: usize, tail: usize) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 4), (4, 1)];
    let mut prev = 1;
    for k in 0..branch {
        let v = 5 + k;
        edges.push((prev, v));
        prev = v;
    }
    prev = 3;
    for k in 0..tail {
        let v = 5 + branch + k;
        edges.push((prev, v));
        prev = v;
    }
    Graph::unweighted(5 + branch + tail, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Tree,
    /// Tree plus `n/4` chords.
    QuarterChords,
    /// Tree plus `n` chords.
    LinearChords,
    /// Tree plus `n^1.5 / 2` chords.
    DenseChords,
    Grid,
    Gadget,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Tree, Family::QuarterChords, Family::LinearChords, Family::DenseChords, Family::Grid, Family::Gadget];

    pub fn chord_count(self, n: usize) -> usize {
        match self {
            Family::Tree | Family::Grid | Family::Gadget => 0,
            Family::QuarterChords => n / 4,
            Family::LinearChords => n,
            Family::DenseChords => ((n as f64).powf(1.5) / 2.0) as usize,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Tree => "tree",
            Family::QuarterChords => "tree+n/4",
            Family::LinearChords => "tree+n",
            Family::DenseChords => "tree+n^1.5/2",
            Family::Grid => "grid",
            Family::Gadget => "gadget",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub family: Family,
    pub seed: u64,
    pub graph: Graph,
    pub source: VertexId,
}

/// Graph of `family` with close to `n` vertices, fully determined by `seed`.
pub fn instance(family: Family, n: usize, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = n.max(2);
    let (graph, source) = match family {
        Family::Grid => {
            let rows = rng.random_range(1..=((n as f64).sqrt() as usize).max(1));
            let cols = (n / rows).max(2);
            let g = grid(rows, cols);
            let s = rng.random_range(0..g.vertex_count());
            (g, s)
        }
        Family::Gadget => {
            let budget = n.saturating_sub(5).max(2);
            let branch = rng.random_range(1..budget);
            let g = gadget(branch, budget - branch);
            let mut g = relabel(&g, &mut rng);
            // keep the chords sparse so the gadget shape still matters
            let extra = rng.random_range(0..=n / 8);
            let mut pairs: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
            add_chords(g.vertex_count(), &mut pairs, extra, &mut rng);
            g = Graph::unweighted(g.vertex_count(), &pairs);
            let s = g.edges()[0].u;
            (g, s)
        }
        _ => {
            let g = tree_with_chords(n, family.chord_count(n), &mut rng);
            let s = rng.random_range(0..n);
            (g, s)
        }
    };
    Instance { family, seed, graph, source }
}

/// Random vertex permutation of an unweighted graph; edge order is kept,
/// so edge 0 of the result is the image of edge 0.
pub fn relabel<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<VertexId> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    let pairs: Vec<_> = g.edges().iter().map(|e| (perm[e.u], perm[e.v])).collect();
    Graph::unweighted(g.vertex_count(), &pairs)
}
