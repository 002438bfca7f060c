//! Shared workloads for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sdo_core::gen::sparse;
use sdo_core::{EdgeId, Graph, OracleTree, VertexId};

/// Sparse random graph (`m ≈ 3n`) and a random source.
pub fn workload(n: usize, seed: u64) -> (Graph, VertexId) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = sparse(n, &mut rng);
    let s = rng.random_range(0..n);
    (g, s)
}

/// `count` random `(t, e)` pairs with `e` on the tree path to `t`.
pub fn tree_queries(oracle: &OracleTree, count: usize, seed: u64) -> Vec<(VertexId, EdgeId)> {
    let spt = oracle.spt();
    let n = spt.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let t = rng.random_range(0..n);
        if spt.depth[t] == 0 {
            continue;
        }
        let mut v = t;
        for _ in 0..rng.random_range(0..spt.depth[t]) {
            v = spt.parent[v].expect("above the source");
        }
        out.push((t, spt.parent_edge[v].expect("tree edge")));
    }
    out
}
