use std::time::Instant;

use anyhow::{ensure, Result};
use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sdo_core::gen::sparse;
use sdo_core::{OracleTree, QueryMode};

#[derive(Args)]
pub struct BenchArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', default_value = "1024,4096,16384")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random tree-edge queries timed per size.
    #[arg(long, default_value_t = 10_000)]
    queries: usize,
}

pub fn run(args: &BenchArgs) -> Result<()> {
    ensure!(args.sizes.iter().all(|&n| n >= 2), "sizes must be at least 2");
    println!("n\tm\tbuild_ms\tmax_dep\tmean_query_us");
    for &n in &args.sizes {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed ^ n as u64);
        let g = sparse(n, &mut rng);
        let source = rng.random_range(0..n);

        let start = Instant::now();
        let oracle = OracleTree::build(&g, source)?;
        let build_ms = start.elapsed().as_secs_f64() * 1e3;

        let spt = oracle.spt();
        let mut queries = Vec::with_capacity(args.queries);
        while queries.len() < args.queries {
            let t = rng.random_range(0..n);
            if spt.depth[t] == 0 {
                continue;
            }
            let mut v = t;
            for _ in 0..rng.random_range(0..spt.depth[t]) {
                v = spt.parent[v].expect("above the source");
            }
            queries.push((t, spt.parent_edge[v].expect("tree edge")));
        }
        let start = Instant::now();
        for &(t, e) in &queries {
            std::hint::black_box(oracle.query_edge(t, e, QueryMode::Complete)?);
        }
        let mean_us = start.elapsed().as_secs_f64() * 1e6 / queries.len().max(1) as f64;

        println!("{n}\t{}\t{build_ms:.1}\t{}\t{mean_us:.2}", g.edge_count(), oracle.stats().max_dep_len);
    }
    Ok(())
}
