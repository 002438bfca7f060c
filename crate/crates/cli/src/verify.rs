use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use sdo_core::gen::{instance, Family};
use sdo_core::{brute_ssrp, Graph, OracleTree, QueryMode, SsrpRecord, VertexId};

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 120)]
    max_n: usize,
    /// Check this graph file instead of generated ones.
    #[arg(long, requires = "source")]
    graph: Option<PathBuf>,
    #[arg(long)]
    source: Option<VertexId>,
    /// Answer primary-path faults without the left-child recursion.
    #[arg(long, hide = true)]
    no_left_recursion: bool,
}

struct Case {
    label: String,
    graph: Graph,
    source: VertexId,
}

struct Mismatch {
    got: SsrpRecord,
    want: SsrpRecord,
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode> {
    let mode = if args.no_left_recursion { QueryMode::NoPrimaryLeftRecursion } else { QueryMode::Complete };
    let cases = match (&args.graph, args.source) {
        (Some(path), Some(source)) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let graph = Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
            graph.check_vertex(source)?;
            vec![Case { label: path.display().to_string(), graph, source }]
        }
        _ => generate(args.seed, args.count, args.max_n),
    };

    let results: Vec<Option<Mismatch>> = cases.par_iter().map(|c| first_mismatch(&c.graph, c.source, mode)).collect();
    let mut records = 0;
    for (case, result) in cases.iter().zip(results) {
        if let Some(m) = result {
            let (graph, m) = shrink(&case.graph, case.source, mode, m);
            println!("MISMATCH in {} (source {})", case.label, case.source);
            println!("t={} e=({},{}) oracle={} brute={}", m.got.t, m.got.x, m.got.y, m.got.distance, m.want.distance);
            println!("# reduced graph, source {}", case.source);
            print!("{}", graph.to_text());
            return Ok(ExitCode::FAILURE);
        }
        records += brute_ssrp(&case.graph, case.source).records.len();
    }
    println!("ok: {} graphs, {records} records", cases.len());
    Ok(ExitCode::SUCCESS)
}

fn generate(seed: u64, count: usize, max_n: usize) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_n = max_n.max(5);
    (0..count)
        .map(|i| {
            let family = Family::ALL[i % Family::ALL.len()];
            let n = rng.random_range(5..=max_n);
            let case_seed = rng.random();
            let inst = instance(family, n, case_seed);
            Case { label: format!("{family} n={n} seed={case_seed}"), graph: inst.graph, source: inst.source }
        })
        .collect()
}

fn first_mismatch(g: &Graph, source: VertexId, mode: QueryMode) -> Option<Mismatch> {
    let oracle = OracleTree::build(g, source).expect("generated sources are valid");
    let got = oracle.ssrp_with_mode(mode);
    let want = brute_ssrp(g, source);
    got.records
        .iter()
        .zip(&want.records)
        .find(|(a, b)| a != b)
        .map(|(&got, &want)| Mismatch { got, want })
}

/// Drops edges one at a time, in order, while some mismatch remains.
fn shrink(g: &Graph, source: VertexId, mode: QueryMode, mut found: Mismatch) -> (Graph, Mismatch) {
    let mut pairs: Vec<_> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let mut i = 0;
    while i < pairs.len() {
        let mut fewer = pairs.clone();
        fewer.remove(i);
        match first_mismatch(&Graph::unweighted(g.vertex_count(), &fewer), source, mode) {
            Some(m) => {
                pairs = fewer;
                found = m;
            }
            None => i += 1,
        }
    }
    (Graph::unweighted(g.vertex_count(), &pairs), found)
}
