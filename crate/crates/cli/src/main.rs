mod bench;
mod verify;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use sdo_core::{Graph, OracleTree, VertexId};

#[derive(Parser)]
#[command(name = "sdo", version, about = "Single-source distance oracle tolerating one edge fault")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the oracle and save it next to the graph file.
    Build { graph: PathBuf, source: VertexId },
    /// Distance from the source to `t` avoiding edge `(x, y)`.
    Query { input: PathBuf, source: VertexId, t: VertexId, x: VertexId, y: VertexId },
    /// Every replacement distance, as `t x y dist` lines.
    Ssrp { input: PathBuf, source: VertexId },
    /// Compare the oracle against brute force on seeded random graphs.
    Verify(verify::VerifyArgs),
    /// Build and query timings on sparse random graphs.
    Bench(bench::BenchArgs),
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Build { graph, source } => {
            let g = read_graph(&graph)?;
            let oracle = OracleTree::build(&g, source)?;
            let out = oracle_path(&graph);
            fs::write(&out, oracle.to_json()?).with_context(|| format!("writing {}", out.display()))?;
            let stats = oracle.stats();
            println!("n\t{}", stats.vertices);
            println!("m\t{}", stats.edges);
            println!("tree depth\t{}", stats.depth);
            println!("total DEP entries\t{}", stats.total_dep_entries);
            println!("nodes\t{}", stats.nodes);
            println!("leaves\t{}", stats.leaves);
            println!("oracle\t{}", out.display());
        }
        Command::Query { input, source, t, x, y } => {
            let oracle = load(&input, source)?;
            println!("{}", oracle.query(t, x, y)?.distance);
        }
        Command::Ssrp { input, source } => {
            let oracle = load(&input, source)?;
            let mut out = BufWriter::new(io::stdout().lock());
            out.write_all(oracle.ssrp().to_tsv().as_bytes())?;
            out.flush()?;
        }
        Command::Verify(args) => return verify::run(&args),
        Command::Bench(args) => bench::run(&args)?,
    }
    Ok(ExitCode::SUCCESS)
}

/// `graph.txt` → `graph.txt.oracle`
fn oracle_path(graph: &Path) -> PathBuf {
    let mut name = graph.as_os_str().to_owned();
    name.push(".oracle");
    PathBuf::from(name)
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Loads a saved oracle, or builds one when `path` holds a graph.
fn load(path: &Path, source: VertexId) -> Result<OracleTree> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    if text.trim_start().starts_with('{') {
        let oracle = OracleTree::from_json(&text).with_context(|| format!("loading oracle {}", path.display()))?;
        if oracle.source() != source {
            bail!(sdo_core::Error::SourceMismatch { built: oracle.source(), requested: source });
        }
        return Ok(oracle);
    }
    let g = Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(OracleTree::build(&g, source)?)
}
