//! Command-line front end. Reads and writes JSON on files or standard
//! streams.
//!
//! Exit codes: 0 success, 1 malformed input, 2 verification rejected,
//! 3 search budget exhausted.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use strong_immersion::bounds::{converse_n, converse_n_alpha, d_of_k, theorem31_constants};
use strong_immersion::generators::{gen_complete, gen_pk, gen_pk_chorded, gen_random_multigraph};
use strong_immersion::immersion::{find_immersion, verify_immersion, ImmersionCertificate, ImmersionSearch};
use strong_immersion::path_decomp::{linear_decompose, verify_linear_certificate, LinearParams, LinearityCertificate, Outcome};
use strong_immersion::tree_cut::{
    edge_sum, structure_decompose, torso_at, verify_structure, StructureDecomposition, TreeCutDecomposition,
};
use strong_immersion::{Multigraph, VertexSet};

#[derive(Parser)]
#[command(name = "simm", version, about = "Strong immersions, linear and tree-cut decompositions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a generated multigraph.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Search for an immersion of a pattern in a host.
    FindImmersion(FindArgs),
    /// Check a certificate; exits 2 when it is rejected.
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Decompose(DecomposeCommand),
    /// Glue two graphs along degree-k vertices.
    EdgeSum(EdgeSumArgs),
    /// The torso of a tree-cut decomposition at one node.
    Torso(TorsoArgs),
    /// Exact constants, printed as decimal strings.
    #[command(subcommand)]
    Bounds(BoundsCommand),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Path of length k with every edge k-fold.
    Pk { k: usize },
    /// `pk` plus chords between vertices at distance two.
    PkChorded { k: usize },
    /// Simple complete graph.
    Complete { n: usize },
    /// Seeded random multigraph; loops allowed.
    Random {
        n: usize,
        edges: usize,
        #[arg(long, default_value_t = 2)]
        max_multiplicity: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct FindArgs {
    /// Host graph file; standard input when omitted.
    #[arg(long)]
    host: Option<PathBuf>,
    /// Pattern graph file, or `K<n>` / `P<k>`.
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    strong: bool,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    Immersion {
        #[arg(long)]
        host: PathBuf,
        /// Pattern graph file, or `K<n>` / `P<k>`.
        #[arg(long)]
        pattern: String,
        /// Certificate file; standard input when omitted.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Check the strong conditions regardless of the certificate's flag.
        #[arg(long, conflicts_with = "weak")]
        strong: bool,
        /// Check only the weak conditions.
        #[arg(long)]
        weak: bool,
    },
    Linear {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        cert: Option<PathBuf>,
        /// `all` or comma-separated vertices; defaults to `A` plus the ordering.
        #[arg(long = "W")]
        w: Option<String>,
        /// Bounds to check; each defaults to the certificate's achieved value.
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        w_bound: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
    },
    Structure {
        #[arg(long)]
        graph: PathBuf,
        /// Output of `decompose structure`; standard input when omitted.
        #[arg(long)]
        structure: Option<PathBuf>,
        /// Defaults to the value recorded in the structure file.
        #[arg(long)]
        alpha: Option<usize>,
    },
}

#[derive(Subcommand)]
enum DecomposeCommand {
    /// Linearity certificate for W, or a failure witness.
    Linear {
        #[arg(long)]
        graph: Option<PathBuf>,
        /// `all` or comma-separated vertices.
        #[arg(long = "W")]
        w: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        w_limit: usize,
        /// Threads for the independent flow computations.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Tree-cut decomposition with alpha-basic torsos, or a failure witness.
    Structure {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        alpha: usize,
    },
}

#[derive(Args)]
struct EdgeSumArgs {
    #[arg(long)]
    g1: PathBuf,
    #[arg(long)]
    v1: String,
    #[arg(long)]
    g2: PathBuf,
    #[arg(long)]
    v2: String,
    /// JSON list of `[e1, e2]` pairs.
    #[arg(long)]
    pi: PathBuf,
}

#[derive(Args)]
struct TorsoArgs {
    #[arg(long)]
    graph: PathBuf,
    /// A tree-cut decomposition, or the output of `decompose structure`.
    #[arg(long)]
    decomp: PathBuf,
    #[arg(long)]
    node: String,
}

#[derive(Subcommand)]
enum BoundsCommand {
    DOfK { k: u64 },
    /// Constants for a pattern graph file or `K<n>` / `P<k>`.
    Theorem31 { pattern: String },
    Converse { d: u64, a: u64, w: u64, p: u64 },
    ConverseAlpha { alpha: u64 },
}

const REJECTED: u8 = 2;
const OUT_OF_BUDGET: u8 = 3;

type CliResult = Result<u8, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Gen(g) => {
            let graph = match g {
                GenCommand::Pk { k } => gen_pk(k),
                GenCommand::PkChorded { k } => gen_pk_chorded(k),
                GenCommand::Complete { n } => Ok(gen_complete(n)),
                GenCommand::Random {
                    n,
                    edges,
                    max_multiplicity,
                    seed,
                } => gen_random_multigraph(n, edges, max_multiplicity, seed),
            }
            .map_err(|e| e.to_string())?;
            emit(&graph)
        }
        Command::FindImmersion(args) => {
            let host: Multigraph = read_json(args.host.as_ref())?;
            let pattern = read_pattern(&args.pattern)?;
            match find_immersion(&host, &pattern, args.strong, args.budget) {
                ImmersionSearch::Found(cert) => emit(&cert),
                ImmersionSearch::Absent => emit(&"absent"),
                ImmersionSearch::BudgetExhausted { .. } => {
                    emit(&"budget")?;
                    Ok(OUT_OF_BUDGET)
                }
            }
        }
        Command::Verify(v) => verify(v),
        Command::Decompose(DecomposeCommand::Linear {
            graph,
            w,
            m,
            w_limit,
            jobs,
        }) => {
            let g: Multigraph = read_json(graph.as_ref())?;
            let w = parse_vertex_list(&g, &w)?;
            let params = LinearParams { m, w_limit, jobs };
            match linear_decompose(&g, &w, params).map_err(|e| e.to_string())? {
                Outcome::Certified(run) => emit(&run.certificate),
                Outcome::Failed(witness) => emit(&witness),
            }
        }
        Command::Decompose(DecomposeCommand::Structure { graph, alpha }) => {
            let g: Multigraph = read_json(graph.as_ref())?;
            match structure_decompose(&g, alpha).map_err(|e| e.to_string())? {
                Outcome::Certified(s) => emit(&s),
                Outcome::Failed(witness) => emit(&witness),
            }
        }
        Command::EdgeSum(args) => {
            let g1: Multigraph = read_json(Some(&args.g1))?;
            let g2: Multigraph = read_json(Some(&args.g2))?;
            let pi: Vec<(String, String)> = read_json(Some(&args.pi))?;
            let g = edge_sum(&g1, &args.v1, &g2, &args.v2, &pi).map_err(|e| e.to_string())?;
            emit(&g)
        }
        Command::Torso(args) => {
            let g: Multigraph = read_json(Some(&args.graph))?;
            let d = read_decomposition(&args.decomp)?;
            let torso = torso_at(&g, &d, &args.node).map_err(|e| e.to_string())?;
            emit(&torso)
        }
        Command::Bounds(b) => bounds(b),
    }
}

fn verify(command: VerifyCommand) -> CliResult {
    let report = match command {
        VerifyCommand::Immersion {
            host,
            pattern,
            cert,
            strong,
            weak,
        } => {
            let g: Multigraph = read_json(Some(&host))?;
            let h = read_pattern(&pattern)?;
            let cert: ImmersionCertificate = read_json(cert.as_ref())?;
            let strong = strong || (cert.strong && !weak);
            let violations = verify_immersion(&g, &h, &cert, strong).map_err(|e| e.to_string())?;
            serde_json::to_value(violations)
        }
        VerifyCommand::Linear {
            graph,
            cert,
            w,
            a,
            w_bound,
            p,
        } => {
            let g: Multigraph = read_json(Some(&graph))?;
            let cert: LinearityCertificate = read_json(cert.as_ref())?;
            let w = match w {
                Some(list) => parse_vertex_list(&g, &list)?,
                None => cert
                    .apex
                    .iter()
                    .chain(&cert.decomposition.ordering)
                    .cloned()
                    .collect(),
            };
            let achieved = cert.achieved;
            let violations = verify_linear_certificate(
                &g,
                &w,
                &cert,
                a.unwrap_or(achieved.a),
                w_bound.unwrap_or(achieved.w),
                p.unwrap_or(achieved.p),
            )
            .map_err(|e| e.to_string())?;
            serde_json::to_value(violations)
        }
        VerifyCommand::Structure { graph, structure, alpha } => {
            let g: Multigraph = read_json(Some(&graph))?;
            let s: StructureDecomposition = read_json(structure.as_ref())?;
            let alpha = alpha.unwrap_or(s.alpha);
            let violations =
                verify_structure(&g, &s.decomposition, &s.certificates, alpha).map_err(|e| e.to_string())?;
            serde_json::to_value(violations)
        }
    }
    .map_err(|e| e.to_string())?;
    let accepted = report.as_array().is_some_and(|v| v.is_empty());
    emit(&json!({ "accepted": accepted, "violations": report }))?;
    Ok(if accepted { 0 } else { REJECTED })
}

fn bounds(command: BoundsCommand) -> CliResult {
    let value = match command {
        BoundsCommand::DOfK { k } => {
            let d = d_of_k(k).map_err(|e| e.to_string())?;
            json!({ "k": k, "d": d.to_string() })
        }
        BoundsCommand::Theorem31 { pattern } => {
            let f = read_pattern(&pattern)?;
            serde_json::to_value(theorem31_constants(&f)).map_err(|e| e.to_string())?
        }
        BoundsCommand::Converse { d, a, w, p } => json!({ "n": converse_n(d, a, w, p).to_string() }),
        BoundsCommand::ConverseAlpha { alpha } => json!({ "n": converse_n_alpha(alpha).to_string() }),
    };
    emit(&value)
}

fn emit<T: Serialize>(value: &T) -> CliResult {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
        _ => Ok(0),
    }
}

fn read_json<T: DeserializeOwned>(path: Option<&PathBuf>) -> Result<T, String> {
    let (text, source) = match path {
        Some(p) => (
            std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?,
            p.display().to_string(),
        ),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
            (buf, "standard input".to_string())
        }
    };
    serde_json::from_str(&text).map_err(|e| format!("{source}: {e}"))
}

/// `K<n>` and `P<k>` name generated graphs; anything else is a file.
fn read_pattern(name: &str) -> Result<Multigraph, String> {
    let shorthand = |prefix: char| {
        name.strip_prefix(prefix)
            .and_then(|rest| rest.parse::<usize>().ok())
    };
    if let Some(n) = shorthand('K') {
        return Ok(gen_complete(n));
    }
    if let Some(k) = shorthand('P') {
        return gen_pk(k).map_err(|e| e.to_string());
    }
    read_json(Some(&PathBuf::from(name)))
}

fn read_decomposition(path: &PathBuf) -> Result<TreeCutDecomposition, String> {
    let value: serde_json::Value = read_json(Some(path))?;
    let inner = value.get("decomposition").cloned().unwrap_or(value);
    serde_json::from_value(inner).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_vertex_list(g: &Multigraph, list: &str) -> Result<VertexSet, String> {
    if list == "all" {
        return Ok(g.vertices().clone());
    }
    let set: VertexSet = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    match set.iter().find(|v| !g.contains_vertex(v)) {
        Some(v) => Err(format!("unknown vertex {v}")),
        None => Ok(set),
    }
}
