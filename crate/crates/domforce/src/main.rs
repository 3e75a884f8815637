//! Command-line frontend: generate family graphs, compute invariants,
//! trace forcing rounds, report bounds, and verify the theorem catalog.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 order cap exceeded,
//! 3 catalog verification found a mismatch.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use domforce::catalog::{self, Profile};
use domforce::{extract_chains, forcing_closure, Error, FamilySpec, Graph, Invariant, Solver};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "domforce",
    version,
    about = "Exact dom-forcing, zero forcing, and domination computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and write it as an edge list.
    Generate(GenerateArgs),
    /// Compute invariants of a graph with optimal witnesses.
    Compute(ComputeArgs),
    /// Run the forcing process from an initial set and print each round.
    Trace(TraceArgs),
    /// Report bound checks relating the invariants.
    Bounds(BoundsArgs),
    /// Verify catalog theorems against exact computation.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family spec, e.g. path:7, coconut:3,2, split(cycle:5)
    spec: String,
    /// Output file; stdout when omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Family spec or edge-list file path
    source: String,
    /// Comma-separated invariants: z, gamma, fd, pt, pathcover
    #[arg(long, value_delimiter = ',', default_values_t = [
        InvariantArg::Z, InvariantArg::Gamma, InvariantArg::Fd
    ])]
    invariants: Vec<InvariantArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Max graph order for exact search (overrides DOMFORCE_CAP)
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantArg {
    Z,
    Gamma,
    Fd,
    Pt,
    Pathcover,
}

impl std::fmt::Display for InvariantArg {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            InvariantArg::Z => "z",
            InvariantArg::Gamma => "gamma",
            InvariantArg::Fd => "fd",
            InvariantArg::Pt => "pt",
            InvariantArg::Pathcover => "pathcover",
        })
    }
}

#[derive(Args)]
struct TraceArgs {
    /// Family spec or edge-list file path
    source: String,
    /// Initial black set as comma-separated vertex ids, e.g. 0,1,4
    #[arg(long)]
    initial: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BoundsArgs {
    /// Family spec or edge-list file path
    source: String,
    /// Also bound the splitting graph via doubling
    #[arg(long)]
    split: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Restrict to these theorem ids (comma-separated); all when omitted
    #[arg(long, value_delimiter = ',')]
    theorem: Option<Vec<String>>,
    /// quick or full
    #[arg(long, default_value = "quick")]
    profile: Profile,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    cap: Option<usize>,
    /// List available theorem ids and exit
    #[arg(long)]
    list: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Compute(args) => cmd_compute(args),
        Command::Trace(args) => cmd_trace(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } | Error::InvalidCap(_) => EXIT_CAP,
                _ => EXIT_USAGE,
            };
            ExitCode::from(code)
        }
    }
}

/// Resolves a source string: family spec first, then edge-list file.
fn load_graph(source: &str) -> Result<Graph, Error> {
    let spec_err = match source.parse::<FamilySpec>() {
        Ok(spec) => return spec.generate(),
        Err(e) => e,
    };
    if std::path::Path::new(source).exists() {
        let text = std::fs::read_to_string(source).map_err(|e| Error::ParseEdgeList {
            line: 0,
            reason: format!("cannot read '{source}': {e}"),
        })?;
        return Graph::parse_edge_list(&text);
    }
    Err(Error::InvalidParameter {
        family: "source",
        reason: format!("'{source}' is neither a family spec ({spec_err}) nor an existing file"),
    })
}

fn solver_with(cap: Option<usize>) -> Result<Solver, Error> {
    let cap = match cap {
        Some(c) => Some(c),
        None => match std::env::var("DOMFORCE_CAP") {
            Ok(v) => Some(v.parse::<usize>().map_err(|_| Error::InvalidParameter {
                family: "cap",
                reason: format!("DOMFORCE_CAP='{v}' is not a number"),
            })?),
            Err(_) => None,
        },
    };
    match cap {
        Some(c) => Solver::with_cap(c),
        None => Ok(Solver::new()),
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<u8, Error> {
    let spec: FamilySpec = args.spec.parse()?;
    let graph = spec.generate()?;
    let text = graph.to_edge_list(&[format!("{spec}")]);
    match args.output {
        Some(path) => {
            let mut f = std::fs::File::create(&path).map_err(|e| Error::InvalidParameter {
                family: "output",
                reason: format!("cannot write '{}': {e}", path.display()),
            })?;
            f.write_all(text.as_bytes()).map_err(|e| Error::InvalidParameter {
                family: "output",
                reason: e.to_string(),
            })?;
        }
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ComputedEntry {
    invariant: Invariant,
    value: usize,
    witness_ids: Vec<usize>,
    witness_labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    paths: Option<Vec<Vec<usize>>>,
    explored: u64,
}

#[derive(Serialize)]
struct ComputeOutput {
    source: String,
    order: usize,
    edges: usize,
    results: Vec<ComputedEntry>,
}

fn cmd_compute(args: ComputeArgs) -> Result<u8, Error> {
    let graph = load_graph(&args.source)?;
    let solver = solver_with(args.cap)?;
    let mut results = Vec::new();
    for inv in &args.invariants {
        let r = match inv {
            InvariantArg::Z => solver.zero_forcing_number(&graph)?,
            InvariantArg::Gamma => solver.domination_number(&graph)?,
            InvariantArg::Fd => solver.dom_forcing_number(&graph)?,
            InvariantArg::Pt => solver.min_propagation_time(&graph)?,
            InvariantArg::Pathcover => solver.path_cover_number(&graph)?,
        };
        let (ids, labels) = match r.witness.as_set() {
            Some(s) => (s.to_vec(), graph.labels_of(s)),
            None => (Vec::new(), Vec::new()),
        };
        let paths = match &r.witness {
            domforce::Witness::Paths(p) => Some(p.clone()),
            _ => None,
        };
        results.push(ComputedEntry {
            invariant: r.invariant,
            value: r.value,
            witness_ids: ids,
            witness_labels: labels,
            paths,
            explored: r.explored,
        });
    }
    let out = ComputeOutput {
        source: args.source.clone(),
        order: graph.order(),
        edges: graph.edge_count(),
        results,
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Text => {
            println!("graph: {} (order {}, edges {})", out.source, out.order, out.edges);
            for e in &out.results {
                match &e.paths {
                    Some(paths) => {
                        let rendered: Vec<String> = paths
                            .iter()
                            .map(|p| {
                                p.iter()
                                    .map(|&v| graph.label(v))
                                    .collect::<Vec<_>>()
                                    .join("-")
                            })
                            .collect();
                        println!(
                            "{} = {}  paths: {}",
                            e.invariant,
                            e.value,
                            rendered.join(" | ")
                        );
                    }
                    None => {
                        println!(
                            "{} = {}  witness: {{{}}} = {{{}}}",
                            e.invariant,
                            e.value,
                            e.witness_ids
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>()
                                .join(", "),
                            e.witness_labels.join(", ")
                        );
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct TraceForce {
    forcer: usize,
    forced: usize,
    forcer_label: String,
    forced_label: String,
}

#[derive(Serialize)]
struct TraceRound {
    index: usize,
    forces: Vec<TraceForce>,
}

#[derive(Serialize)]
struct TraceOutput {
    source: String,
    initial: Vec<usize>,
    rounds: Vec<TraceRound>,
    final_black: Vec<usize>,
    complete: bool,
    /// Rounds to force the whole graph; absent when the process stalls.
    propagation_time: Option<usize>,
    chains: Option<Vec<Vec<usize>>>,
}

fn cmd_trace(args: TraceArgs) -> Result<u8, Error> {
    let graph = load_graph(&args.source)?;
    let mut ids = Vec::new();
    for part in args.initial.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let v: usize = part.parse().map_err(|_| Error::InvalidParameter {
            family: "initial",
            reason: format!("'{part}' is not a vertex id"),
        })?;
        ids.push(v);
    }
    let initial = domforce::VertexSet::from_ids(graph.order(), ids.iter().copied())?;
    let trace = forcing_closure(&graph, &initial);
    let complete = trace.is_complete();
    let pt = complete.then(|| trace.round_count());
    let chains = if complete {
        Some(extract_chains(&trace)?.chains)
    } else {
        None
    };
    let out = TraceOutput {
        source: args.source.clone(),
        initial: trace.initial.to_vec(),
        rounds: trace
            .rounds
            .iter()
            .map(|r| TraceRound {
                index: r.index,
                forces: r
                    .forces
                    .iter()
                    .map(|f| TraceForce {
                        forcer: f.forcer,
                        forced: f.forced,
                        forcer_label: graph.label(f.forcer),
                        forced_label: graph.label(f.forced),
                    })
                    .collect(),
            })
            .collect(),
        final_black: trace.final_set.to_vec(),
        complete,
        propagation_time: pt,
        chains,
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Text => {
            println!("initial: {}", render_ids(&graph, &out.initial));
            for round in &out.rounds {
                let forces: Vec<String> = round
                    .forces
                    .iter()
                    .map(|f| format!("{} -> {}", f.forcer_label, f.forced_label))
                    .collect();
                println!("round {}: {}", round.index, forces.join(", "));
            }
            if out.complete {
                println!("all vertices forced in {} rounds", out.propagation_time.unwrap());
                if let Some(chains) = &out.chains {
                    let rendered: Vec<String> = chains
                        .iter()
                        .map(|p| {
                            p.iter().map(|&v| graph.label(v)).collect::<Vec<_>>().join("-")
                        })
                        .collect();
                    println!("forcing chains: {}", rendered.join(" | "));
                }
            } else {
                println!(
                    "stalled with {} of {} vertices black: {}",
                    out.final_black.len(),
                    graph.order(),
                    render_ids(&graph, &out.final_black)
                );
            }
        }
    }
    Ok(EXIT_OK)
}

fn render_ids(graph: &Graph, ids: &[usize]) -> String {
    let labels: Vec<String> = ids.iter().map(|&v| graph.label(v)).collect();
    format!(
        "{{{}}} = {{{}}}",
        ids.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "),
        labels.join(", ")
    )
}

#[derive(Serialize)]
struct BoundsOutput {
    source: String,
    order: usize,
    z: usize,
    gamma: usize,
    fd: usize,
    reports: Vec<domforce::BoundReport>,
    all_hold: bool,
}

fn cmd_bounds(args: BoundsArgs) -> Result<u8, Error> {
    let graph = load_graph(&args.source)?;
    let solver = solver_with(args.cap)?;
    let z = solver.zero_forcing_number(&graph)?.value;
    let gamma = solver.domination_number(&graph)?.value;
    let fd = solver.dom_forcing_number(&graph)?.value;
    let mut reports = solver.fd_bounds(&graph)?;
    if args.split {
        reports.push(solver.split_double_bound(&graph)?);
    }
    let all_hold = reports.iter().all(|r| {
        let value = if matches!(r.source, domforce::BoundSource::SplitDouble) {
            // the doubled bound constrains the splitting graph, check it there
            match domforce::splitting(&graph) {
                s if s.order() <= solver.cap() => {
                    solver.dom_forcing_number(&s).map(|r| r.value).unwrap_or(r.lower)
                }
                _ => r.lower,
            }
        } else {
            fd
        };
        r.lower <= value && value <= r.upper
    });
    let out = BoundsOutput {
        source: args.source.clone(),
        order: graph.order(),
        z,
        gamma,
        fd,
        reports,
        all_hold,
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&out).unwrap()),
        Format::Text => {
            println!(
                "graph: {} (order {})  Z = {}, gamma = {}, F_d = {}",
                out.source, out.order, out.z, out.gamma, out.fd
            );
            for r in &out.reports {
                println!("[{}, {}]  {}", r.lower, r.upper, r.detail);
            }
            println!("all bounds hold: {}", out.all_hold);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Error> {
    if args.list {
        for id in catalog::theorem_ids() {
            println!("{id}");
        }
        return Ok(EXIT_OK);
    }
    let solver = solver_with(args.cap)?;
    let report = catalog::verify_all(args.profile, &solver, args.theorem.as_deref())?;
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Text => print!("{}", report.render_table()),
    }
    if report.has_mismatch() {
        for m in report.mismatches() {
            eprintln!(
                "MISMATCH: {} ({}) {}: {}",
                m.theorem,
                m.params,
                m.quantity,
                m.detail.as_deref().unwrap_or("")
            );
        }
        Ok(EXIT_MISMATCH)
    } else {
        Ok(EXIT_OK)
    }
}
