mod table;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use domlab::constructions::{build_and_verify, ConstructionKind};
use domlab::erratum::{run_erratum_at, ClaimId, ErratumReport};
use domlab::formulas::evaluate;
use domlab::solver::{solve_min, SolveConfig, SolveError, DEFAULT_NODE_BUDGET};
use domlab::verify::{format_certificate, parse_certificate, vertex_label, FailureReason};
use domlab::{
    make_clique, make_cycle, make_path, product_instance, read_edge_list, verify, write_edge_list,
    Family, Graph, ParamKind, VertexSet,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Guard(_) => 4,
            CliError::Budget(_) => 5,
        }
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            SolveError::EmptyGraph => CliError::Guard(e.to_string()),
            SolveError::Verify(_) => CliError::Input(e.to_string()),
        }
    }
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Negative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "domlab", version, about = "Domination parameters of P_n x K_m and C_n x K_m")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact value of a parameter.
    Solve(SolveArgs),
    /// Compare closed forms, solver values and constructions over a grid.
    Table(table::TableArgs),
    /// Check a certificate file.
    Verify(VerifyArgs),
    /// Print an explicit construction.
    Construct(ConstructArgs),
    /// Evaluate a closed form.
    Formula(FormulaArgs),
    /// Check the published claims refuted by small instances.
    Erratum(ErratumArgs),
    /// Write a graph as an edge list.
    Gen(GenArgs),
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long, value_parser = parse_family, requires_all = ["n", "m"], conflicts_with = "graph")]
    family: Option<Family>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Edge-list file: a vertex count line, then one `u v` pair per line.
    #[arg(long)]
    graph: Option<PathBuf>,
}

impl InstanceArgs {
    fn load(&self) -> Result<Graph, CliError> {
        match (&self.graph, self.family, self.n, self.m) {
            (Some(path), _, _, _) => load_graph(path),
            (None, Some(family), Some(n), Some(m)) => {
                product_instance(family, n, m).map_err(|e| CliError::Guard(e.to_string()))
            }
            _ => Err(CliError::Usage(
                "give either --graph FILE or --family, --n and --m".into(),
            )),
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let file = fs::File::open(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    read_edge_list(std::io::BufReader::new(file))
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn parse_family(s: &str) -> Result<Family, String> {
    match s.parse::<Family>() {
        Ok(Family::Other) | Err(_) => Err(format!(
            "unknown family `{s}` (expected path-clique or cycle-clique)"
        )),
        Ok(f) => Ok(f),
    }
}

pub fn parse_param(s: &str) -> Result<ParamKind, String> {
    s.parse()
}

/// Node budget from the flag, else `DOMLAB_BUDGET`, else the default.
pub fn node_budget(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("DOMLAB_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("DOMLAB_BUDGET must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_parser = parse_param)]
    param: ParamKind,
    /// Search nodes allowed before giving up.
    #[arg(long)]
    budget: Option<u64>,
    /// Report the lexicographically smallest minimum set.
    #[arg(long)]
    canonical: bool,
    /// Worker threads for the search; 0 or 1 runs sequentially.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Start from the counting bound instead of the column-profile bound.
    #[arg(long)]
    no_column_pruning: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct SolveJson {
    param: &'static str,
    value: usize,
    certificate: Vec<String>,
    canonical: bool,
}

fn cmd_solve(args: &SolveArgs) -> Result<Status, CliError> {
    let g = args.instance.load()?;
    let cfg = SolveConfig {
        node_budget: Some(node_budget(args.budget)?),
        use_column_pruning: !args.no_column_pruning,
        canonical_certificate: args.canonical,
        parallel_width: args.threads,
    };
    let start = Instant::now();
    let r = solve_min(&g, args.param, &cfg)?;
    eprintln!("nodes {} in {:.3?}", r.stats.nodes, start.elapsed());
    match args.format {
        Format::Text => {
            println!("{} = {}", args.param.symbol(), r.value);
            print!("{}", format_certificate(&g, &r.certificate));
        }
        Format::Json => print_json(&SolveJson {
            param: args.param.name(),
            value: r.value,
            certificate: labels(&g, &r.certificate),
            canonical: r.canonical,
        }),
    }
    Ok(Status::Ok)
}

fn labels(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.iter().map(|v| vertex_label(g, v)).collect()
}

pub fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("plain data serializes"));
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_parser = parse_param)]
    param: ParamKind,
    /// Certificate file: one `i j` (or `(i j)`) per line, or vertex ids for
    /// edge-list graphs.
    #[arg(long)]
    set: PathBuf,
    /// Also list, for secure domination, the defender of each outside vertex.
    #[arg(long)]
    defenders: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct VerifyJson {
    param: &'static str,
    ok: bool,
    size: usize,
    vertex: Option<String>,
    reason: Option<&'static str>,
}

fn cmd_verify(args: &VerifyArgs) -> Result<Status, CliError> {
    let g = args.instance.load()?;
    let text = fs::read_to_string(&args.set)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.set.display())))?;
    let s = parse_certificate(&g, &text)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.set.display())))?;
    let verdict = verify(&g, args.param, &s).map_err(|e| CliError::Input(e.to_string()))?;
    let failure = verdict.failure.map(|f| (vertex_label(&g, f.vertex), f.reason));
    match args.format {
        Format::Text => match &failure {
            None => {
                println!("OK ({})", args.param.describe());
                if args.defenders {
                    for (w, v) in verdict.defenders.iter().flatten() {
                        println!("{} <- {}", vertex_label(&g, *w), vertex_label(&g, *v));
                    }
                }
            }
            Some((vertex, reason)) => {
                println!("FAIL ({}): {} {}", args.param.describe(), vertex, reason.name())
            }
        },
        Format::Json => print_json(&VerifyJson {
            param: args.param.name(),
            ok: verdict.ok,
            size: s.len(),
            vertex: failure.as_ref().map(|(v, _)| v.clone()),
            reason: failure.as_ref().map(|(_, r): &(String, FailureReason)| r.name()),
        }),
    }
    Ok(if verdict.ok { Status::Ok } else { Status::Negative })
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_parser = |s: &str| s.parse::<ConstructionKind>())]
    kind: ConstructionKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    /// Append the verifier verdicts as `#` comment lines.
    #[arg(long)]
    verify: bool,
}

fn cmd_construct(args: &ConstructArgs) -> Result<Status, CliError> {
    let r = build_and_verify(args.kind, args.n, args.m).map_err(|e| CliError::Guard(e.to_string()))?;
    print!("{}", format_certificate(&r.graph, &r.set));
    if args.verify {
        println!("# size {}", r.set.len());
        for (kind, v) in &r.checks {
            match v.failure {
                None => println!("# {}: OK", kind.name()),
                Some(f) => println!(
                    "# {}: FAIL at {} ({})",
                    kind.name(),
                    vertex_label(&r.graph, f.vertex),
                    f.reason.name()
                ),
            }
        }
        if !r.is_valid() {
            return Ok(Status::Negative);
        }
    }
    Ok(Status::Ok)
}

#[derive(Args)]
struct FormulaArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, value_parser = parse_param)]
    param: ParamKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

fn cmd_formula(args: &FormulaArgs) -> Result<Status, CliError> {
    let r = evaluate(args.family, args.param, args.n, args.m)
        .map_err(|e| CliError::Guard(format!("{}: {e}", e.reason())))?;
    println!("{} = {} ({})", args.param.symbol(), r.value, r.source);
    Ok(Status::Ok)
}

#[derive(Args)]
struct ErratumArgs {
    /// A claim name, or `all`.
    #[arg(long, default_value = "all")]
    which: String,
    /// Clique order; each claim has its own default.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct ErratumJson {
    claim: &'static str,
    n: usize,
    m: usize,
    claimed: usize,
    exact: usize,
    verdict: &'static str,
}

impl From<&ErratumReport> for ErratumJson {
    fn from(r: &ErratumReport) -> Self {
        Self {
            claim: r.claim.name(),
            n: r.n,
            m: r.m,
            claimed: r.claimed,
            exact: r.exact,
            verdict: r.verdict.name(),
        }
    }
}

fn cmd_erratum(args: &ErratumArgs) -> Result<Status, CliError> {
    let claims: Vec<ClaimId> = if args.which == "all" {
        ClaimId::ALL.to_vec()
    } else {
        vec![args.which.parse().map_err(CliError::Usage)?]
    };
    for claim in claims {
        let m = args.m.unwrap_or(claim.default_m());
        let r = run_erratum_at(claim, m).map_err(|e| match e {
            domlab::erratum::ErratumError::Solve(s) => CliError::from(s),
            other => CliError::Guard(other.to_string()),
        })?;
        match args.format {
            Format::Text => println!("{r}"),
            Format::Json => print_json(&ErratumJson::from(&r)),
        }
    }
    Ok(Status::Ok)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaseGraph {
    Path,
    Cycle,
    Clique,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_parser = parse_family, conflicts_with = "base", required_unless_present = "base", requires = "m")]
    family: Option<Family>,
    /// A single path, cycle or clique on `--n` vertices.
    #[arg(long, value_enum)]
    base: Option<BaseGraph>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_gen(args: &GenArgs) -> Result<Status, CliError> {
    let g = match (args.family, args.base) {
        (Some(family), _) => product_instance(family, args.n, args.m.unwrap_or_default()),
        (None, Some(BaseGraph::Path)) => make_path(args.n),
        (None, Some(BaseGraph::Cycle)) => make_cycle(args.n),
        (None, Some(BaseGraph::Clique)) => make_clique(args.n),
        (None, None) => unreachable!("clap requires one of them"),
    }
    .map_err(|e| CliError::Guard(e.to_string()))?;
    let text = write_edge_list(&g);
    match &args.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?,
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Input(e.to_string()))?;
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Table(a) => table::cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Construct(a) => cmd_construct(a),
        Command::Formula(a) => cmd_formula(a),
        Command::Erratum(a) => cmd_erratum(a),
        Command::Gen(a) => cmd_gen(a),
    };
    match outcome {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
