use std::collections::HashSet;
use std::env;
use std::fs;
use std::path::PathBuf;
use std::process::exit;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lapsep::census::census;
use lapsep::graphfile;
use lapsep::record::OutputRecord;
use lapsep::table1;
use lapsep_core::counting::{
    bounds, count_degree_one_graphs, count_lss_matrices, count_nonempty_graphs,
    degree_one_closed_form, exact_two_by_q_counts, BoundsReport, CensusReport,
};
use lapsep_core::{
    block_pattern, classify, partial_transpose, BigInt, BlockPattern, FactorShape, LabeledGraph,
    Verdict,
};

/// Usage errors: bad flags or flag combinations.
const EXIT_USAGE: i32 = 64;
/// Data errors: well-formed flags but invalid graph/shape/size input.
const EXIT_DATA: i32 = 65;
/// Internal inconsistency (a cross-check inside a command failed).
const EXIT_INTERNAL: i32 = 70;

const GRAPH_FILE_HELP: &str = "\
Graph file format: first line \"n <count>\"; then either one \"u v\" edge per
line (1-based vertex labels) or a single \"mask <hex>\" line with the raw
edge bitmask (pairs (u,v), u < v, row-major bit order).

Exit codes: 0 Separable, 1 Entangled, 2 Undetermined, 64 usage error,
65 invalid input.";

const CENSUS_CSV_HELP: &str = "\
CSV columns, in order: p, q, workers, total, thm3_count, ptzero_count,
ppt_count, pattern_deg1_count, separable_exact, entangled_exact, ls_lower,
le_lower, ls_upper, le_upper, elapsed_ms. Values that do not apply (the PSD
column when skipped; exact counts when neither factor is 2) are left empty.

LAPSEP_MAX_WORKERS caps --workers and the default worker count.";

#[derive(Parser)]
#[command(
    name = "lapsep",
    version,
    about = "Exact separability census for graph-Laplacian density matrices",
    long_about = "Decides separability or entanglement of normalized graph-Laplacian \
density matrices under a C^p (x) C^q tensor factorization, entirely in exact \
integer arithmetic, and verifies the counting formulas for how many labeled \
graphs fall on each side by exhaustive enumeration.\n\n\
All commands print a single-line JSON record (inputs echoed, integer results \
as exact decimal strings); census can emit CSV instead."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one labeled graph as separable, entangled, or undetermined
    #[command(after_help = GRAPH_FILE_HELP)]
    Classify(ClassifyArgs),
    /// Exhaustively classify every nonempty labeled graph on p*q vertices
    #[command(after_help = CENSUS_CSV_HELP)]
    Census(CensusArgs),
    /// Exact counting primitives
    Count(CountArgs),
    /// Formula bounds on the separable/entangled counts for a shape
    Bounds(BoundsArgs),
    /// Recompute the built-in table of degree-one graph counts M_n(i)
    #[command(name = "verify-table1")]
    VerifyTable1(VerifyTable1Args),
}

#[derive(Args)]
struct ClassifyArgs {
    /// First factor dimension
    #[arg(long)]
    p: usize,
    /// Second factor dimension
    #[arg(long)]
    q: usize,
    /// Edges as comma-separated 1-based pairs, e.g. "1 2,2 3"
    #[arg(long)]
    edges: Option<String>,
    /// Edge bitmask in hex (with or without 0x)
    #[arg(long)]
    mask: Option<String>,
    /// Read the graph from a file instead
    #[arg(long, value_name = "PATH")]
    graph_file: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    /// First factor dimension
    #[arg(long)]
    p: usize,
    /// Second factor dimension
    #[arg(long)]
    q: usize,
    /// Worker threads (default: machine parallelism)
    #[arg(long)]
    workers: Option<usize>,
    /// Skip the PSD column (required for p*q = 9)
    #[arg(long)]
    skip_ppt: bool,
    /// Output encoding
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct CountArgs {
    #[command(subcommand)]
    what: CountWhat,
}

#[derive(Subcommand)]
enum CountWhat {
    /// Count n x n 0-1 matrices that are / are not line sum symmetric
    Ns {
        /// Matrix dimension (capped at 5)
        #[arg(long)]
        n: usize,
    },
    /// Count labeled graphs with a degree-1 vertex: brute force and closed form
    Mni {
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// Edge count
        #[arg(long)]
        i: usize,
    },
    /// Exact separable/entangled counts for the shape (2, q)
    Ls2q {
        /// Second factor dimension (capped at 5)
        #[arg(long)]
        q: usize,
    },
}

#[derive(Args)]
struct BoundsArgs {
    /// First factor dimension
    #[arg(long)]
    p: usize,
    /// Second factor dimension (capped at 5)
    #[arg(long)]
    q: usize,
}

#[derive(Args)]
struct VerifyTable1Args {
    /// Largest n to check (2..=8)
    #[arg(long, default_value_t = 8)]
    max_n: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn data(message: impl Into<String>) -> Self {
        Self { code: EXIT_DATA, message: message.into() }
    }

    fn internal(message: impl Into<String>) -> Self {
        Self { code: EXIT_INTERNAL, message: message.into() }
    }
}

impl From<lapsep_core::Error> for CliError {
    fn from(e: lapsep_core::Error) -> Self {
        CliError::data(e.to_string())
    }
}

impl From<graphfile::ParseError> for CliError {
    fn from(e: graphfile::ParseError) -> Self {
        CliError::data(e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            exit(code);
        }
    };
    match run(&cli) {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            exit(e.code);
        }
    }
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Classify(args) => cmd_classify(args),
        Command::Census(args) => cmd_census(args),
        Command::Count(args) => cmd_count(&args.what),
        Command::Bounds(args) => cmd_bounds(args),
        Command::VerifyTable1(args) => cmd_verify_table1(args),
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let shape = FactorShape::new(args.p, args.q)?;
    let n = shape.n();
    let mut record = OutputRecord::new("classify");
    record.input("p", args.p).input("q", args.q);

    let sources =
        args.edges.is_some() as u8 + args.mask.is_some() as u8 + args.graph_file.is_some() as u8;
    if sources != 1 {
        return Err(CliError::usage("provide exactly one of --edges, --mask, --graph-file"));
    }
    let graph = if let Some(spec) = &args.edges {
        record.input("edges", spec);
        parse_edges(spec, n)?
    } else if let Some(mask) = &args.mask {
        record.input("mask", mask);
        parse_mask(mask, n)?
    } else {
        let path = args.graph_file.as_ref().unwrap();
        record.input("graph_file", path.display());
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::data(format!("cannot read {}: {e}", path.display())))?;
        let g = graphfile::parse(&text)?;
        if g.n() != n {
            return Err(CliError::data(format!(
                "graph file has {} vertices but p*q = {n}",
                g.n()
            )));
        }
        g
    };
    if graph.is_empty() {
        return Err(CliError::data(
            "the empty graph has trace 0 and cannot be viewed as a density matrix",
        ));
    }

    let verdict = classify(&graph, shape)?;
    let lap = graph.laplacian();
    let pt = partial_transpose(&lap, shape)?;
    let pattern = block_pattern(&lap, shape)?;
    record
        .result("verdict", verdict.kind())
        .result("certificate", verdict.certificate())
        .result("pt_row_sums", join_i128(&pt.row_sums()))
        .result("block_lss", lss_rows(&pattern));
    record.elapsed_ms = started.elapsed().as_millis() as u64;
    println!("{}", record.to_json());
    Ok(match verdict {
        Verdict::Separable(_) => 0,
        Verdict::Entangled(_) => 1,
        Verdict::Undetermined => 2,
    })
}

fn cmd_census(args: &CensusArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let shape = FactorShape::new(args.p, args.q)?;
    let workers = resolve_workers(args.workers)?;
    let report = census(shape, workers, !args.skip_ppt)?;
    let fences = bounds(args.p, args.q)?;
    let elapsed = started.elapsed().as_millis() as u64;

    match args.format {
        OutputFormat::Json => {
            let mut record = OutputRecord::new("census");
            record
                .input("p", args.p)
                .input("q", args.q)
                .input("workers", workers)
                .input("skip_ppt", args.skip_ppt)
                .input("format", "json");
            record
                .result("total", report.total)
                .result("thm3_count", report.thm3_count)
                .result("ptzero_count", report.ptzero_count)
                .result("pattern_deg1_count", report.pattern_deg1_count)
                .result("ls_lower", &fences.ls_lower)
                .result("le_lower", &fences.le_lower)
                .result("ls_upper", &fences.ls_upper)
                .result("le_upper", &fences.le_upper);
            if let Some(c) = report.ppt_count {
                record.result("ppt_count", c);
            }
            if let Some(s) = report.separable_exact {
                record.result("separable_exact", s);
                record.result("entangled_exact", report.total - s);
            }
            record.elapsed_ms = elapsed;
            println!("{}", record.to_json());
        }
        OutputFormat::Csv => {
            print!("{}", census_csv(&report, &fences, workers, elapsed));
        }
    }
    Ok(0)
}

fn cmd_count(what: &CountWhat) -> Result<i32, CliError> {
    let started = Instant::now();
    let mut record;
    match what {
        CountWhat::Ns { n } => {
            record = OutputRecord::new("count ns");
            record.input("n", n);
            let (ns, ne) = count_lss_matrices(*n)?;
            record.result("n_s", ns).result("n_e", ne);
        }
        CountWhat::Mni { n, i } => {
            record = OutputRecord::new("count mni");
            record.input("n", n).input("i", i);
            let brute = count_degree_one_graphs(*n, *i);
            record.result("count", brute);
            if let Some(closed) = degree_one_closed_form(*n, *i) {
                record.result("closed_form", &closed);
                if closed != BigInt::from(brute) {
                    return Err(CliError::internal(format!(
                        "closed form {closed} disagrees with brute force {brute} for M_{n}({i})"
                    )));
                }
            }
        }
        CountWhat::Ls2q { q } => {
            record = OutputRecord::new("count ls2q");
            record.input("q", q);
            let (ls, le) = exact_two_by_q_counts(*q)?;
            record.result("l_s", &ls).result("l_e", &le);
        }
    }
    record.elapsed_ms = started.elapsed().as_millis() as u64;
    println!("{}", record.to_json());
    Ok(0)
}

fn cmd_bounds(args: &BoundsArgs) -> Result<i32, CliError> {
    let started = Instant::now();
    let fences = bounds(args.p, args.q)?;
    let mut record = OutputRecord::new("bounds");
    record.input("p", args.p).input("q", args.q);
    record
        .result("l_total", count_nonempty_graphs(args.p * args.q))
        .result("ls_lower", &fences.ls_lower)
        .result("le_lower", &fences.le_lower)
        .result("ls_upper", &fences.ls_upper)
        .result("le_upper", &fences.le_upper)
        .result("n_s_q", fences.ns_q)
        .result("n_e_q", fences.ne_q)
        .result("m_p", join(&fences.mp));
    record.elapsed_ms = started.elapsed().as_millis() as u64;
    println!("{}", record.to_json());
    Ok(0)
}

fn cmd_verify_table1(args: &VerifyTable1Args) -> Result<i32, CliError> {
    let started = Instant::now();
    if !(2..=8).contains(&args.max_n) {
        return Err(CliError::usage("--max-n must be in 2..=8"));
    }
    let checks = table1::verify(args.max_n, table1::REFERENCE);
    let mut failed = 0usize;
    for c in &checks {
        if c.passed() {
            println!("PASS M_{}({}) = {}", c.n, c.i, c.computed);
        } else {
            failed += 1;
            println!("FAIL M_{}({}): expected {}, computed {}", c.n, c.i, c.expected, c.computed);
        }
    }
    let mut record = OutputRecord::new("verify-table1");
    record.input("max_n", args.max_n);
    record
        .result("cells_checked", checks.len())
        .result("cells_passed", checks.len() - failed)
        .result("cells_failed", failed);
    record.elapsed_ms = started.elapsed().as_millis() as u64;
    println!("{}", record.to_json());
    Ok(if failed == 0 { 0 } else { 1 })
}

fn resolve_workers(requested: Option<usize>) -> Result<usize, CliError> {
    let mut workers = match requested {
        Some(0) => return Err(CliError::usage("--workers must be at least 1")),
        Some(w) => w,
        None => std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1),
    };
    if let Ok(cap) = env::var("LAPSEP_MAX_WORKERS") {
        let cap: usize = cap
            .trim()
            .parse()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| CliError::usage("LAPSEP_MAX_WORKERS must be a positive integer"))?;
        workers = workers.min(cap);
    }
    Ok(workers)
}

fn parse_edges(spec: &str, n: usize) -> Result<LabeledGraph, CliError> {
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for part in spec.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = part.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(CliError::data(format!("malformed edge {part:?}; expected \"u v\"")));
        };
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| CliError::data(format!("bad vertex label {t:?}")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        for w in [u, v] {
            if w < 1 || w > n {
                return Err(CliError::data(format!("vertex {w} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(CliError::data(format!("self-loop at vertex {u}")));
        }
        let pair = (u.min(v) - 1, u.max(v) - 1);
        if !seen.insert(pair) {
            return Err(CliError::data(format!("duplicate edge {u} {v}")));
        }
        edges.push(pair);
    }
    LabeledGraph::from_edges(n, &edges).map_err(Into::into)
}

fn parse_mask(mask: &str, n: usize) -> Result<LabeledGraph, CliError> {
    let digits = mask.strip_prefix("0x").or_else(|| mask.strip_prefix("0X")).unwrap_or(mask);
    let value = u128::from_str_radix(digits, 16)
        .map_err(|_| CliError::data(format!("bad hex mask {mask:?}")))?;
    LabeledGraph::from_mask(n, value).map_err(Into::into)
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn join_i128(values: &[i128]) -> String {
    join(values)
}

/// Rows of the block line-sum-symmetry matrix as 0/1 strings (1 = the block
/// is line sum symmetric), rows joined by ';'.
fn lss_rows(pattern: &BlockPattern) -> String {
    (1..=pattern.p())
        .map(|i| {
            (1..=pattern.p())
                .map(|j| if pattern.fails_lss(i, j) { '0' } else { '1' })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn census_csv(report: &CensusReport, fences: &BoundsReport, workers: usize, elapsed: u64) -> String {
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    let mut out = String::from(
        "p,q,workers,total,thm3_count,ptzero_count,ppt_count,pattern_deg1_count,\
         separable_exact,entangled_exact,ls_lower,le_lower,ls_upper,le_upper,elapsed_ms\r\n",
    );
    out.push_str(&format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\r\n",
        report.p,
        report.q,
        workers,
        report.total,
        report.thm3_count,
        report.ptzero_count,
        opt(report.ppt_count),
        report.pattern_deg1_count,
        opt(report.separable_exact),
        opt(report.entangled_exact()),
        fences.ls_lower,
        fences.le_lower,
        fences.ls_upper,
        fences.le_upper,
        elapsed,
    ));
    out
}
