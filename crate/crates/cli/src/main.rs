//! `metric-lines`: compute lines of graph metrics and verify the
//! diameter-two characterization by exhaustive enumeration.
//!
//! Exit codes: 0 success, 1 theorem violation or claim-suite failure,
//! 2 usage or I/O error.

use std::fs;
use std::io::{self, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use metric_lines::claims::{run_claim_suite, MAX_CLAIM_N};
use metric_lines::enumerate::MAX_ENUM_N;
use metric_lines::family::ALL_FIXED;
use metric_lines::verifier::{VerifyOptions, MIN_VERIFY_N};
use metric_lines::{
    diameter, graph6, report, verify_theorem, EnumerationCursor, Enumerator, Executor, FamilyName, Graph, GraphSource,
};

#[derive(Parser, Debug)]
#[command(name = "metric-lines", version, about = "Lines in graph metrics: computation and exhaustive verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify that the only diameter-2 graphs with fewer lines than vertices are the named family.
    Verify(VerifyArgs),
    /// Print the lines of one graph.
    Lines(LinesArgs),
    /// List the named constructions or emit one as graph6.
    Family(FamilyArgs),
    /// Emit connected isomorphism classes as graph6, one per line.
    Enumerate(EnumerateArgs),
    /// Run the structural claim suites over all diameter-2 graphs.
    Claims(ClaimsArgs),
    /// Minimum line count over diameter-2 graphs, as CSV.
    Profile(ProfileArgs),
}

#[derive(Args, Debug)]
struct JobsArg {
    /// Worker threads; 0 uses every core. Never changes the output.
    #[arg(long, env = "METRIC_LINES_JOBS", default_value_t = 0)]
    jobs: usize,
}

impl JobsArg {
    fn executor(&self) -> Executor {
        Executor::new(self.jobs)
    }
}

/// An inclusive range of orders written `A..B` (or `A..=B`), or a single `N`.
#[derive(Clone, Debug)]
struct OrderRange(RangeInclusive<usize>);

impl FromStr for OrderRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid order {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(OrderRange(lo..=hi))
    }
}

impl OrderRange {
    fn check(&self, min: usize, max: usize) -> Result<(), String> {
        if *self.0.start() < min || *self.0.end() > max {
            return Err(format!("orders must lie within {min}..{max}"));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Orders to verify, e.g. `3..9` or `7`.
    #[arg(long = "n", alias = "n-range")]
    n: OrderRange,
    /// `builtin`, `stdin`, or a path to a graph6 file (one graph per line).
    #[arg(long, default_value = "builtin")]
    source: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include every line set in JSON output.
    #[arg(long)]
    dump_lines: bool,
    /// Diameter filter: 2 checks the theorem, 3 surveys the diameter-3 graphs.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=3))]
    diameter: u32,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Args, Debug)]
#[group(id = "input", required = true, multiple = false)]
struct LinesArgs {
    /// A graph6 string.
    #[arg(group = "input")]
    graph6: Option<String>,
    /// A named construction, e.g. `K23` or `M2p(5)`.
    #[arg(long, group = "input")]
    family: Option<String>,
    /// An edge-list file: `n m`, then `m` lines `i j`.
    #[arg(long, group = "input")]
    edges: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(id = "action", required = true, multiple = false)]
struct FamilyArgs {
    /// Print every named construction with its order, edges and lines.
    #[arg(long, group = "action")]
    list: bool,
    /// Print the graph6 encoding of one construction.
    #[arg(long, group = "action", value_name = "TAG")]
    emit: Option<String>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long = "n")]
    n: usize,
    /// Keep only graphs of this diameter.
    #[arg(long)]
    diameter: Option<u32>,
    /// Print only the number of classes.
    #[arg(long)]
    count: bool,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Args, Debug)]
struct ClaimsArgs {
    #[arg(long = "n", alias = "n-range")]
    n: OrderRange,
    #[command(flatten)]
    jobs: JobsArg,
}

#[derive(Args, Debug)]
struct ProfileArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    jobs: JobsArg,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    /// Exit 1.
    Violation,
    /// Exit 2.
    Usage(String),
}

impl From<metric_lines::Error> for Failure {
    fn from(e: metric_lines::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Lines(a) => cmd_lines(a),
        Command::Family(a) => cmd_family(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Claims(a) => cmd_claims(a),
        Command::Profile(a) => cmd_profile(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match output {
        Some(path) => fs::write(path, text),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn read_graphs(source: &str) -> Result<Option<Vec<Graph>>, Failure> {
    let graphs: metric_lines::Result<Vec<Graph>> = match source {
        "builtin" => return Ok(None),
        "stdin" => graph6::read_stream(io::stdin().lock()).collect(),
        path => {
            let file = fs::File::open(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
            graph6::read_stream(BufReader::new(file)).collect()
        }
    };
    Ok(Some(graphs?))
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    a.n.check(MIN_VERIFY_N, MAX_ENUM_N).map_err(Failure::Usage)?;
    let source = match read_graphs(&a.source)? {
        None => GraphSource::Builtin,
        Some(graphs) => GraphSource::Graphs(graphs),
    };
    let opts = VerifyOptions { diameter: a.diameter, exec: a.jobs.executor() };
    let reports = a.n.0.map(|n| verify_theorem(n, &source, &opts)).collect::<Result<Vec<_>, _>>()?;
    let text = match a.format {
        Format::Text => report::verification_text(&reports),
        Format::Csv => report::verification_csv(&reports)?,
        Format::Json => report::verification_json(&reports, a.dump_lines)?,
    };
    emit(a.output.as_ref(), &text)?;
    if reports.iter().any(|r| r.has_violation()) {
        eprintln!("theorem violation found");
        return Err(Failure::Violation);
    }
    Ok(())
}

fn cmd_lines(a: LinesArgs) -> CmdResult {
    let g = if let Some(s) = &a.graph6 {
        graph6::decode(s)?
    } else if let Some(tag) = &a.family {
        tag.parse::<FamilyName>()?.graph()?
    } else if let Some(path) = &a.edges {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        Graph::parse_edge_list(&text)?
    } else {
        unreachable!("clap enforces one input")
    };
    let d = diameter(&g)?;
    let lines = metric_lines::line_set(&g)?;
    let universal = lines.contains(g.vertices());
    let mut out = format!(
        "n: {}\ndiameter: {d}\nlines: {}\nuniversal: {}\n",
        g.n(),
        lines.len(),
        if universal { "yes" } else { "no" }
    );
    for line in lines.to_index_lists() {
        let idx: Vec<String> = line.iter().map(usize::to_string).collect();
        out.push_str(&idx.join(" "));
        out.push('\n');
    }
    emit(None, &out)?;
    Ok(())
}

fn cmd_family(a: FamilyArgs) -> CmdResult {
    let mut out = String::new();
    if a.list {
        out.push_str("tag\tn\tedges\tlines\tgraph6\n");
        for tag in ALL_FIXED {
            let g = tag.graph()?;
            let lines = metric_lines::count_lines(&g)?;
            out.push_str(&format!("{tag}\t{}\t{}\t{lines}\t{}\n", g.n(), g.edge_count(), graph6::encode(&g)));
        }
    } else if let Some(tag) = &a.emit {
        let g = tag.parse::<FamilyName>()?.graph()?;
        out.push_str(&graph6::encode(&g));
        out.push('\n');
    }
    emit(None, &out)?;
    Ok(())
}

fn cmd_enumerate(a: EnumerateArgs) -> CmdResult {
    let mut cursor = EnumerationCursor::connected(a.n);
    if let Some(d) = a.diameter {
        cursor = cursor.with_diameter(d);
    }
    let enumerator = Enumerator::new(a.jobs.executor());
    let (stats, codes) = enumerator.collect(&cursor, |g| (!a.count).then(|| graph6::encode(g)))?;
    let mut out = io::BufWriter::new(io::stdout().lock());
    if a.count {
        writeln!(out, "{}", stats.visited)?;
    } else {
        for c in codes {
            writeln!(out, "{c}")?;
        }
    }
    out.flush()?;
    Ok(())
}

fn cmd_claims(a: ClaimsArgs) -> CmdResult {
    a.n.check(MIN_VERIFY_N, MAX_CLAIM_N).map_err(Failure::Usage)?;
    let exec = a.jobs.executor();
    let reports = a.n.0.map(|n| run_claim_suite(n, &exec)).collect::<Result<Vec<_>, _>>()?;
    emit(None, &report::claims_text(&reports))?;
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        eprintln!("claim suite failure");
        Err(Failure::Violation)
    }
}

fn cmd_profile(a: ProfileArgs) -> CmdResult {
    if !(MIN_VERIFY_N..=MAX_ENUM_N).contains(&a.n_max) {
        return Err(Failure::Usage(format!("--n-max must lie within {MIN_VERIFY_N}..{MAX_ENUM_N}")));
    }
    let rows = metric_lines::min_lines_profile(a.n_max, &a.jobs.executor())?;
    emit(a.output.as_ref(), &report::profile_csv(&rows)?)?;
    Ok(())
}
