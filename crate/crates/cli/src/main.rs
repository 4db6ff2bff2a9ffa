use std::fs;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use time::format_description::well_known::Rfc3339;
use time::OffsetDateTime;

use tdsearch::scan::{all_fixtures, VerificationReport};
use tdsearch::search::parallel_search_from;
use tdsearch::{
    check_necessary_condition, decode_graph6, encode_graph6, load_fixture,
    parse_adjacency_document, random_regular, scan_stream, to_adjacency_list, verify_graph,
    CensusCounts, GeneratorParams, Graph, ObjectiveKind, ScanError, ScanOptions, SearchConfig,
    SearchError, SearchReport,
};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INPUT: u8 = 4;

#[derive(Parser)]
#[command(
    name = "tdsearch",
    version,
    about = "Search and check regular triangle-distinct graphs"
)]
struct Cli {
    /// Structured (JSON) output instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Variable neighbourhood search for an r-regular TD graph on n vertices.
    Search(SearchArgs),
    /// Check a graph (graph6 or neighbour list) against its claimed t column and degree.
    Verify {
        /// Input file, or `-` for stdin.
        file: PathBuf,
    },
    /// Count TD graphs in a graph6 stream.
    Scan {
        /// Echo TD graphs to stdout; the summary goes to stderr.
        #[arg(long)]
        filter_td: bool,
        /// Abort on the first malformed line.
        #[arg(long)]
        strict: bool,
        file: Option<PathBuf>,
    },
    /// Emit one seeded random r-regular graph in graph6.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random switchings applied to the circulant start [default: 10 n r].
        #[arg(long)]
        mix: Option<usize>,
    },
    /// Complement every graph of the input, one graph6 line each.
    Complement { file: Option<PathBuf> },
    /// Emit the embedded example graphs.
    Fixtures {
        #[arg(long)]
        id: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Adjlist,
}

#[derive(clap::Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, default_value = "f3")]
    objective: ObjectiveKind,
    #[arg(long, default_value_t = tdsearch::search::DEFAULT_K_MAX)]
    kmax: usize,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    time_limit: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, env = "TDSEARCH_WORKERS", default_value_t = 1)]
    workers: usize,
    /// Stop after this many consecutive fruitless shakes at k_max.
    #[arg(long)]
    stagnation: Option<u64>,
    /// Switchings used to randomise each worker's start graph.
    #[arg(long)]
    mix: Option<usize>,
    /// Start graph (graph6 or neighbour list) instead of a random one.
    #[arg(long)]
    start: Option<PathBuf>,
    /// Also write the result report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::new(EXIT_INPUT, format!("{e:#}"))
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Search(args) => search(&args, cli.json),
        Command::Verify { file } => verify(&file, cli.json),
        Command::Scan {
            filter_td,
            strict,
            file,
        } => scan(file.as_deref(), ScanOptions { filter_td, strict }, cli.json),
        Command::Gen { n, r, seed, mix } => generate(n, r, seed, mix),
        Command::Complement { file } => complement(file.as_deref()),
        Command::Fixtures { id, format } => fixtures(id, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("tdsearch: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("cannot read stdin")?;
            Ok(s)
        }
    }
}

/// A graph with whatever its document claims about it.
struct Loaded {
    graph: Graph,
    claimed_r: Option<usize>,
    claimed_t: Option<Vec<u32>>,
}

fn is_comment_or_blank(line: &str) -> bool {
    let l = line.trim();
    l.is_empty() || l.starts_with('#')
}

/// `r=R` from a header comment such as `# graph #1: n=21, r=10`.
fn header_degree(text: &str) -> Option<usize> {
    text.lines()
        .filter(|l| l.trim_start().starts_with('#'))
        .flat_map(|l| l.split([',', ' ', ':']))
        .find_map(|tok| tok.trim().strip_prefix("r=")?.parse().ok())
}

/// Graph6 lines, or a single neighbour-list document when the first
/// content line has a `:`.
fn load_graphs(text: &str) -> anyhow::Result<Vec<Loaded>> {
    let first = text
        .lines()
        .find(|l| !is_comment_or_blank(l))
        .context("input holds no graph")?;
    if first.contains(':') && !first.starts_with(">>graph6<<") {
        let doc = parse_adjacency_document(text)?;
        return Ok(vec![Loaded {
            graph: doc.graph,
            claimed_r: header_degree(text),
            claimed_t: doc.claimed_t,
        }]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !is_comment_or_blank(l))
        .map(|(i, l)| {
            let graph = decode_graph6(l.trim_end()).with_context(|| format!("line {}", i + 1))?;
            Ok(Loaded {
                graph,
                claimed_r: None,
                claimed_t: None,
            })
        })
        .collect()
}

fn load_single(path: &Path) -> anyhow::Result<Loaded> {
    let mut graphs = load_graphs(&read_input(Some(path))?)?;
    anyhow::ensure!(
        graphs.len() == 1,
        "{} holds {} graphs, expected one",
        path.display(),
        graphs.len()
    );
    Ok(graphs.remove(0))
}

fn now() -> String {
    OffsetDateTime::now_utc()
        .format(&Rfc3339)
        .unwrap_or_default()
}

fn search(args: &SearchArgs, json_out: bool) -> Outcome {
    if !(args.time_limit.is_finite() && args.time_limit > 0.0) {
        return Err(Failure::new(
            EXIT_USAGE,
            "--time-limit must be a positive number of seconds",
        ));
    }
    let config = SearchConfig {
        k_max: args.kmax,
        time_limit: Some(Duration::from_secs_f64(args.time_limit)),
        seed: args.seed,
        workers: args.workers,
        stagnation_limit: args.stagnation,
        mixing_steps: args.mix,
        ..SearchConfig::new(args.n, args.r, args.objective)
    };
    if !check_necessary_condition(args.n, args.r) {
        eprintln!(
            "warning: C({r},2) = {} < n - 1 = {}; no {r}-regular TD graph on {} vertices exists",
            args.r * args.r.saturating_sub(1) / 2,
            args.n.saturating_sub(1),
            args.n,
            r = args.r,
        );
    }
    config
        .validate()
        .map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let start = match &args.start {
        Some(p) => Some(load_single(p)?.graph),
        None => None,
    };

    let started = now();
    let report: SearchReport =
        parallel_search_from(&config, start.as_ref()).map_err(|e| match e {
            SearchError::InvalidConfig(m) => Failure::new(EXIT_USAGE, m),
            other => Failure::new(EXIT_INPUT, other.to_string()),
        })?;
    let finished = now();

    let text = result_text(&report);
    if let Some(out) = &args.out {
        fs::write(out, &text).map_err(|e| {
            Failure::new(EXIT_FAILED, format!("cannot write {}: {e}", out.display()))
        })?;
    }
    let manifest = json!({
        "subcommand": "search",
        "config": {
            "n": config.n,
            "r": config.r,
            "objective": config.objective.to_string(),
            "k_max": config.k_max,
            "time_limit_s": args.time_limit,
            "workers": config.workers,
            "stagnation_limit": config.stagnation_limit,
            "mixing_steps": config.mixing_steps,
            "start": args.start,
        },
        "seed": config.seed,
        "worker_seeds": (0..config.workers as u64).map(|w| config.seed.wrapping_add(w)).collect::<Vec<_>>(),
        "timing": {
            "started": started,
            "finished": finished,
            "elapsed_s": report.elapsed.as_secs_f64(),
        },
        "result": {
            "is_td": report.is_td,
            "objective_value": report.best_value.value,
            "graph6": encode_graph6(&report.best_graph).ok(),
            "worker_id": report.worker_id,
            "iterations": report.iterations,
            "shakes": report.shakes,
            "k_final": report.k_final,
        },
        "artifacts": { "out": args.out },
    });
    if json_out {
        println!("{manifest}");
    } else {
        print!("{text}");
        eprintln!("{manifest}");
    }
    Ok(if report.is_td { 0 } else { EXIT_BUDGET })
}

fn result_text(report: &SearchReport) -> String {
    let g = &report.best_graph;
    let mut s = String::new();
    if let Ok(line) = encode_graph6(g) {
        s.push_str(&line);
        s.push('\n');
    }
    let verdict = if report.is_td { "TD" } else { "not TD" };
    s.push_str(&format!(
        "# n={}, r={}, {verdict}, best value {}\n",
        g.order(),
        g.regular_degree().unwrap_or(0),
        report.best_value.value
    ));
    s.push_str(&to_adjacency_list(g, Some(&g.triangle_profile())));
    s
}

fn verification_json(r: &VerificationReport) -> Value {
    json!({
        "n": r.n,
        "edges": r.edges,
        "regular_degree": r.regular_degree,
        "t": r.profile.values(),
        "f1": r.f1,
        "f2": r.f2,
        "f3": r.f3,
        "is_td": r.is_td,
        "mismatches": r.mismatches.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "passed": r.passed(),
    })
}

fn verify(path: &Path, json_out: bool) -> Outcome {
    let loaded = load_single(path)?;
    let report = verify_graph(&loaded.graph, loaded.claimed_r, loaded.claimed_t.as_deref());
    if json_out {
        println!("{}", verification_json(&report));
    } else {
        let regular = match report.regular_degree {
            Some(r) => format!("{r}-regular"),
            None => "not regular".into(),
        };
        println!("n={}, edges={}, {regular}", report.n, report.edges);
        println!("f1={} f2={} f3={:.6}", report.f1, report.f2, report.f3);
        println!(
            "triangle-distinct: {}",
            if report.is_td { "yes" } else { "no" }
        );
        print!("{}", report.adjacency_text(&loaded.graph));
        for m in &report.mismatches {
            println!("mismatch: {m}");
        }
    }
    Ok(if report.passed() { 0 } else { EXIT_FAILED })
}

fn census_text(c: &CensusCounts) -> String {
    let mut s = String::from("order\tgraphs\tTD\tTD %\tregular TD\n");
    for (n, o) in &c.by_order {
        s.push_str(&format!(
            "{n}\t{}\t{}\t{:.3}\t{}\n",
            o.total,
            o.td,
            o.td_percentage(),
            o.regular_td
        ));
    }
    s.push_str(&format!(
        "total\t{}\t{}\t\t{}\n",
        c.total, c.td, c.regular_td
    ));
    if c.skipped > 0 {
        s.push_str(&format!("skipped {} malformed lines\n", c.skipped));
    }
    s
}

fn census_json(c: &CensusCounts) -> Value {
    let orders: Vec<Value> = c
        .by_order
        .iter()
        .map(|(n, o)| json!({ "n": n, "total": o.total, "td": o.td, "regular_td": o.regular_td }))
        .collect();
    json!({
        "total": c.total,
        "td": c.td,
        "regular_td": c.regular_td,
        "skipped": c.skipped,
        "by_order": orders,
    })
}

fn scan(path: Option<&Path>, options: ScanOptions, json_out: bool) -> Outcome {
    let input: Box<dyn BufRead> = match path {
        Some(p) if p != Path::new("-") => {
            let f = fs::File::open(p).map_err(|e| {
                Failure::new(EXIT_INPUT, format!("cannot open {}: {e}", p.display()))
            })?;
            Box::new(BufReader::new(f))
        }
        _ => Box::new(io::stdin().lock()),
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let counts = scan_stream(input, options, Some(&mut out))
        .map_err(|e: ScanError| Failure::new(EXIT_INPUT, e.to_string()))?;
    let summary = if json_out {
        format!("{}\n", census_json(&counts))
    } else {
        census_text(&counts)
    };
    if options.filter_td {
        out.flush()
            .map_err(|e| Failure::new(EXIT_FAILED, e.to_string()))?;
        eprint!("{summary}");
    } else {
        write!(out, "{summary}").map_err(|e| Failure::new(EXIT_FAILED, e.to_string()))?;
    }
    Ok(0)
}

fn generate(n: usize, r: usize, seed: u64, mix: Option<usize>) -> Outcome {
    let mut params = GeneratorParams::new(n, r, seed);
    if let Some(m) = mix {
        params.mixing_steps = m;
    }
    let g = random_regular(&params).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    let line = encode_graph6(&g).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?;
    println!("{line}");
    Ok(0)
}

fn complement(path: Option<&Path>) -> Outcome {
    let graphs = load_graphs(&read_input(path)?)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for l in graphs {
        let line = encode_graph6(&l.graph.complement())
            .map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))?;
        writeln!(out, "{line}").map_err(|e| Failure::new(EXIT_FAILED, e.to_string()))?;
    }
    Ok(0)
}

fn fixtures(id: Option<usize>, format: Format) -> Outcome {
    let list = match id {
        Some(k) => vec![load_fixture(k).map_err(|e| Failure::new(EXIT_USAGE, e.to_string()))?],
        None => all_fixtures(),
    };
    for (i, fx) in list.iter().enumerate() {
        match format {
            Format::G6 => println!("{}", encode_graph6(&fx.graph).expect("fixtures fit graph6")),
            Format::Adjlist => {
                if i > 0 {
                    println!();
                }
                print!("{}", fx.source_text());
            }
        }
    }
    Ok(0)
}
