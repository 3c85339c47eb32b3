use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use log::info;

use cip_core::clique::SeedOrder;
use cip_core::io::{parse_graph, Format};
use cip_core::oracle::{Oracle, OracleBudget};
use cip_core::reduce::StrongTriangleMode;
use cip_core::report::{k_from_fraction, BenchRow, SolveReport};
use cip_core::solver::{solve, SolveConfig, SolveStatus};
use cip_core::Graph;

/// Exit status when the time limit stops a solve before optimality.
const EXIT_TIMEOUT: u8 = 3;
/// Exit status when `verify` finds a disagreement.
const EXIT_MISMATCH: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "cip", version, about = "Exact clique interdiction: minimise the largest clique left after deleting k vertices")]
struct Cli {
    /// Log progress to stderr (repeat for more detail).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one instance and print a report.
    Solve(SolveArgs),
    /// Solve every graph in a directory or manifest for several budgets and
    /// print one CSV row per run.
    Bench(BenchArgs),
    /// Compare the solver with brute force on small instances.
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
struct SolverOptions {
    /// Wall-clock limit per solve, in seconds.
    #[arg(long, default_value_t = 600.0)]
    time_limit: f64,
    /// Run the strong triangle rule during preprocessing.
    #[arg(long)]
    enable_strong_triangle: bool,
    /// How the strong triangle rule bounds common neighbourhoods.
    #[arg(long, default_value = "clique", value_parser = parse_mode)]
    strong_triangle_mode: StrongTriangleMode,
    /// Vertex order for the greedy clique families.
    #[arg(long, default_value = "deg-desc", value_parser = parse_seed_order)]
    seed_order: SeedOrder,
    /// Do not restrict the search with domination pairs.
    #[arg(long)]
    no_domination: bool,
    /// Input format.
    #[arg(long, default_value = "auto", value_parser = parse_format)]
    input_format: Format,
}

impl SolverOptions {
    fn config(&self) -> Result<SolveConfig> {
        if !(self.time_limit.is_finite() && self.time_limit > 0.0) {
            bail!("--time-limit must be a positive number of seconds");
        }
        Ok(SolveConfig {
            time_limit: Some(Duration::from_secs_f64(self.time_limit)),
            strong_triangle: self.enable_strong_triangle.then_some(self.strong_triangle_mode),
            seed_order: self.seed_order,
            use_domination: !self.no_domination,
            ..Default::default()
        })
    }
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("budget").required(true).args(["k", "k_frac"])))]
struct SolveArgs {
    /// Graph file (edge list or DIMACS).
    #[arg(long)]
    graph: PathBuf,
    /// Number of vertices that may be deleted.
    #[arg(long)]
    k: Option<usize>,
    /// Budget as a fraction of the vertex count, rounded up.
    #[arg(long)]
    k_frac: Option<f64>,
    #[command(flatten)]
    solver: SolverOptions,
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["graphs", "manifest"])))]
struct BenchArgs {
    /// Directory whose files are all benchmark graphs.
    #[arg(long)]
    graphs: Option<PathBuf>,
    /// File listing one graph path per line; relative paths are resolved
    /// against the manifest's directory.
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Budget fractions, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.005, 0.01, 0.02, 0.05])]
    k_frac: Vec<f64>,
    /// Graphs solved concurrently.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    solver: SolverOptions,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Check this graph instead of random ones.
    #[arg(long, requires = "k")]
    graph: Option<PathBuf>,
    #[arg(long)]
    k: Option<usize>,
    /// Number of random G(n, p) instances.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest random vertex count.
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value = "auto", value_parser = parse_format)]
    input_format: Format,
}

fn parse_mode(s: &str) -> Result<StrongTriangleMode, String> {
    s.parse()
}

fn parse_seed_order(s: &str) -> Result<SeedOrder, String> {
    s.parse()
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn instance_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn run_solve(args: &SolveArgs) -> Result<ExitCode> {
    let config = args.solver.config()?;
    let g = parse_graph(&args.graph, args.solver.input_format)
        .with_context(|| format!("loading {}", args.graph.display()))?;
    let k = match (args.k, args.k_frac) {
        (Some(k), None) => k,
        (None, Some(f)) if f.is_finite() && f >= 0.0 => k_from_fraction(f, g.n()),
        (None, Some(_)) => bail!("--k-frac must be a nonnegative number"),
        _ => unreachable!("clap enforces exactly one budget flag"),
    };
    info!("{}: n={} m={} k={k}", args.graph.display(), g.n(), g.m());
    let result = solve(&g, k, &config);
    let report = SolveReport::new(instance_name(&args.graph), &g, k, args.k_frac, &result);
    let mut out = io::stdout().lock();
    match args.format {
        ReportFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        ReportFormat::Text => write!(out, "{}", report.to_text())?,
    }
    Ok(match result.status {
        SolveStatus::Optimal => ExitCode::SUCCESS,
        SolveStatus::Timeout => ExitCode::from(EXIT_TIMEOUT),
    })
}

fn bench_inputs(args: &BenchArgs) -> Result<Vec<PathBuf>> {
    if let Some(dir) = &args.graphs {
        let mut files: Vec<PathBuf> = fs::read_dir(dir)
            .with_context(|| format!("reading {}", dir.display()))?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file())
            .collect();
        files.sort();
        return Ok(files);
    }
    let manifest = args.manifest.as_ref().expect("clap requires a source");
    let text = fs::read_to_string(manifest).with_context(|| format!("reading {}", manifest.display()))?;
    let base = manifest.parent().unwrap_or(Path::new("."));
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| base.join(l))
        .collect())
}

fn run_bench(args: &BenchArgs) -> Result<ExitCode> {
    let config = args.solver.config()?;
    if args.k_frac.iter().any(|f| !(f.is_finite() && *f >= 0.0)) {
        bail!("--k-frac values must be nonnegative numbers");
    }
    let inputs = bench_inputs(args)?;
    if args.jobs > 1 && std::env::var_os("RAYON_NUM_THREADS").is_none() {
        // Parallelism comes from the workers; keep each solve on one thread.
        // No thread pool exists yet, so this is seen before first use.
        std::env::set_var("RAYON_NUM_THREADS", "1");
    }
    let slots: Vec<Mutex<Option<Vec<BenchRow>>>> = inputs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(path) = inputs.get(i) else { break };
        let g: Graph = match parse_graph(path, args.solver.input_format) {
            Ok(g) => g,
            Err(e) => {
                eprintln!("skipping {}: {e}", path.display());
                continue;
            }
        };
        let rows = args
            .k_frac
            .iter()
            .map(|&f| {
                let k = k_from_fraction(f, g.n());
                let result = solve(&g, k, &config);
                info!("{} k={k}: theta={} ({:?})", path.display(), result.theta, result.status);
                BenchRow::new(instance_name(path), &g, k, f, &result)
            })
            .collect();
        *slots[i].lock().unwrap() = Some(rows);
    };
    std::thread::scope(|scope| {
        for _ in 0..args.jobs.max(1) {
            scope.spawn(worker);
        }
    });

    let mut csv = csv::Writer::from_writer(io::stdout().lock());
    let mut any_timeout = false;
    for slot in slots {
        for row in slot.into_inner().unwrap().into_iter().flatten() {
            any_timeout |= row.status != "optimal";
            csv.serialize(row)?;
        }
    }
    csv.flush()?;
    Ok(if any_timeout {
        ExitCode::from(EXIT_TIMEOUT)
    } else {
        ExitCode::SUCCESS
    })
}

fn verify_one(oracle: &Oracle, g: &Graph, k: usize, label: &str) -> Result<bool> {
    let expected = if k >= g.n() { 0 } else { oracle.theta(g, k)?.0 };
    let result = solve(g, k, &SolveConfig::default());
    let (rest, _) = g.remove_vertices(&result.interdiction_set);
    let achieved = oracle.omega(&rest)?;
    let ok = result.status == SolveStatus::Optimal
        && result.theta == expected
        && achieved == expected
        && result.interdiction_set.len() <= k;
    if ok {
        println!("ok       {label}: theta={expected}");
    } else {
        println!(
            "MISMATCH {label}: oracle theta={expected}, solver theta={} set={:?} leaving omega={achieved}",
            result.theta, result.interdiction_set
        );
    }
    Ok(ok)
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode> {
    let oracle = Oracle::new(OracleBudget {
        max_k: 16,
        ..Default::default()
    });
    let mut all_ok = true;
    if let Some(path) = &args.graph {
        let g = parse_graph(path, args.input_format).with_context(|| format!("loading {}", path.display()))?;
        let k = args.k.expect("clap requires --k with --graph");
        all_ok = verify_one(&oracle, &g, k, &instance_name(path))?;
    } else {
        if args.max_n < 1 || args.max_n > oracle.budget.max_theta_vertices {
            bail!("--max-n must lie in 1..={}", oracle.budget.max_theta_vertices);
        }
        // SplitMix64: enough randomness for spot checks, no extra dependency.
        let mut state = args.seed;
        let mut next = move || {
            state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
            let mut z = state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
            z ^ (z >> 31)
        };
        for i in 0..args.count {
            let n = 1 + (next() % args.max_n as u64) as usize;
            let p = [0.2, 0.35, 0.5, 0.65, 0.8][i % 5];
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if ((next() >> 11) as f64 / (1u64 << 53) as f64) < p {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, edges)?;
            let k = (next() % 4) as usize;
            all_ok &= verify_one(&oracle, &g, k, &format!("#{i} n={n} p={p} k={k}"))?;
        }
    }
    Ok(if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).parse_default_env().init();
    let outcome = match &cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Bench(args) => run_bench(args),
        Command::Verify(args) => run_verify(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
