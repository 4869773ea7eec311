//! `lssg`: generate graphs, run the local spanner, decompose, analyze and
//! drive the indistinguishability harness from the command line.
//!
//! Exit codes: 0 on success, 1 on domain and usage errors, 2 when a request
//! is refused because an exhaustive computation is capped or a parameter
//! overflows.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lssg_core::adversary::{self, AlwaysYes, LocalAlgorithm, LocalKruskal, ProbeCappedKruskal, RandomProbeStrategy};
use lssg_core::constructions::{self, BridgeArtifact, Family};
use lssg_core::graph::{self, read_ilg, write_ilg};
use lssg_core::oracle::{probe_budget, OracleHandle};
use lssg_core::reference::{decompose_with, CutMethod, CutStrategy, DecomposeOptions};
use lssg_core::spanner::{compute_k, edge_in_spanner, span_all_with, TheoreticalK};
use lssg_core::{EdgeKey, Error, Execution, Graph, Result, Vertex};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "lssg", version, about = "Local sparse spanning graphs: spanner, decomposition, constructions, adversary")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph family and write it as .ilg.
    Gen(GenArgs),
    /// Replacement product, edge subdivision or bridge join of a graph.
    Transform(TransformArgs),
    /// Run the local spanner on every edge, or on one.
    Span(SpanArgs),
    /// Decide a single edge.
    Edge(EdgeArgs),
    /// Recursive sparse-cut decomposition.
    Decompose(DecomposeArgs),
    /// Structural measurements.
    Analyze(AnalyzeArgs),
    /// Record, embed and replay an algorithm on a bridged target.
    Adversary(AdversaryArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyName {
    Path,
    Cycle,
    Grid,
    Torus,
    Complete,
    Bipartite,
    Petersen,
    Heawood,
    RandomRegular,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Vertex count (path, cycle, complete, random-regular).
    #[arg(long)]
    n: Option<usize>,
    /// Rows (grid, torus) or first side (bipartite).
    #[arg(long)]
    rows: Option<usize>,
    /// Columns (grid, torus) or second side (bipartite).
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long, default_value_t = 3)]
    degree: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    min_girth: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
#[group(id = "op", required = true, multiple = false)]
struct TransformOp {
    #[arg(long, group = "op")]
    replacement_product: bool,
    #[arg(long, num_args = 2, value_names = ["U", "V"], group = "op")]
    subdivide: Option<Vec<Vertex>>,
    /// Edges `a b` and `c d` subdivided in the first and second copy.
    #[arg(long, num_args = 4, value_names = ["A", "B", "C", "D"], group = "op")]
    bridge_join: Option<Vec<Vertex>>,
}

#[derive(Args, Debug)]
struct TransformArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    op: TransformOp,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct RadiusArgs {
    /// Ball radius.
    #[arg(long, conflicts_with = "epsilon")]
    k: Option<usize>,
    /// Derive k from ε and C; requires --accept-theoretical-k.
    #[arg(long, requires = "c")]
    epsilon: Option<f64>,
    #[arg(long = "C", id = "c")]
    c: Option<f64>,
    #[arg(long)]
    accept_theoretical_k: bool,
}

#[derive(Args, Debug)]
struct SpanArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[command(flatten)]
    radius: RadiusArgs,
    /// Decide every edge (the default).
    #[arg(long, conflicts_with = "edge")]
    all: bool,
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    edge: Option<Vec<Vertex>>,
    /// Write the kept edges, one `u v` per line.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    stats_out: Option<PathBuf>,
    /// Worker threads; 1 runs sequentially.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct EdgeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
    edge: Vec<Vertex>,
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    k_stop: usize,
    #[arg(long = "C", default_value_t = 1.0)]
    c: f64,
    /// Refuse nodes too large for exhaustive cut search.
    #[arg(long)]
    strict: bool,
    /// Enforce the removal budget (input asserted non-expanding).
    #[arg(long)]
    claim_non_expanding: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    girth: bool,
    /// Exact edge expansion (exhaustive, capped).
    #[arg(long)]
    expansion: bool,
    #[arg(long)]
    bridges: bool,
    #[arg(long)]
    diameter: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AlgName {
    LocalSpanner,
    AlwaysYes,
    RandomProbes,
}

#[derive(Args, Debug)]
struct AdversaryArgs {
    #[arg(long)]
    target: PathBuf,
    #[arg(long, num_args = 2, value_names = ["U", "V"], required = true)]
    bridge: Vec<Vertex>,
    #[arg(long, value_enum, default_value = "local-spanner")]
    alg: AlgName,
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Probe cap for local-spanner; probe count for random-probes.
    #[arg(long)]
    max_probes: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge of the target as given in the file.
    #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
    edge: Vec<Vertex>,
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_refusal() { 2 } else { 1 })
        }
    }
}

fn run(command: Command) -> Result<()> {
    let started = Instant::now();
    let mut report = match command {
        Command::Gen(a) => cmd_gen(a)?,
        Command::Transform(a) => cmd_transform(a)?,
        Command::Span(a) => cmd_span(a)?,
        Command::Edge(a) => cmd_edge(a)?,
        Command::Decompose(a) => cmd_decompose(a)?,
        Command::Analyze(a) => cmd_analyze(a)?,
        Command::Adversary(a) => cmd_adversary(a)?,
    };
    report.push("duration_ms", started.elapsed().as_millis());
    let text = report.to_string();
    match report.destination.take() {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn edge_arg(pair: &[Vertex]) -> Result<EdgeKey> {
    EdgeKey::new(pair[0], pair[1])
}

fn load(path: &Path, report: &mut Report) -> Result<Graph> {
    let g = read_ilg(path)?;
    report.push("input", path.display());
    report.digest(&g);
    Ok(g)
}

fn cmd_gen(a: GenArgs) -> Result<Report> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Error::Domain(format!("--{flag} is required for this family")));
    let family = match a.family {
        FamilyName::Path => Family::Path(need(a.n, "n")?),
        FamilyName::Cycle => Family::Cycle(need(a.n, "n")?),
        FamilyName::Grid => Family::Grid(need(a.rows, "rows")?, need(a.cols, "cols")?),
        FamilyName::Torus => Family::Torus(need(a.rows, "rows")?, need(a.cols, "cols")?),
        FamilyName::Complete => Family::Complete(need(a.n, "n")?),
        FamilyName::Bipartite => Family::CompleteBipartite(need(a.rows, "rows")?, need(a.cols, "cols")?),
        FamilyName::Petersen => Family::Petersen,
        FamilyName::Heawood => Family::Heawood,
        FamilyName::RandomRegular => Family::RandomRegular {
            n: need(a.n, "n")?,
            d: a.degree,
            seed: a.seed,
            min_girth: a.min_girth,
        },
    };
    let g = constructions::generate(&family)?;
    write_ilg(&g, &a.out)?;
    let mut report = Report::new("gen");
    report.push("family", &family);
    report.digest(&g);
    report.push("output", a.out.display());
    Ok(report)
}

fn cmd_transform(a: TransformArgs) -> Result<Report> {
    let mut report = Report::new("transform");
    let g = load(&a.input, &mut report)?;
    let out = if a.op.replacement_product {
        report.push("operation", "replacement-product");
        constructions::replacement_product(&g)?.0
    } else if let Some(e) = &a.op.subdivide {
        let e = edge_arg(e)?;
        report.push("operation", format!("subdivide {e}"));
        constructions::subdivide(&g, e)?
    } else {
        let v = a.op.bridge_join.as_deref().expect("clap enforces one operation");
        let (e1, e2) = (edge_arg(&v[..2])?, edge_arg(&v[2..])?);
        report.push("operation", format!("bridge-join {e1} {e2}"));
        let art = constructions::bridge_join(&g, e1, e2)?;
        report.push("bridge", art.bridge);
        art.graph
    };
    write_ilg(&out, &a.out)?;
    report.push("output_n", out.n());
    report.push("output_d", out.d_max());
    report.push("output_edges", out.edge_count());
    report.push("output", a.out.display());
    Ok(report)
}

fn resolve_k(r: &RadiusArgs) -> Result<usize> {
    match (r.k, r.epsilon, r.c) {
        (Some(k), _, _) => Ok(k),
        (None, Some(eps), Some(c)) => {
            let k = compute_k(eps, c)?;
            if !r.accept_theoretical_k {
                return Err(Error::Domain(format!(
                    "theoretical k for ε = {eps}, C = {c} is {k}; pass --accept-theoretical-k to use it or give --k"
                )));
            }
            match k {
                TheoreticalK::Exact(k) => usize::try_from(k).map_err(|_| Error::Overflow(format!("k = {k}"))),
                TheoreticalK::Overflow { .. } => Err(Error::Overflow(format!("theoretical k = {k} is unrepresentable"))),
            }
        }
        _ => Err(Error::Domain("give --k, or --epsilon with --C".into())),
    }
}

fn execution(jobs: Option<usize>) -> Result<(Execution, Option<rayon::ThreadPool>)> {
    match jobs {
        Some(0) => Err(Error::Domain("--jobs must be at least 1".into())),
        Some(1) => Ok((Execution::Sequential, None)),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok((Execution::Parallel, Some(pool)))
        }
        None => Ok((Execution::default(), None)),
    }
}

fn cmd_span(a: SpanArgs) -> Result<Report> {
    let mut report = Report::new("span");
    let g = load(&a.input, &mut report)?;
    let k = resolve_k(&a.radius)?;
    report.push("k", k);
    report.push("probe_budget", budget_text(g.d_max(), k));
    if let Some(e) = &a.edge {
        let decision = edge_in_spanner(&mut OracleHandle::new(&g), e[0], e[1], k)?;
        report.decision(&decision);
        return Ok(report);
    }
    let (exec, pool) = execution(a.jobs)?;
    let result = match pool {
        Some(pool) => pool.install(|| span_all_with(&g, k, exec))?,
        None => span_all_with(&g, k, exec)?,
    };
    report.push("jobs", a.jobs.map_or("default".to_string(), |j| j.to_string()));
    report.push("kept", result.kept.len());
    report.push("removed", result.decisions.len() - result.kept.len());
    report.push("probes_max", result.stats.max);
    report.push("probes_mean", format!("{:.3}", result.stats.mean));
    report.push("probes_total", result.stats.total);
    let spanning = g.with_edges(&result.kept);
    report.push("connected", spanning.is_connected());
    let mut stats = report.clone();
    stats.destination = None;
    if let Some(path) = &a.stats_out {
        std::fs::write(path, stats.to_string())?;
    }
    let edges: String = result.kept.iter().map(|e| format!("{} {}\n", e.lo(), e.hi())).collect();
    match &a.out {
        Some(path) => {
            std::fs::write(path, edges)?;
            report.push("output", path.display());
        }
        None => {
            for d in &result.decisions {
                report.line(format!("{} {} {} {}", d.edge.lo(), d.edge.hi(), d.answer, d.probes_used));
            }
        }
    }
    Ok(report)
}

fn budget_text(d: usize, k: usize) -> String {
    probe_budget(d, k).map_or_else(|_| format!("{d}^{}", k as u128 + 1), |b| b.to_string())
}

fn cmd_edge(a: EdgeArgs) -> Result<Report> {
    let mut report = Report::new("edge");
    let g = load(&a.input, &mut report)?;
    report.push("k", a.k);
    report.push("probe_budget", budget_text(g.d_max(), a.k));
    let decision = edge_in_spanner(&mut OracleHandle::new(&g), a.edge[0], a.edge[1], a.k)?;
    report.decision(&decision);
    Ok(report)
}

fn cmd_decompose(a: DecomposeArgs) -> Result<Report> {
    let mut report = Report::new("decompose");
    let g = load(&a.input, &mut report)?;
    let strategy = if a.strict {
        CutStrategy::Exhaustive { cap: graph::EXPANSION_CAP }
    } else {
        CutStrategy::default()
    };
    let opts = DecomposeOptions { strategy, claim_non_expanding: a.claim_non_expanding, exec: Execution::default() };
    let dec = decompose_with(&g, a.k_stop, a.c, &opts)?;
    dec.verify(&g)?;
    report.push("k_stop", a.k_stop);
    report.push("C", a.c);
    report.push("removed", dec.removed.len());
    report.push("components", dec.components.len());
    report.push("largest_component", dec.components.iter().map(Vec::len).max().unwrap_or(0));
    report.push("budget", dec.budget.map_or("n/a".to_string(), |b| format!("{b:.6}")));
    report.push("sweep_cuts", dec.cuts.iter().filter(|c| c.method == CutMethod::Sweep).count());
    report.push("exhaustive_cuts", dec.cuts.iter().filter(|c| c.method == CutMethod::Exhaustive).count());
    match &a.out {
        Some(path) => {
            std::fs::write(path, dec.to_string() + "\n")?;
            report.push("output", path.display());
        }
        None => report.line(dec.to_string()),
    }
    Ok(report)
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<Report> {
    let mut report = Report::new("analyze");
    let g = load(&a.input, &mut report)?;
    report.push("connected", g.is_connected());
    report.push("components", g.components().len());
    report.push("min_degree", g.min_degree());
    report.push("max_degree", g.max_degree());
    if a.girth {
        report.push("girth", graph::girth(&g));
    }
    if a.diameter {
        report.push("diameter", g.diameter().map_or("inf".to_string(), |d| d.to_string()));
    }
    if a.bridges {
        let bridges = g.bridges();
        report.push("bridges", bridges.len());
        report.push("bridge_edges", bridges.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    }
    if a.expansion {
        let x = graph::expansion(&g)?;
        report.push("expansion", x.ratio);
        report.push("expansion_boundary", x.boundary);
        report.push(
            "expansion_cut",
            x.cut.members().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
        );
    }
    Ok(report)
}

fn cmd_adversary(a: AdversaryArgs) -> Result<Report> {
    let mut report = Report::new("adversary");
    let hidden = load(&a.target, &mut report)?;
    let (target, relabel) = BridgeArtifact::from_bridged(&hidden, a.bridge[0], a.bridge[1])?;
    let alg: Box<dyn LocalAlgorithm> = match (a.alg, a.max_probes) {
        (AlgName::LocalSpanner, None) => Box::new(LocalKruskal { k: a.k }),
        (AlgName::LocalSpanner, Some(max_probes)) => Box::new(ProbeCappedKruskal { k: a.k, max_probes }),
        (AlgName::AlwaysYes, _) => Box::new(AlwaysYes),
        (AlgName::RandomProbes, p) => Box::new(RandomProbeStrategy { seed: a.seed, probes: p.unwrap_or(2) }),
    };
    let edge = hidden.edge_key(a.edge[0], a.edge[1])?;
    let run = adversary::run_pipeline(alg.as_ref(), &hidden, &target, edge)?;
    report.push("algorithm", alg.name());
    report.push("bridge", format!("({},{})", a.bridge[0], a.bridge[1]));
    report.push("edge", edge);
    report.push("answer", run.answer);
    report.push("probes", run.forest.transcript.len());
    report.push("tree_edges", run.forest.tree.len());
    report.push("target_girth", target.girth);
    report.push("replay_ok", run.embedding.replay_ok);
    report.push("bridge_hit", run.embedding.bridge_hit);
    report.push("edge_is_bridge", run.edge_is_bridge);
    report.push("verdict", if run.indistinguishable() { "indistinguishable" } else { "distinguished" });
    report.line("relabel:".to_string());
    for (old, new) in relabel.iter().enumerate() {
        if old as Vertex + 1 != *new {
            report.line(format!("{} {}", old + 1, new));
        }
    }
    report.line("transcript:".to_string());
    report.line(run.forest.transcript.to_string());
    report.line(run.embedding.to_string());
    report.destination = a.report;
    Ok(report)
}
