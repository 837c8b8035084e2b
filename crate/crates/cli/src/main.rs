//! Command-line driver: graph generation, gadget certification, the staged
//! construction, distance measurement, lemma verification, parameter sweeps,
//! and the scaling fit.
//!
//! Exit codes: 0 success, 2 argument/parameter errors, 3 capacity errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use trifree_cli::fit::{fit_points, fit_scaling, read_records};
use trifree_cli::sweep::{run_sweep, write_outputs, SweepConfig};

use trifree_core::construction::{construct, derive_params, DEFAULT_C};
use trifree_core::diagnostics::{
    atypical_edges, check_basics, check_g1nice, classify_partition, count_disjoint_bad_stars,
    lower_regular_pair, small_classes, ClauseReport, PropertyReport, RegularityMode, Relation,
};
use trifree_core::edgelist::{read_edge_list_file, write_edge_list_file};
use trifree_core::error::Error as CoreError;
use trifree_core::gadget::gadget_for;
use trifree_core::graph::Graph;
use trifree_core::partite::{exact_cap, max_rcut_exact, rcut_local_search};
use trifree_core::random::{sample_gnp, sample_gnpp, GnppLayout, Seed};
use trifree_core::vertex_set::VertexSet;

#[derive(Parser)]
#[command(
    name = "trifree",
    version,
    about = "Triangle-free subgraph construction experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(n,p) (or the two-block model with --pprime) to an edge list.
    Gen(GenArgs),
    /// Build and certify the triangle-free non-r-partite gadget.
    Gadget(GadgetArgs),
    /// Run the staged construction and write all stage graphs plus a trace.
    Construct(ConstructArgs),
    /// Measure distance to r-partite for a graph file.
    Distance(DistanceArgs),
    /// Run a lemma checker and emit a JSON property report.
    Verify(VerifyArgs),
    /// Run a parameter sweep from a TOML config.
    Sweep(SweepArgs),
    /// Fit the distance scaling law from a sweep CSV.
    Fit(FitArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    /// Sparsification factor for the two-block model; omit for plain G(n,p).
    #[arg(long)]
    pprime: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long)]
    r: usize,
    /// Optional edge-list output path for the gadget graph.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = 0.2)]
    gamma: f64,
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, default_value_t = DEFAULT_C)]
    c: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Prefix for the five edge lists and the JSON trace summary.
    #[arg(long)]
    out_prefix: String,
}

#[derive(Args)]
struct DistanceArgs {
    /// Edge-list file of the graph to measure.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 2)]
    r: usize,
    /// Force the exact solver (errors above its size cap).
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Force the local-search heuristic.
    #[arg(long)]
    heuristic: bool,
    #[arg(long, default_value_t = 32)]
    restarts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which checker to run.
    #[arg(long)]
    lemma: String,
    /// Primary graph file (the graph the lemma speaks about).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Ambient random graph file, for checkers comparing H against Gamma.
    #[arg(long)]
    gamma_graph: Option<PathBuf>,
    /// Checker parameters as a JSON object; see the README for schemas.
    #[arg(long, default_value = "{}")]
    params: String,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    config: PathBuf,
}

#[derive(Args)]
struct FitArgs {
    /// Sweep CSV produced by `sweep`.
    #[arg(long = "in")]
    input: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<CoreError>() {
        Some(CoreError::Capacity(_)) => 3,
        Some(CoreError::InvalidArgument(_))
        | Some(CoreError::InvalidParameter(_))
        | Some(CoreError::Parse(_)) => 2,
        Some(CoreError::Io(_)) => 1,
        None => 2, // config/JSON/CSV problems are argument errors
    }
}

fn dispatch(command: Command) -> anyhow::Result<()> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Gadget(args) => cmd_gadget(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Distance(args) => cmd_distance(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Fit(args) => cmd_fit(args),
    }
}

fn cmd_gen(args: GenArgs) -> anyhow::Result<()> {
    let seed = Seed::new(args.seed);
    let graph = match args.pprime {
        Some(pp) => sample_gnpp(args.n, args.p, pp, seed)?.0,
        None => sample_gnp(args.n, args.p, seed)?,
    };
    write_edge_list_file(&graph, &args.out)?;
    println!(
        "{}",
        serde_json::json!({ "n": graph.n(), "m": graph.m(), "out": args.out })
    );
    Ok(())
}

fn cmd_gadget(args: GadgetArgs) -> anyhow::Result<()> {
    let gadget = gadget_for(args.r)?;
    if let Some(out) = &args.out {
        write_edge_list_file(&gadget.graph, out)?;
    }
    println!(
        "{}",
        serde_json::json!({
            "r": gadget.r,
            "ell": gadget.ell,
            "chi": gadget.chi,
            "triangle_free": gadget.graph.is_triangle_free(),
            "edges": gadget.graph.m(),
        })
    );
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> anyhow::Result<()> {
    let seed = Seed::new(args.seed);
    let params = derive_params(args.gamma, args.r, args.n, args.p, args.c, seed)?;
    let gamma_graph = sample_gnp(args.n, args.p, seed)?;
    let trace = construct(&gamma_graph, &params)?;

    let prefix = &args.out_prefix;
    write_edge_list_file(&gamma_graph, format!("{prefix}_gamma.edges"))?;
    write_edge_list_file(&trace.g1, format!("{prefix}_g1.edges"))?;
    write_edge_list_file(&trace.g2, format!("{prefix}_g2.edges"))?;
    write_edge_list_file(&trace.g3, format!("{prefix}_g3.edges"))?;
    write_edge_list_file(&trace.h, format!("{prefix}_h.edges"))?;

    let summary = serde_json::json!({
        "n": args.n,
        "p": args.p,
        "gamma": args.gamma,
        "r": args.r,
        "c": args.c,
        "seed": args.seed,
        "ell": params.gadget.ell,
        "k_const": params.k_const,
        "epsilon": params.epsilon,
        "p_prime": params.p_prime,
        "hypothesis_ok": params.hypothesis_ok,
        "m": {
            "gamma": gamma_graph.m(),
            "g1": trace.g1.m(),
            "g2": trace.g2.m(),
            "g3": trace.g3.m(),
            "h": trace.h.m(),
        },
        "deleted": {
            "a_internal": trace.deleted_a_internal,
            "sparsify": trace.deleted_sparsify,
            "blowup": trace.deleted_blowup,
            "degree": trace.deleted_degree,
            "triangle": trace.deleted_triangle,
        },
        "min_degree": trace.min_degree_h(),
        "min_degree_bound": (0.5 - args.gamma) * args.p * args.n as f64,
        "triangles": trace.triangles_h(),
    });
    let trace_path = format!("{prefix}_trace.json");
    std::fs::write(&trace_path, serde_json::to_string_pretty(&summary)?)?;
    println!("{summary}");
    Ok(())
}

fn cmd_distance(args: DistanceArgs) -> anyhow::Result<()> {
    let graph = read_edge_list_file(&args.graph)?;
    let result = if args.exact {
        max_rcut_exact(&graph, args.r)?
    } else if args.heuristic {
        rcut_local_search(&graph, args.r, args.restarts, Seed::new(args.seed))?
    } else if graph.n() <= 24.min(exact_cap(args.r)) {
        max_rcut_exact(&graph, args.r)?
    } else {
        rcut_local_search(&graph, args.r, args.restarts, Seed::new(args.seed))?
    };
    println!(
        "{}",
        serde_json::json!({
            "cut": result.cut_value,
            "distance": result.distance,
            "exact": result.exact,
            "coloring": result.coloring.color,
        })
    );
    Ok(())
}

// ---- verify ----------------------------------------------------------

fn range_set(n: usize, range: &[usize; 2]) -> anyhow::Result<VertexSet> {
    if range[1] > n || range[0] > range[1] {
        anyhow::bail!(CoreError::invalid(format!(
            "range {range:?} outside 0..{n}"
        )));
    }
    Ok(VertexSet::from_range(n, range[0]..range[1]))
}

#[derive(serde::Deserialize)]
struct G1niceParams {
    #[serde(default = "default_gamma_param")]
    gamma: f64,
    #[serde(default = "default_r_param")]
    r: usize,
    p: f64,
    #[serde(default = "default_c_param")]
    c: f64,
    #[serde(default = "default_eps_param")]
    epsilon: f64,
}

fn default_gamma_param() -> f64 {
    0.2
}
fn default_r_param() -> usize {
    2
}
fn default_c_param() -> f64 {
    DEFAULT_C
}
fn default_eps_param() -> f64 {
    0.2
}

#[derive(serde::Deserialize)]
struct BasicsParams {
    p: f64,
    #[serde(default = "default_eps_param")]
    epsilon: f64,
    #[serde(default = "default_m_param")]
    m: usize,
}

fn default_m_param() -> usize {
    10
}

#[derive(serde::Deserialize)]
struct AtypicalParams {
    p: f64,
    #[serde(default = "default_eps_param")]
    epsilon: f64,
    a: Option<[usize; 2]>,
    b: Option<[usize; 2]>,
}

#[derive(serde::Deserialize)]
struct StarsParams {
    p: f64,
    q: f64,
    #[serde(default = "default_eps_param")]
    epsilon: f64,
    s: usize,
    a: Option<[usize; 2]>,
}

#[derive(serde::Deserialize)]
struct SlicingParams {
    p: f64,
    d: f64,
    #[serde(default = "default_eps_param")]
    epsilon: f64,
    x: [usize; 2],
    y: [usize; 2],
    #[serde(default)]
    sampled: bool,
}

#[derive(serde::Deserialize)]
struct ClassifyParams {
    p: f64,
    d: f64,
    #[serde(default = "default_eps_param")]
    epsilon: f64,
    /// Half-open vertex ranges; the first is the exceptional part.
    parts: Vec<[usize; 2]>,
    #[serde(default)]
    reduced_edges: Option<Vec<(usize, usize)>>,
}

fn cmd_verify(args: VerifyArgs) -> anyhow::Result<()> {
    let seed = Seed::new(args.seed);
    let need_graph = || -> anyhow::Result<Graph> {
        let path = args
            .graph
            .as_ref()
            .ok_or_else(|| CoreError::invalid("--graph is required for this lemma"))?;
        Ok(read_edge_list_file(path)?)
    };

    let report: PropertyReport = match args.lemma.as_str() {
        "g1nice" => {
            let p: G1niceParams = serde_json::from_str(&args.params)?;
            let g = need_graph()?;
            let layout = GnppLayout::new(g.n());
            let params = derive_params(p.gamma, p.r, g.n(), p.p, p.c, seed)?;
            check_g1nice(&g, &layout, &params, p.epsilon, args.samples, seed)?
        }
        "basics" => {
            let p: BasicsParams = serde_json::from_str(&args.params)?;
            let g = need_graph()?;
            check_basics(&g, p.p, p.epsilon, p.m, None, args.samples, seed)?
        }
        "atypical" => {
            let p: AtypicalParams = serde_json::from_str(&args.params)?;
            let g = need_graph()?;
            let half = g.n() / 2;
            let a = range_set(g.n(), &p.a.unwrap_or([0, half]))?;
            let b = range_set(g.n(), &p.b.unwrap_or([half, g.n()]))?;
            let res = atypical_edges(&g, &a, &b, p.epsilon, p.p)?;
            PropertyReport {
                lemma: "atypical".into(),
                clauses: vec![ClauseReport::new(
                    "atypical_edge_count",
                    Relation::Le,
                    res.count as f64,
                    res.bound,
                    g.m(),
                    usize::from(res.count as f64 > res.bound),
                    format!("M inferred as {}", res.m_param),
                )],
                seed: args.seed,
            }
        }
        "stars" => {
            let p: StarsParams = serde_json::from_str(&args.params)?;
            let h = need_graph()?;
            let gamma_path = args
                .gamma_graph
                .as_ref()
                .ok_or_else(|| CoreError::invalid("--gamma-graph is required for stars"))?;
            let gamma = read_edge_list_file(gamma_path)?;
            let a = range_set(gamma.n(), &p.a.unwrap_or([gamma.n() / 2, gamma.n()]))?;
            let packing = count_disjoint_bad_stars(&gamma, &h, &a, p.q, p.epsilon, p.s, p.p)?;
            PropertyReport {
                lemma: "stars".into(),
                clauses: vec![ClauseReport::new(
                    "disjoint_bad_star_packing",
                    Relation::Lt,
                    packing.count() as f64,
                    packing.bound,
                    1,
                    usize::from(!packing.below_bound()),
                    format!("hypothesis_ok = {}", packing.hypothesis_ok),
                )],
                seed: args.seed,
            }
        }
        "slicing" => {
            let p: SlicingParams = serde_json::from_str(&args.params)?;
            let g = need_graph()?;
            let x = range_set(g.n(), &p.x)?;
            let y = range_set(g.n(), &p.y)?;
            let mode = if p.sampled {
                RegularityMode::Sampled {
                    samples: args.samples,
                    seed,
                }
            } else {
                RegularityMode::Exhaustive
            };
            let regular = lower_regular_pair(&g, &x, &y, p.epsilon, p.d, p.p, mode)?;
            PropertyReport {
                lemma: "slicing".into(),
                clauses: vec![ClauseReport::new(
                    "lower_regular",
                    Relation::Gt,
                    if regular { 1.0 } else { 0.0 },
                    0.5,
                    1,
                    usize::from(!regular),
                    format!(
                        "mode = {}",
                        if p.sampled { "sampled" } else { "exhaustive" }
                    ),
                )],
                seed: args.seed,
            }
        }
        "classify" => {
            let p: ClassifyParams = serde_json::from_str(&args.params)?;
            let g = need_graph()?;
            let parts: Vec<VertexSet> = p
                .parts
                .iter()
                .map(|r| range_set(g.n(), r))
                .collect::<anyhow::Result<_>>()?;
            let cls =
                classify_partition(&g, &parts, p.d, p.epsilon, p.p, p.reduced_edges.as_deref())?;
            let covered: usize =
                cls.w.card() + cls.classes.values().map(|s| s.card()).sum::<usize>();
            let offending = small_classes(&cls);
            PropertyReport {
                lemma: "classify".into(),
                clauses: vec![
                    ClauseReport::new(
                        "partition_covers",
                        Relation::Le,
                        (g.n() as f64 - covered as f64).abs(),
                        0.0,
                        g.n(),
                        usize::from(covered != g.n()),
                        format!("|W| = {}, classes = {}", cls.w.card(), cls.classes.len()),
                    ),
                    ClauseReport::new(
                        "small_classes_empty",
                        Relation::Le,
                        offending.len() as f64,
                        0.0,
                        cls.classes.len(),
                        offending.len(),
                        format!("t = {}", cls.t),
                    ),
                ],
                seed: args.seed,
            }
        }
        other => anyhow::bail!(CoreError::invalid(format!(
            "unknown lemma '{other}' (expected g1nice|basics|atypical|stars|slicing|classify)"
        ))),
    };

    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn cmd_sweep(args: SweepArgs) -> anyhow::Result<()> {
    let config = SweepConfig::from_file(&args.config)?;
    let records = run_sweep(&config);
    write_outputs(&config, &records)?;
    let failures = records.iter().filter(|r| !r.ok).count();
    println!(
        "{}",
        serde_json::json!({
            "records": records.len(),
            "failures": failures,
            "out": config.run.out,
        })
    );
    Ok(())
}

fn cmd_fit(args: FitArgs) -> anyhow::Result<()> {
    let records = read_records(&args.input)?;
    let points = fit_points(&records);
    let fit =
        fit_scaling(&points).map_err(|e| anyhow::anyhow!(CoreError::invalid(e.to_string())))?;
    println!("{}", serde_json::to_string_pretty(&fit)?);
    Ok(())
}
