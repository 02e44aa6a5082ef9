use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use symbreak_core::autgroup::{enumerate_automorphisms, DEFAULT_ENUM_CAP};
use symbreak_core::breaking::{
    break_ball_actors, fixroot_pattern, full_pipeline, greedy_half_break, minimal_k,
    sequential_pair_break, verify_root_signature, BreakOutcome,
};
use symbreak_core::coloring::{Coloring, WHITE};
use symbreak_core::distnum::{distinguishing_number, is_distinguishing, DistnumOutcome};
use symbreak_core::error::Error as CoreError;
use symbreak_core::generators::Family;
use symbreak_core::graph::{
    ball_bound_radii_from_sizes, bfs_decompose, sphere_bound_radii_from_sizes, RootedGraph,
};
use symbreak_core::motion::{check_motion_bound, expected_survivors, find_distinguishing_coloring};

/// Exit codes: 0 success / distinguishing, 1 verified not distinguishing,
/// 2 usage error, 3 guard exceeded.
const EXIT_OK: u8 = 0;
const EXIT_NOT_DISTINGUISHING: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "symbreak",
    about = "Graph symmetry toolkit: generate structured graphs, analyze their \
             automorphism groups, and construct and verify symmetry-breaking colorings",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a ball truncation of a graph family as graph JSON
    Gen(GenArgs),
    /// Report counts, sphere profile, group order, motion, cycle norm and
    /// bound verdicts for a graph file
    Analyze(AnalyzeArgs),
    /// Produce a coloring with one of the breaking methods
    Color(ColorArgs),
    /// Check whether a coloring is distinguishing (exit 0 iff it is)
    Verify(VerifyArgs),
    /// Exact distinguishing number by exhaustive search (examines at most
    /// 10^7 labelings per label count; exceeding the guard exits with 3)
    Distnum(DistnumArgs),
    /// Per-radius growth table with bound flags
    Growth(GrowthArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family: path | tree:D | grid | stretched:EPS
    #[arg(long)]
    family: String,
    #[arg(long)]
    radius: usize,
    /// Output file for the graph JSON; stretched trees also get a
    /// `.plan.json` sidecar with the subdivision-length table
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Center for the sphere profile (defaults to the stored root, else the
    /// lexicographically least vertex)
    #[arg(long)]
    root: Option<String>,
    /// Enumeration cap; past it the group report is a lower bound
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    cap: u64,
    /// Epsilon for the sphere/ball bound verdicts
    #[arg(long, default_value_t = 1.0)]
    eps: f64,
    /// Embed the full element list in the report
    #[arg(long)]
    emit_elements: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Fixroot,
    Break,
    Pipeline,
    Greedy,
    Pairs,
    Random,
}

#[derive(Args)]
struct ColorArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    method: Method,
    /// Sphere-pattern parameter; defaults to the least k admissible for eps
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1.0)]
    eps: f64,
    /// Inner ball radius for the single-pass break method (default k+3)
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    /// Number of labels for the random method
    #[arg(long, default_value_t = 2)]
    d: u32,
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
    cap: u64,
    #[arg(long)]
    out: PathBuf,
    /// Also write the colored graph in DOT format (black/white fills)
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    coloring: PathBuf,
}

#[derive(Args)]
struct DistnumArgs {
    file: PathBuf,
    #[arg(long, default_value_t = 6)]
    max_d: u32,
    /// Disable the label-permutation reduction (pinning the first vertex's
    /// label to 0)
    #[arg(long)]
    no_reduce: bool,
}

#[derive(Args)]
struct GrowthArgs {
    /// Graph file; alternative to --family
    file: Option<PathBuf>,
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    limit: usize,
    #[arg(long, default_value_t = 1.0)]
    eps: f64,
}

struct Failure {
    code: u8,
    kind: &'static str,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        let (code, kind) = match e {
            CoreError::GuardExceeded { .. } | CoreError::StabilizerTooLarge(_) => {
                (EXIT_GUARD, "guard")
            }
            _ => (EXIT_USAGE, "domain"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure {
            code: EXIT_USAGE,
            kind: "io",
            message: e.to_string(),
        }
    }
}

fn load_graph(path: &Path) -> Result<RootedGraph, Failure> {
    let text = fs::read_to_string(path)?;
    Ok(RootedGraph::from_json_str(&text)?)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json"));
}

fn dot_export(g: &RootedGraph, coloring: Option<&Coloring>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle style=filled];\n");
    for v in 0..g.len() {
        let fill = match coloring.and_then(|c| c.label(v)) {
            Some(1) => "black",
            Some(_) => "white",
            None => "gray",
        };
        let font = if fill == "black" { "white" } else { "black" };
        s.push_str(&format!(
            "  {:?} [fillcolor={fill} fontcolor={font}];\n",
            g.vertex_name(v)
        ));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!(
            "  {:?} -- {:?};\n",
            g.vertex_name(u),
            g.vertex_name(v)
        ));
    }
    s.push_str("}\n");
    s
}

fn run_gen(args: &GenArgs) -> Result<u8, Failure> {
    let family: Family = args
        .family
        .parse()
        .map_err(|e: CoreError| Failure::usage(e.to_string()))?;
    let g = family.truncate(args.radius)?;
    fs::write(&args.out, g.to_json_string())?;
    let mut summary = json!({
        "family": family.name(),
        "radius": args.radius,
        "vertices": g.len(),
        "edges": g.edge_count(),
        "out": args.out,
    });
    if let Some(plan) = family.plan_for_radius(args.radius) {
        let plan = plan?;
        let mut sidecar = args.out.clone();
        sidecar.set_extension("plan.json");
        let mut text = serde_json::to_string_pretty(&plan.to_json()).expect("plan serializes");
        text.push('\n');
        fs::write(&sidecar, text)?;
        summary["plan"] = json!(sidecar);
    }
    print_json(&summary);
    Ok(EXIT_OK)
}

fn run_analyze(args: &AnalyzeArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.file)?;
    let center = match &args.root {
        Some(name) => g.vertex_index(name)?,
        None => g.root().unwrap_or(0),
    };
    let dec = bfs_decompose(&g, g.vertex_name(center))?;
    let sizes: Vec<usize> = dec.layers().iter().map(|l| l.len()).collect();
    let profile: Vec<serde_json::Value> = {
        let mut ball = 0;
        sizes
            .iter()
            .enumerate()
            .map(|(r, &s)| {
                ball += s;
                json!({"r": r, "sphere": s, "ball": ball})
            })
            .collect()
    };
    let summary = enumerate_automorphisms(&g, args.cap);
    let ecc = dec.eccentricity();
    let bounds = if summary.truncated {
        json!({
            "eps": args.eps,
            "sphere_bound_radii": sphere_bound_radii_from_sizes(&sizes, args.eps, ecc),
            "ball_bound_radii": ball_bound_radii_from_sizes(&sizes, args.eps, ecc),
            "motion_bound": serde_json::Value::Null,
            "survivor_bound": serde_json::Value::Null,
        })
    } else {
        let verdict = check_motion_bound(&summary, 2)?;
        let survivors = expected_survivors(&summary, 2)?;
        json!({
            "eps": args.eps,
            "sphere_bound_radii": sphere_bound_radii_from_sizes(&sizes, args.eps, ecc),
            "ball_bound_radii": ball_bound_radii_from_sizes(&sizes, args.eps, ecc),
            "motion_bound": serde_json::to_value(&verdict).expect("verdict"),
            "survivor_bound": serde_json::to_value(&survivors).expect("bound"),
        })
    };
    let report = json!({
        "vertices": g.len(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "root": g.root().map(|r| g.vertex_name(r).to_string()),
        "center": g.vertex_name(center),
        "eccentricity": ecc,
        "sphere_profile": profile,
        "group": summary.to_json(&g, args.emit_elements),
        "bounds": bounds,
    });
    print_json(&report);
    Ok(EXIT_OK)
}

fn run_color(args: &ColorArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.file)?;
    let k = match args.k {
        Some(k) => k,
        None => minimal_k(args.eps)?,
    };
    let (coloring, report, code) = match args.method {
        Method::Fixroot => {
            let c = fixroot_pattern(&g, k)?;
            let verdict = verify_root_signature(&g, &c, k)?;
            let report = json!({
                "method": "fixroot",
                "k": k,
                "root_signature": serde_json::to_value(&verdict).expect("verdict"),
            });
            (Some(c), report, EXIT_OK)
        }
        Method::Break => {
            let base = fixroot_pattern(&g, k)?;
            let m = args.m.unwrap_or(k + 3);
            let (c, rep) = break_ball_actors(&g, k, m, args.eps, &base, args.cap)?;
            let ok = rep.outcome != BreakOutcome::Failed;
            (
                Some(c),
                json!({"method": "break", "k": k, "m": m, "report": rep.to_json()}),
                if ok { EXIT_OK } else { EXIT_NOT_DISTINGUISHING },
            )
        }
        Method::Pipeline => {
            let (c, rep) = full_pipeline(&g, k, args.eps, args.cap)?;
            let ok = rep.outcome == BreakOutcome::Distinguishing;
            (
                Some(c),
                json!({"method": "pipeline", "k": k, "report": rep.to_json()}),
                if ok { EXIT_OK } else { EXIT_NOT_DISTINGUISHING },
            )
        }
        Method::Greedy => {
            let summary = enumerate_automorphisms(&g, args.cap);
            let targets: Vec<_> = summary.nontrivial()?.into_iter().cloned().collect();
            let free: Vec<usize> = (0..g.len()).collect();
            let (mut c, rep) = greedy_half_break(&g, &targets, &free, &Coloring::new(g.len()))?;
            c.fill(WHITE);
            (
                Some(c),
                json!({"method": "greedy", "targets": targets.len(), "report": rep.to_json()}),
                EXIT_OK,
            )
        }
        Method::Pairs => {
            let summary = enumerate_automorphisms(&g, args.cap);
            let (mut c, rep) = sequential_pair_break(&g, &summary)?;
            c.fill(WHITE);
            let ok = rep.outcome == BreakOutcome::Distinguishing;
            (
                Some(c),
                json!({"method": "pairs", "report": rep.to_json()}),
                if ok { EXIT_OK } else { EXIT_NOT_DISTINGUISHING },
            )
        }
        Method::Random => {
            let result = find_distinguishing_coloring(&g, None, args.d, args.budget, args.seed)?;
            let report = json!({
                "method": "random",
                "d": args.d,
                "seed": args.seed,
                "found": result.coloring.is_some(),
                "trials": result.trials,
            });
            let code = if result.coloring.is_some() {
                EXIT_OK
            } else {
                EXIT_NOT_DISTINGUISHING
            };
            (result.coloring, report, code)
        }
    };
    if let Some(c) = &coloring {
        let mut text = serde_json::to_string_pretty(&c.to_json(&g)).expect("coloring serializes");
        text.push('\n');
        fs::write(&args.out, text)?;
        if let Some(dot) = &args.dot {
            fs::write(dot, dot_export(&g, Some(c)))?;
        }
    }
    print_json(&report);
    Ok(code)
}

fn run_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.graph)?;
    let text = fs::read_to_string(&args.coloring)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("malformed coloring JSON: {e}")))?;
    let coloring = Coloring::from_json(&g, &value)?;
    let (ok, witness) = is_distinguishing(&g, &coloring)?;
    let report = json!({
        "distinguishing": ok,
        "witness": witness.map(|w| w.to_name_map(&g)),
    });
    print_json(&report);
    Ok(if ok { EXIT_OK } else { EXIT_NOT_DISTINGUISHING })
}

fn run_distnum(args: &DistnumArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.file)?;
    let outcome = distinguishing_number(&g, args.max_d, !args.no_reduce)?;
    let report = match outcome {
        DistnumOutcome::Found {
            d,
            witness,
            candidates,
        } => json!({
            "distinguishing_number": d,
            "witness": witness.labels_json(&g),
            "candidates": candidates,
        }),
        DistnumOutcome::ExceededMaxD { candidates } => json!({
            "distinguishing_number": serde_json::Value::Null,
            "exceeded_max_d": args.max_d,
            "candidates": candidates,
        }),
    };
    print_json(&report);
    Ok(EXIT_OK)
}

fn run_growth(args: &GrowthArgs) -> Result<u8, Failure> {
    let rows = match (&args.file, &args.family) {
        (Some(_), Some(_)) | (None, None) => {
            return Err(Failure::usage("give exactly one of FILE or --family"));
        }
        (None, Some(name)) => {
            let family: Family = name
                .parse()
                .map_err(|e: CoreError| Failure::usage(e.to_string()))?;
            family.growth_profile(args.limit)?
        }
        (Some(path), None) => {
            let g = load_graph(path)?;
            let center = g.root().unwrap_or(0);
            let dec = bfs_decompose(&g, g.vertex_name(center))?;
            let limit = args.limit.min(dec.eccentricity());
            let mut ball = 0;
            (0..=limit)
                .map(|r| {
                    ball += dec.sphere_size(r);
                    symbreak_core::generators::GrowthRow {
                        r,
                        ball,
                        sphere: dec.sphere_size(r),
                    }
                })
                .collect()
        }
    };
    let sizes: Vec<usize> = rows.iter().map(|row| row.sphere).collect();
    let limit = sizes.len().saturating_sub(1);
    let sphere_ok = sphere_bound_radii_from_sizes(&sizes, args.eps, limit);
    let ball_ok = ball_bound_radii_from_sizes(&sizes, args.eps, limit);
    let table: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            json!({
                "r": row.r,
                "ball": row.ball,
                "sphere": row.sphere,
                "sphere_bound_ok": sphere_ok.contains(&row.r),
                "ball_bound_ok": ball_ok.contains(&row.r),
                "poly_growth_ok": row.r >= 2
                    && (row.ball as f64) <= (row.r as f64).powf(1.0 + args.eps),
            })
        })
        .collect();
    print_json(&json!({ "eps": args.eps, "rows": table }));
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Gen(args) => run_gen(args),
        Cmd::Analyze(args) => run_analyze(args),
        Cmd::Color(args) => run_color(args),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Distnum(args) => run_distnum(args),
        Cmd::Growth(args) => run_growth(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            let msg = json!({"error": {"kind": failure.kind, "message": failure.message}});
            eprintln!("{}", serde_json::to_string(&msg).expect("error json"));
            ExitCode::from(failure.code)
        }
    }
}
