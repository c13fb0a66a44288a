//! Command-line front end: packing runs, exhaustive oracles, constructions,
//! hypergraph checks, and the experiment harness.
//!
//! Exit codes: 0 success, 1 input/usage error, 2 guarantee violation or
//! failed construction claim, 3 verification failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use orepack_core::constructions;
use orepack_core::error::FormatError;
use orepack_core::experiments;
use orepack_core::format;
use orepack_core::graph::Graph;
use orepack_core::hypergraph::{self, Hypergraph3, ObstructionVerdict};
use orepack_core::models::{GModel, HModel};
use orepack_core::oracle;
use orepack_core::packing::{self, PackingConfig, PackingMap, PackingOutcome};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Output format version stamped into every JSON document.
const FORMAT_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "orepack", about = "spanning-graph packing toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the randomized packing procedure on G (missing edges) and H.
    Pack(PackArgs),
    /// Check a claimed packing bijection against G and H.
    Verify(VerifyArgs),
    /// Exhaustive packing decision at desk scale.
    ExactPack(ExactPackArgs),
    /// Exact extremal number by isomorphism-class sweep (n <= 9).
    BruteEx(BruteExArgs),
    /// All extremal isomorphism classes (n <= 8).
    Enumerate(BruteExArgs),
    /// Emit an explicit construction with its claim report.
    Construct(ConstructArgs),
    /// Local-obstruction check for a spanning 3-uniform hypergraph copy.
    HyperCheck(HyperCheckArgs),
    /// Repeated randomized trials and sweeps.
    #[command(subcommand)]
    Experiments(ExperimentsCommand),
}

#[derive(Args)]
struct ConstantOverrides {
    /// Max-degree bound divisor: Delta(H) <= sqrt(n) / divisor.
    #[arg(long)]
    maxdeg_divisor: Option<f64>,
    /// High-degree threshold coefficient (times sqrt(n)).
    #[arg(long)]
    high_degree_coeff: Option<f64>,
    /// Degree cap on reservoir candidates.
    #[arg(long)]
    small_degree_cap: Option<usize>,
    /// Per-vertex sampling probability exponent (probability n^exponent).
    #[arg(long)]
    sample_prob_exponent: Option<f64>,
    /// C-bound coefficient (times sqrt(n)).
    #[arg(long)]
    c_bound_coeff: Option<f64>,
    /// D-floor coefficient (times sqrt(n)).
    #[arg(long)]
    d_bound_coeff: Option<f64>,
    /// D-checked-range coefficient (times sqrt(n)).
    #[arg(long)]
    d_range_coeff: Option<f64>,
    /// S_i floor coefficient (times n).
    #[arg(long)]
    s_size_coeff: Option<f64>,
    /// Reservoir resampling attempt limit.
    #[arg(long)]
    max_resamples: Option<usize>,
}

impl ConstantOverrides {
    fn apply(&self, seed: u64) -> PackingConfig {
        let mut cfg = PackingConfig::with_seed(seed);
        macro_rules! set {
            ($($field:ident),*) => {
                $(if let Some(v) = self.$field { cfg.$field = v; })*
            };
        }
        set!(
            maxdeg_divisor,
            high_degree_coeff,
            small_degree_cap,
            sample_prob_exponent,
            c_bound_coeff,
            d_bound_coeff,
            d_range_coeff,
            s_size_coeff,
            max_resamples
        );
        cfg
    }
}

#[derive(Args)]
struct PackArgs {
    /// Missing-edges graph file ("n m" header, one "u v" line per edge).
    #[arg(long)]
    g: PathBuf,
    /// Spanning target graph file, same format.
    #[arg(long)]
    h: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the stage trace as JSON to this file.
    #[arg(long)]
    trace_out: Option<PathBuf>,
    /// Write the bijection (one image per line) to this file.
    #[arg(long)]
    map_out: Option<PathBuf>,
    #[command(flatten)]
    constants: ConstantOverrides,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    h: PathBuf,
    /// Bijection file: line v holds f(v).
    #[arg(long)]
    map: PathBuf,
}

#[derive(Args)]
struct ExactPackArgs {
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    h: PathBuf,
    /// Raise the vertex-count ceiling past the default.
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct BruteExArgs {
    /// Spanning target graph file; n is taken from it.
    #[arg(long)]
    h: PathBuf,
}

#[derive(Args)]
struct ConstructArgs {
    /// One of: lower-bound, ore, second-extremal, tightness, hyper-h, hyper-t.
    which: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    /// Write the constructed instance in text format to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct HyperCheckArgs {
    /// Host hypergraph file ("n m" header, one "a b c" line per edge).
    #[arg(long)]
    t: PathBuf,
    /// Target hypergraph file, same format.
    #[arg(long)]
    h: PathBuf,
    /// Also run the exhaustive spanning-copy search (n <= 9).
    #[arg(long)]
    exact: bool,
}

#[derive(Subcommand)]
enum ExperimentsCommand {
    /// End-to-end packing trials over sampled instances.
    Trials(TrialsArgs),
    /// Single-sample reservoir bound statistics.
    Reservoir(ReservoirArgs),
    /// CSV sweep over sizes and max-degree divisors.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct TrialsArgs {
    /// Missing-edges model: edgeless | matching | forest | random:<m> | stars:<hubs>.
    #[arg(long)]
    g_model: String,
    /// Target model: matching | triangles | cliques:<size>.
    #[arg(long)]
    h_model: String,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    constants: ConstantOverrides,
}

#[derive(Args)]
struct ReservoirArgs {
    #[arg(long)]
    g_model: String,
    #[arg(long)]
    n: usize,
    /// Minimum degree the intended target would have.
    #[arg(long, default_value_t = 1)]
    delta: usize,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Collect C-sizes at positions of degree >= this coefficient * sqrt(n).
    #[arg(long, default_value_t = 4.0)]
    probe_coeff: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',')]
    n: Vec<usize>,
    /// Comma-separated max-degree divisors.
    #[arg(long, value_delimiter = ',')]
    divisors: Vec<f64>,
    #[arg(long)]
    g_model: String,
    #[arg(long)]
    h_model: String,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::input(e.to_string())
    }
}

fn read_to_string(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_to_string(path)?;
    parse_in(path, format::parse_graph(&text))
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph3, Failure> {
    let text = read_to_string(path)?;
    parse_in(path, format::parse_hypergraph(&text))
}

fn parse_in<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, Failure> {
    r.map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
}

fn load_map(path: &Path, n: usize) -> Result<PackingMap, Failure> {
    let text = read_to_string(path)?;
    let mut forward = Vec::with_capacity(n);
    for (idx, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let w: u32 = t
            .parse()
            .map_err(|_| Failure::input(format!("{}: line {}: \"{t}\" is not a vertex index", path.display(), idx + 1)))?;
        forward.push(w);
    }
    Ok(PackingMap::new(forward))
}

fn serialize_map(map: &PackingMap) -> String {
    let mut out = String::new();
    for &w in map.forward() {
        out.push_str(&w.to_string());
        out.push('\n');
    }
    out
}

fn cmd_pack(args: &PackArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.g)?;
    let h = load_graph(&args.h)?;
    let cfg = args.constants.apply(args.seed);
    let outcome = packing::pack(&g, &h, &cfg)?;
    if let Some(path) = &args.trace_out {
        let trace = serde_json::to_string_pretty(outcome.trace()).expect("serializable trace");
        write_out(path, &trace)?;
    }
    match &outcome {
        PackingOutcome::Success { map, .. } => {
            if let Some(path) = &args.map_out {
                write_out(path, &serialize_map(map))?;
            }
            emit(&json!({
                "format": FORMAT_VERSION,
                "outcome": "success",
                "n": g.n(),
                "seed": args.seed,
                "verified": true,
                "mapping": map.forward(),
            }));
            Ok(EXIT_OK)
        }
        PackingOutcome::GuaranteeViolation { violation, .. } => {
            emit(&json!({
                "format": FORMAT_VERSION,
                "outcome": "guarantee_violation",
                "n": g.n(),
                "seed": args.seed,
                "stage": violation.stage,
                "reason": violation.reason,
            }));
            Ok(EXIT_VIOLATION)
        }
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.g)?;
    let h = load_graph(&args.h)?;
    let map = load_map(&args.map, g.n())?;
    let (valid, detail) = match packing::verify_packing(&g, &h, &map) {
        Ok(true) => (true, "packing".to_string()),
        Ok(false) => (false, "a G-edge lands on an H-edge".to_string()),
        Err(e) => (false, e.to_string()),
    };
    emit(&json!({
        "format": FORMAT_VERSION,
        "valid": valid,
        "detail": detail,
    }));
    Ok(if valid { EXIT_OK } else { EXIT_VERIFY })
}

fn cmd_exact_pack(args: &ExactPackArgs) -> Result<u8, Failure> {
    let g = load_graph(&args.g)?;
    let h = load_graph(&args.h)?;
    let result = match args.limit {
        Some(limit) => oracle::exact_pack_with_limit(&g, &h, limit),
        None => oracle::exact_pack(&g, &h),
    }?;
    emit(&json!({
        "format": FORMAT_VERSION,
        "packable": result.is_some(),
        "mapping": result.as_ref().map(|m| m.forward().to_vec()),
    }));
    Ok(EXIT_OK)
}

fn cmd_brute_ex(args: &BruteExArgs, enumerate: bool) -> Result<u8, Failure> {
    let h = load_graph(&args.h)?;
    let result = oracle::brute_ex(h.n(), &h)?;
    if enumerate {
        let classes = oracle::enumerate_extremal(h.n(), &h)?;
        emit(&json!({
            "format": FORMAT_VERSION,
            "n": result.n,
            "ex_value": result.ex_value,
            "min_missing": result.min_missing,
            "class_count": classes.len(),
            "classes": classes.iter().map(|g| g.edges()).collect::<Vec<_>>(),
        }));
    } else {
        emit(&json!({
            "format": FORMAT_VERSION,
            "n": result.n,
            "ex_value": result.ex_value,
            "min_missing": result.min_missing,
            "witness_edges": result.witness.edges(),
        }));
    }
    Ok(EXIT_OK)
}

fn cmd_construct(args: &ConstructArgs) -> Result<u8, Failure> {
    let need = |opt: Option<usize>, name: &str| {
        opt.ok_or_else(|| Failure::input(format!("construct {}: --{name} is required", args.which)))
    };
    let instance_text;
    let report = match args.which.as_str() {
        "lower-bound" => {
            let (g, report) = constructions::lower_bound_report(
                need(args.n, "n")?,
                need(args.delta, "delta")?,
            )?;
            instance_text = format::serialize_graph(&g);
            serde_json::to_value(&report).expect("serializable report")
        }
        "ore" => {
            let g = constructions::ore_extremal(need(args.n, "n")?)?;
            instance_text = format::serialize_graph(&g);
            json!({ "name": format!("ore(n={})", g.n()), "edges": g.m() })
        }
        "second-extremal" => {
            let g = constructions::second_extremal(need(args.n, "n")?)?;
            instance_text = format::serialize_graph(&g);
            json!({ "name": format!("second_extremal(n={})", g.n()), "edges": g.m() })
        }
        "tightness" => {
            let pair = constructions::tightness_pair(
                need(args.k, "k")?,
                need(args.delta, "delta")?,
            )?;
            instance_text = format::serialize_graph(&pair.h);
            serde_json::to_value(&pair.report).expect("serializable report")
        }
        "hyper-h" => {
            let hg = hypergraph::counterexample_h(need(args.s, "s")?)?;
            instance_text = format::serialize_hypergraph(&hg);
            json!({
                "name": format!("hyper_h(s={})", need(args.s, "s")?),
                "n": hg.n(),
                "edges": hg.edge_count(),
                "some_link_has_one_edge": hypergraph::links_extremal_zero(&hg),
            })
        }
        "hyper-t" => {
            let hg = hypergraph::construction_t(need(args.n, "n")?)?;
            instance_text = format::serialize_hypergraph(&hg);
            json!({ "name": format!("hyper_t(n={})", hg.n()), "n": hg.n(), "edges": hg.edge_count() })
        }
        other => return Err(Failure::input(format!("unknown construction \"{other}\""))),
    };
    if let Some(path) = &args.out {
        write_out(path, &instance_text)?;
    }
    let all_hold = report
        .get("claims")
        .and_then(|c| c.as_array())
        .map(|claims| claims.iter().all(|c| c["status"] != "failed"))
        .unwrap_or(true);
    emit(&json!({
        "format": FORMAT_VERSION,
        "report": report,
        "all_claims_hold": all_hold,
    }));
    Ok(if all_hold { EXIT_OK } else { EXIT_VIOLATION })
}

fn cmd_hyper_check(args: &HyperCheckArgs) -> Result<u8, Failure> {
    let t = load_hypergraph(&args.t)?;
    let h = load_hypergraph(&args.h)?;
    let verdict = hypergraph::local_obstruction_check(&t, &h)?;
    let exact = if args.exact {
        Some(hypergraph::exact_spanning_copy(&t, &h)?.is_some())
    } else {
        None
    };
    emit(&json!({
        "format": FORMAT_VERSION,
        "verdict": match verdict {
            ObstructionVerdict::NoSpanningCopy => "no_spanning_copy",
            ObstructionVerdict::Inconclusive => "inconclusive",
        },
        "exact_copy_exists": exact,
    }));
    Ok(EXIT_OK)
}

fn cmd_trials(args: &TrialsArgs) -> Result<u8, Failure> {
    let g_model: GModel = args.g_model.parse()?;
    let h_model: HModel = args.h_model.parse()?;
    let cfg = args.constants.apply(args.seed);
    let summary =
        experiments::pack_trials(g_model, h_model, args.n, args.trials, &cfg, args.seed)?;
    emit(&json!({
        "format": FORMAT_VERSION,
        "summary": summary,
        "success_rate": summary.success_rate(),
    }));
    Ok(EXIT_OK)
}

fn cmd_reservoir(args: &ReservoirArgs) -> Result<u8, Failure> {
    let g_model: GModel = args.g_model.parse()?;
    let cfg = PackingConfig::default();
    let stats = experiments::reservoir_stats(
        g_model,
        args.n,
        args.delta,
        args.trials,
        &cfg,
        args.seed,
        args.probe_coeff,
    )?;
    emit(&json!({
        "format": FORMAT_VERSION,
        "stats": stats,
        "c_mean": stats.c_stats.mean,
        "c_std_error": stats.c_stats.std_error(),
    }));
    Ok(EXIT_OK)
}

fn cmd_sweep(args: &SweepArgs) -> Result<u8, Failure> {
    let g_model: GModel = args.g_model.parse()?;
    let h_model: HModel = args.h_model.parse()?;
    let csv = experiments::constant_sweep(
        &args.n,
        &args.divisors,
        g_model,
        h_model,
        args.trials,
        args.seed,
    )?;
    match &args.out {
        Some(path) => write_out(path, &csv)?,
        None => print!("{csv}"),
    }
    Ok(EXIT_OK)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Pack(args) => cmd_pack(args),
        Command::Verify(args) => cmd_verify(args),
        Command::ExactPack(args) => cmd_exact_pack(args),
        Command::BruteEx(args) => cmd_brute_ex(args, false),
        Command::Enumerate(args) => cmd_brute_ex(args, true),
        Command::Construct(args) => cmd_construct(args),
        Command::HyperCheck(args) => cmd_hyper_check(args),
        Command::Experiments(ExperimentsCommand::Trials(args)) => cmd_trials(args),
        Command::Experiments(ExperimentsCommand::Reservoir(args)) => cmd_reservoir(args),
        Command::Experiments(ExperimentsCommand::Sweep(args)) => cmd_sweep(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
