use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use containment::corpus;
use containment::enumerate;
use containment::exit;
use containment::experiments::audit::{self, SmallAudit};
use containment::experiments::config::{self, ConfigError, DEFAULT_SEED};
use containment::experiments::sweep;
use containment::experiments::Manifest;
use containment::formats::{read_graph, to_graph6, write_edge_list, FormatError};
use containment_core::game::CopStrategy;
use containment_core::numbers::numbers_report;
use containment_core::solver::{self, DEFAULT_STATE_BUDGET};
use containment_core::strategies::{CopSpec, Cops, DensityCopConfig, RobberSpec};
use containment_core::{gen_gnp, play, GnpParams, SolveError, Variant};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Containment game toolkit: cops on edges, robber on vertices.
#[derive(Parser)]
#[command(name = "containment", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample G(n, p) as an edge list.
    Gen(GenArgs),
    /// Solve a graph exactly.
    Solve(SolveArgs),
    /// Play one game between two strategies.
    Play(PlayArgs),
    /// Run a Monte Carlo sweep from a TOML config.
    Sweep(SweepArgs),
    /// Audit the bound chain and the conjecture.
    Audit(AuditArgs),
    /// Write every graph on n vertices in graph6, one per isomorphism class.
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Containment,
    Classic,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Containment => Variant::Containment,
            VariantArg::Classic => Variant::Classic,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file (edge list, or graph6 with a `.g6` extension).
    graph: PathBuf,
    #[arg(long, value_enum, default_value = "containment")]
    variant: VariantArg,
    /// Decide whether `k` cops win.
    #[arg(long, conflicts_with_all = ["number", "report"])]
    k: Option<usize>,
    /// Compute the least winning number of cops.
    #[arg(long, conflicts_with = "report")]
    number: bool,
    /// Compute xi, c, gamma and Delta together (the default).
    #[arg(long)]
    report: bool,
    /// Largest number of positions one solve may allocate.
    #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
    budget: u64,
    /// Also write the JSON result to this file.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PlayArgs {
    graph: PathBuf,
    /// Cop strategy: a name (`matching`, `density`, `random_cops`,
    /// `greedy_cops`, `everywhere`) or JSON `{"strategy": .., "params": {..}}`.
    #[arg(long)]
    cops: String,
    /// Robber strategy: `evasion`, `greedy_robber`, `sitting_robber` or JSON.
    #[arg(long)]
    robber: String,
    /// Number of cops; strategies with their own team size may omit it.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    max_rounds: u32,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write the full game trace as JSON.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    config: PathBuf,
    /// Output directory for records.csv, summary.csv and manifest.json.
    #[arg(long, default_value = "sweep-out")]
    out: PathBuf,
    /// Worker threads; results are ordered the same for any value.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct AuditArgs {
    /// Audit every shipped corpus graph with at most this many vertices.
    #[arg(long, conflicts_with = "random")]
    nmax: Option<usize>,
    /// Include disconnected graphs (n <= 7).
    #[arg(long)]
    all: bool,
    /// Random audit described by a TOML config.
    #[arg(long)]
    random: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
    budget: u64,
    #[arg(long, default_value = "audit-out")]
    out: PathBuf,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Emit every order from 1 to n.
    #[arg(long)]
    up_to: bool,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(exit::FAILURE, e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        let code = if matches!(e, FormatError::Io { .. }) { exit::FAILURE } else { exit::VALIDATION };
        Failure::new(code, e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        let code = match e {
            SolveError::BudgetExceeded { .. } => exit::BUDGET,
            SolveError::NoCops => exit::VALIDATION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::new(exit::VALIDATION, format!("invalid config: {e}"))
    }
}

impl From<audit::AuditError> for Failure {
    fn from(e: audit::AuditError) -> Self {
        match e {
            audit::AuditError::Solve { source, graph6 } => {
                let f = Failure::from(source);
                Failure::new(f.code, format!("{graph6}: {}", f.message))
            }
            other => Failure::new(exit::FAILURE, other.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::new(exit::FAILURE, format!("{e:#}"))
    }
}

type Res = Result<(), Failure>;

fn write(path: &Path, bytes: impl AsRef<[u8]>) -> Res {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, bytes).map_err(|e| Failure::new(exit::FAILURE, format!("{}: {e}", path.display())))
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(exit::FAILURE, format!("{}: {e}", path.display())))
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::new(exit::VALIDATION, "--jobs must be at least 1")),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure::new(exit::FAILURE, e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

fn cmd_gen(a: GenArgs) -> Res {
    let params = GnpParams::new(a.n, a.p, a.seed).map_err(|e| Failure::new(exit::VALIDATION, e.to_string()))?;
    let g = gen_gnp(&params);
    let text = write_edge_list(&g);
    match &a.out {
        Some(path) => {
            write(path, text)?;
            println!("wrote G({}, {}) with {} edges to {}", a.n, a.p, g.m(), path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_solve(a: SolveArgs) -> Res {
    let g = read_graph(&a.graph)?;
    let variant = Variant::from(a.variant);
    let out = if let Some(k) = a.k {
        let r = match variant {
            Variant::Containment => solver::cops_win_containment(&g, k, a.budget)?,
            Variant::Classic => solver::cops_win_classic(&g, k, a.budget)?,
        };
        json(&serde_json::json!({
            "k": r.k,
            "value": r.value,
            "states_total": r.states_total,
            "states_winning": r.states_winning,
            "witness": r.witness,
        }))
    } else if a.number {
        match variant {
            Variant::Containment => json(&serde_json::json!({ "xi": solver::containability_number(&g, a.budget)? })),
            Variant::Classic => json(&serde_json::json!({ "c": solver::cop_number(&g, a.budget)? })),
        }
    } else {
        json(&numbers_report(&g, a.budget)?)
    };
    print!("{out}");
    if let Some(path) = &a.out {
        write(path, &out)?;
    }
    Ok(())
}

/// Accepts either a bare strategy name or the full JSON form.
fn parse_spec<T: DeserializeOwned>(s: &str, what: &str) -> Result<T, Failure> {
    let s = s.trim();
    let text = if s.starts_with('{') { s.to_string() } else { format!(r#"{{"strategy":"{s}","params":{{}}}}"#) };
    serde_json::from_str(&text).map_err(|e| Failure::new(exit::VALIDATION, format!("bad {what} strategy `{s}`: {e}")))
}

#[derive(Serialize)]
struct PlayRecord<'a> {
    graph: String,
    cops: &'a CopSpec,
    robber: &'a RobberSpec,
    seed: u64,
    k: usize,
    cops_total: usize,
    max_rounds: u32,
    trace: &'a containment_core::StrategyTrace,
}

fn cmd_play(a: PlayArgs) -> Res {
    let g = read_graph(&a.graph)?;
    let mut cop_spec: CopSpec = parse_spec(&a.cops, "cop")?;
    let robber_spec: RobberSpec = parse_spec(&a.robber, "robber")?;
    if let (CopSpec::Density(cfg), Some(k)) = (&cop_spec, a.k) {
        cop_spec = CopSpec::Density(DensityCopConfig { team: Some(k), ..cfg.clone() });
    }
    let invalid = |e: containment_core::strategies::StrategyError| Failure::new(exit::VALIDATION, e.to_string());
    let mut cops = cop_spec.build(&g, a.seed).map_err(invalid)?;
    let mut robber = robber_spec.build(&g, a.seed).map_err(invalid)?;
    let total = match (&cops, a.k) {
        (Cops::Density(d), _) => d.total(),
        (c, k) => match c.preferred_cops().or(k) {
            Some(k) => k,
            None => return Err(Failure::new(exit::VALIDATION, "--k is required for this cop strategy")),
        },
    };
    let trace = play(&g, total, &mut cops, &mut robber, a.max_rounds)
        .map_err(|e| Failure::new(exit::FAILURE, format!("game aborted: {e}")))?;
    println!("{} after {} rounds with {} cops", trace.outcome, trace.rounds, total);
    if let Some(d) = cops.as_density() {
        println!("density status: {:?}", d.status());
    }
    if let Some(e) = robber.as_evasion() {
        println!("evasion rounds with safety lost: {}", e.safety_lost());
    }
    if let Some(path) = &a.trace {
        let rec = PlayRecord {
            graph: a.graph.display().to_string(),
            cops: &cop_spec,
            robber: &robber_spec,
            seed: a.seed,
            k: a.k.unwrap_or(total),
            cops_total: total,
            max_rounds: a.max_rounds,
            trace: &trace,
        };
        write(path, json(&rec))?;
    }
    Ok(())
}

fn cmd_sweep(a: SweepArgs) -> Res {
    let spec = config::parse_sweep(&read(&a.config)?)?;
    let res = with_jobs(a.jobs, || sweep::run_sweep(&spec))?;
    let violations = sweep::paired_violations(&res.records);
    fs::create_dir_all(&a.out)?;
    let mut manifest = Manifest::new("sweep", spec.seed, serde_json::json!({ "spec": &spec, "cells": &res.cells }));
    for (name, bytes) in [
        ("records.csv", sweep::records_csv(&res.records)?),
        ("summary.csv", sweep::summary_csv(&res.summary)?),
        ("paired_violations.json", json(&violations).into_bytes()),
    ] {
        write(&a.out.join(name), bytes)?;
        manifest.outputs.push(name.to_string());
    }
    write(&a.out.join("manifest.json"), manifest.to_json())?;
    println!("{} games over {} cells, seed {}", res.records.len(), spec.alphas.len(), spec.seed);
    for row in &res.summary {
        println!(
            "alpha {:.3}  k {:>6}  wins {:>4}/{:<4}  rate {:.3}",
            row.alpha, row.k, row.cop_wins, row.trials, row.win_rate
        );
    }
    println!("paired monotonicity violations: {}", violations.len());
    println!("artifacts in {}", a.out.display());
    Ok(())
}

fn g6_lines(rows: &[audit::AuditRow]) -> String {
    rows.iter().map(|r| format!("{}\n", r.graph6)).collect()
}

fn csv_bytes<T: Serialize>(rows: &[T]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Failure::new(exit::FAILURE, e.to_string()))?;
    }
    w.into_inner().map_err(|e| Failure::new(exit::FAILURE, e.to_string()))
}

fn report_small(a: &AuditArgs, audit: &SmallAudit) -> Res {
    fs::create_dir_all(&a.out)?;
    write(&a.out.join("audit.csv"), csv_bytes(&audit.rows)?)?;
    write(&a.out.join("chain_violations.g6"), g6_lines(&audit.chain_violations))?;
    write(&a.out.join("conjecture_violations.g6"), g6_lines(&audit.conjecture_violations))?;
    let mut manifest = Manifest::new(
        "audit",
        0,
        serde_json::json!({ "n_max": audit.n_max, "connected_only": audit.connected_only, "budget": a.budget }),
    );
    manifest.outputs = ["audit.csv", "chain_violations.g6", "conjecture_violations.g6"].map(String::from).to_vec();
    write(&a.out.join("manifest.json"), manifest.to_json())?;
    println!(
        "audited {} graphs (n <= {}, {}): chain violations {}, conjecture violations {}, tight rows {}",
        audit.rows.len(),
        audit.n_max,
        if audit.connected_only { "connected" } else { "all" },
        audit.chain_violations.len(),
        audit.conjecture_violations.len(),
        audit.conjecture_tight
    );
    if !audit.chain_violations.is_empty() {
        return Err(Failure::new(
            exit::CHAIN_VIOLATION,
            format!("proven chain violated on: {}", g6_lines(&audit.chain_violations).trim_end()),
        ));
    }
    if !audit.conjecture_violations.is_empty() {
        eprintln!("==============================================================");
        eprintln!(" RESEARCH FINDING: counterexample to xi(G) <= c(G) * Delta(G)");
        eprintln!(" see {}", a.out.join("conjecture_violations.g6").display());
        eprintln!("==============================================================");
        return Err(Failure::new(exit::CONJECTURE_VIOLATION, "conjecture counterexample found"));
    }
    Ok(())
}

fn cmd_audit(a: AuditArgs) -> Res {
    if let Some(path) = &a.random {
        let spec = config::parse_random_audit(&read(path)?)?;
        let rows = with_jobs(a.jobs, || audit::audit_random(&spec))?;
        fs::create_dir_all(&a.out)?;
        write(&a.out.join("random_audit.csv"), csv_bytes(&rows)?)?;
        let chain_bad: Vec<_> = rows.iter().filter(|r| r.chain_holds == Some(false)).collect();
        let conj_bad: Vec<_> = rows.iter().filter(|r| r.conjecture_holds == Some(false)).collect();
        let lines = |rs: &[&audit::RandomRow]| -> String {
            rs.iter().filter_map(|r| r.graph6.as_ref()).map(|s| format!("{s}\n")).collect()
        };
        write(&a.out.join("chain_violations.g6"), lines(&chain_bad))?;
        write(&a.out.join("conjecture_violations.g6"), lines(&conj_bad))?;
        let mut manifest = Manifest::new("audit-random", spec.seed, &spec);
        manifest.outputs =
            ["random_audit.csv", "chain_violations.g6", "conjecture_violations.g6"].map(String::from).to_vec();
        write(&a.out.join("manifest.json"), manifest.to_json())?;
        let exact = rows.iter().filter(|r| r.xi.is_some()).count();
        println!("{} rows ({} exact, {} bracketed), seed {}", rows.len(), exact, rows.len() - exact, spec.seed);
        if !chain_bad.is_empty() {
            return Err(Failure::new(
                exit::CHAIN_VIOLATION,
                format!("proven chain violated on {} graphs", chain_bad.len()),
            ));
        }
        if !conj_bad.is_empty() {
            eprintln!("RESEARCH FINDING: counterexample to xi(G) <= c(G) * Delta(G)");
            return Err(Failure::new(exit::CONJECTURE_VIOLATION, "conjecture counterexample found"));
        }
        return Ok(());
    }
    let n_max = a.nmax.ok_or_else(|| Failure::new(exit::VALIDATION, "give --nmax or --random"))?;
    let connected_only = !a.all;
    let limit = if connected_only { corpus::CONNECTED_MAX_N } else { corpus::ALL_MAX_N };
    if n_max == 0 || n_max > limit {
        return Err(Failure::new(exit::VALIDATION, format!("--nmax must lie in 1..={limit}")));
    }
    let audit = with_jobs(a.jobs, || audit::audit_small_graphs(n_max, connected_only, a.budget))??;
    report_small(&a, &audit)
}

fn cmd_enumerate(a: EnumerateArgs) -> Res {
    if a.n == 0 || a.n > enumerate::MAX_N {
        return Err(Failure::new(exit::VALIDATION, format!("--n must lie in 1..={}", enumerate::MAX_N)));
    }
    let orders = if a.up_to { 1..=a.n } else { a.n..=a.n };
    let mut text = String::new();
    let mut count = 0;
    for n in orders {
        let graphs = if a.connected { enumerate::connected_graphs(n) } else { enumerate::all_graphs(n) };
        count += graphs.len();
        for g in graphs {
            text.push_str(&to_graph6(&g));
            text.push('\n');
        }
    }
    match &a.out {
        Some(path) => {
            write(path, text)?;
            println!("wrote {count} graphs to {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::VALIDATION } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let res = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Play(a) => cmd_play(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Enumerate(a) => cmd_enumerate(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code as u8)
        }
    }
}
