//! Subcommand definitions and their implementations.

use std::fmt::{Display, Write as _};
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fairank_core::bpam::{generate, replica_seed, BpamParams};
use fairank_core::fairness::{curve_compare, default_grid, FairnessCurve};
use fairank_core::graph::{Color, DegreeKind};
use fairank_core::io::{ccdf_csv, load, write_colors, write_edge_list, LabeledGraph};
use fairank_core::meanfield::{self, linear_grid, verify_grid};
use fairank_core::rankers::{IterationControl, SubspaceWeight, DEFAULT_EPS, DEFAULT_ETA};
use fairank_core::stats::ccdf_by_color;

use crate::config::{parse_list, Settings};
use crate::error::{usage, CliError};
use crate::experiment::{curves_for_graph, rank_graph, run_synthetic, AlgoSpec, RankSettings, SyntheticConfig};
use crate::manifest::{OutputDir, RunManifest};
use crate::schema::{self, push_sweep_rows};
use crate::svg;

#[derive(Debug, Parser)]
#[command(name = "fairank", version, about = "Minority representation in link-analysis rankings of biased networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Flat `key = value` config file; flags take precedence over it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads for replicas. Results do not depend on it.
    #[arg(long, global = true, env = "FAIRANK_THREADS")]
    pub threads: Option<usize>,
    /// Exit with code 3 if any ranking stops before converging.
    #[arg(long, global = true)]
    pub strict: bool,
    /// Increase log verbosity (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate one BPAM graph as edge and color files.
    Generate(GenerateArgs),
    /// Rank the nodes of one graph.
    Rank(RankArgs),
    /// Replica-averaged minority share curves on BPAM graphs.
    Curve(CurveArgs),
    /// Mean-field quantities at one (r, rho) or over the default grid.
    Meanfield(MeanfieldArgs),
    /// Check the mean-field propositions over a parameter grid.
    Verify(VerifyArgs),
    /// Curves across values of rho or of the subspace dimension k.
    Sweep(SweepArgs),
    /// Curves, HRI and degree CCDFs for an edge list with node colors.
    Real(RealArgs),
}

#[derive(Debug, Args, Default)]
pub struct ModelArgs {
    /// Node count N.
    #[arg(long)]
    pub nodes: Option<usize>,
    /// Out-degree d of each arriving node.
    #[arg(long)]
    pub outdeg: Option<usize>,
    /// Minority ratio r.
    #[arg(long)]
    pub r: Option<f64>,
    /// Homophily rho (cross-color acceptance probability).
    #[arg(long)]
    pub rho: Option<f64>,
    /// Base seed; replica k uses seed + k.
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args, Default)]
pub struct RankOpts {
    /// Comma-separated algorithms, e.g. degree,pagerank,hits,rhits,subspace_k6_lambda2.
    #[arg(long)]
    pub algos: Option<String>,
    /// PageRank damping.
    #[arg(long)]
    pub eta: Option<f64>,
    /// Randomized HITS restart probability.
    #[arg(long)]
    pub eps: Option<f64>,
    /// Convergence tolerance of the iterative rankers.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Iteration cap of the iterative rankers.
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Break score ties randomly with this seed instead of by node id.
    #[arg(long)]
    pub tie_shuffle: Option<u64>,
}

#[derive(Debug, Args, Default)]
pub struct GridOpts {
    /// Number of log-spaced top fractions.
    #[arg(long)]
    pub grid_points: Option<usize>,
    /// Explicit comma-separated top fractions in (0, 1], overriding the log grid.
    #[arg(long)]
    pub grid: Option<String>,
}

#[derive(Debug, Args, Default)]
pub struct InputOpts {
    /// Edge list, one `src<TAB>dst` per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
    /// Colors, one `node<TAB>R|B` per line.
    #[arg(long)]
    pub colors: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub input: InputOpts,
    #[command(flatten)]
    pub rank: RankOpts,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[command(flatten)]
    pub rank: RankOpts,
    #[command(flatten)]
    pub grid: GridOpts,
    /// Replicas to average.
    #[arg(long)]
    pub reps: Option<usize>,
    /// Also write curves.svg.
    #[arg(long)]
    pub svg: bool,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MeanfieldArgs {
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub rho: Option<f64>,
    /// Evaluate r in 0.05..0.5 and rho in 0.05..0.95 instead of one point.
    #[arg(long)]
    pub grid: bool,
    /// Directory for meanfield.csv; prints to stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Comma-separated r values (default 0.05..0.5 step 0.05).
    #[arg(long)]
    pub r_values: Option<String>,
    /// Comma-separated rho values (default 0.05..0.95 step 0.05).
    #[arg(long)]
    pub rho_values: Option<String>,
    /// Directory for verify.csv and f_scan.csv; prints a summary only when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    Rho,
    K,
}

impl Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axis::Rho => "rho",
            Axis::K => "k",
        })
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        <Axis as ValueEnum>::from_str(s, true)
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Parameter to sweep.
    #[arg(long)]
    pub axis: Option<Axis>,
    /// Comma-separated values of the swept parameter.
    #[arg(long)]
    pub values: Option<String>,
    /// Eigenvalue weight for the k axis: unit or lambda2.
    #[arg(long)]
    pub weight: Option<SubspaceWeight>,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Sweep k on this graph instead of on BPAM replicas.
    #[command(flatten)]
    pub input: InputOpts,
    #[command(flatten)]
    pub rank: RankOpts,
    #[command(flatten)]
    pub grid: GridOpts,
    /// Replicas to average at each swept value.
    #[arg(long)]
    pub reps: Option<usize>,
    /// Also write sweep.svg.
    #[arg(long)]
    pub svg: bool,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RealArgs {
    #[command(flatten)]
    pub input: InputOpts,
    #[command(flatten)]
    pub rank: RankOpts,
    #[command(flatten)]
    pub grid: GridOpts,
    /// Degree used for the CCDF export.
    #[arg(long)]
    pub degree_kind: Option<DegreeKind>,
    /// Also write curves.svg.
    #[arg(long)]
    pub svg: bool,
    /// Output directory (created if missing).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

const DEFAULT_ALGOS: &str = "degree,pagerank,hits";
const REAL_ALGOS: &str = "degree,pagerank,hits,rhits";

/// Resolves settings in flag > file > default order and records every
/// resolved value for the manifest.
struct Resolver<'a> {
    file: &'a Settings,
    echo: Vec<(String, String)>,
}

impl<'a> Resolver<'a> {
    fn new(file: &'a Settings) -> Self {
        Self { file, echo: Vec::new() }
    }

    fn get<T>(&mut self, key: &str, cli: Option<T>, default: T) -> Result<T>
    where
        T: FromStr + Display,
        T::Err: Display,
    {
        let v = self.file.pick(key, cli, default)?;
        self.echo.push((key.to_string(), v.to_string()));
        Ok(v)
    }

    fn opt<T>(&mut self, key: &str, cli: Option<T>) -> Result<Option<T>>
    where
        T: FromStr + Display,
        T::Err: Display,
    {
        let v = self.file.pick_opt(key, cli)?;
        if let Some(v) = &v {
            self.echo.push((key.to_string(), v.to_string()));
        }
        Ok(v)
    }

    /// A path setting that is not echoed, so output locations do not leak
    /// into reproducibility checks.
    fn path(&self, key: &str, cli: Option<PathBuf>) -> Result<Option<PathBuf>> {
        self.file.pick_opt(key, cli)
    }

    fn list<T>(&mut self, key: &str, cli: Option<String>, default: &str) -> Result<Vec<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        let raw = self.get(key, cli, default.to_string())?;
        parse_list(&raw)
    }

    fn model(&mut self, m: &ModelArgs) -> Result<(BpamParams, u64)> {
        let params = BpamParams::new(
            self.get("nodes", m.nodes, 1000)?,
            self.get("outdeg", m.outdeg, 6)?,
            self.get("r", m.r, 0.3)?,
            self.get("rho", m.rho, 0.1)?,
        )?;
        let seed = self.get("seed", m.seed, 1)?;
        Ok((params, seed))
    }

    fn rank(&mut self, o: &RankOpts) -> Result<RankSettings> {
        let defaults = IterationControl::default();
        Ok(RankSettings {
            ctrl: IterationControl::new(
                self.get("tol", o.tol, defaults.tol)?,
                self.get("max_iter", o.max_iter, defaults.max_iter)?,
            )?,
            eta: self.get("eta", o.eta, DEFAULT_ETA)?,
            eps: self.get("eps", o.eps, DEFAULT_EPS)?,
            tie_shuffle: self.opt("tie_shuffle", o.tie_shuffle)?,
        })
    }

    fn grid(&mut self, g: &GridOpts, n: usize) -> Result<Vec<f64>> {
        let points = self.get("grid_points", g.grid_points, 40)?;
        match self.opt("grid", g.grid.clone())? {
            Some(raw) => {
                let grid: Vec<f64> = parse_list(&raw)?;
                if grid.is_empty() {
                    return Err(usage("grid must not be empty"));
                }
                Ok(grid)
            }
            None => Ok(default_grid(n, points)),
        }
    }

    fn out(&self, cli: Option<PathBuf>) -> Result<PathBuf> {
        self.path("out", cli)?
            .ok_or_else(|| usage("an output directory is required (--out or `out` in the config)"))
    }

    fn input(&self, i: &InputOpts) -> Result<Option<(PathBuf, PathBuf)>> {
        match (self.path("edges", i.edges.clone())?, self.path("colors", i.colors.clone())?) {
            (Some(e), Some(c)) => Ok(Some((e, c))),
            (None, None) => Ok(None),
            _ => Err(usage("--edges and --colors must be given together")),
        }
    }
}

/// Runtime context shared by all subcommands.
pub struct RunContext {
    pub settings: Settings,
    pub threads: usize,
    pub strict: bool,
}

impl RunContext {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        let settings = match &cli.config {
            Some(p) => Settings::load(p)?,
            None => Settings::default(),
        };
        let threads = settings.pick("threads", cli.threads, 1)?;
        if threads < 1 {
            return Err(usage("threads must be at least 1"));
        }
        Ok(Self {
            settings,
            threads,
            strict: cli.strict,
        })
    }

    fn check_convergence(&self, unconverged: usize) -> Result<()> {
        if unconverged > 0 {
            log::warn!("{unconverged} ranking(s) stopped at the iteration cap");
            if self.strict {
                return Err(CliError::NonConvergence { count: unconverged }.into());
            }
        }
        Ok(())
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    let ctx = RunContext::from_cli(cli)?;
    match &cli.command {
        Command::Generate(a) => cmd_generate(&ctx, a),
        Command::Rank(a) => cmd_rank(&ctx, a),
        Command::Curve(a) => cmd_curve(&ctx, a),
        Command::Meanfield(a) => cmd_meanfield(&ctx, a),
        Command::Verify(a) => cmd_verify(&ctx, a),
        Command::Sweep(a) => cmd_sweep(&ctx, a),
        Command::Real(a) => cmd_real(&ctx, a),
    }
}

fn finish(command: &str, res: Resolver, seeds: Vec<u64>, started: Instant, out: &OutputDir) -> Result<()> {
    let manifest = RunManifest::new(command, res.echo, seeds, started, out);
    manifest.write(out.path())?;
    log::info!("wrote {} file(s) to {}", out.files().len() + 1, out.path().display());
    Ok(())
}

fn load_graph(edges: &Path, colors: &Path) -> Result<LabeledGraph> {
    let e = File::open(edges).with_context(|| format!("opening {}", edges.display()))?;
    let c = File::open(colors).with_context(|| format!("opening {}", colors.display()))?;
    let lg = load(BufReader::new(e), BufReader::new(c))
        .with_context(|| format!("loading {} with {}", edges.display(), colors.display()))?;
    if lg.unused_colors > 0 {
        log::warn!("{} colored node(s) have no edges and were dropped", lg.unused_colors);
    }
    Ok(lg)
}

fn cmd_generate(ctx: &RunContext, a: &GenerateArgs) -> Result<()> {
    let started = Instant::now();
    let mut res = Resolver::new(&ctx.settings);
    let (params, seed) = res.model(&a.model)?;
    let mut out = OutputDir::create(&res.out(a.out.clone())?)?;
    let (g, stats) = generate(&params, seed)?;
    let mut edges = Vec::new();
    write_edge_list(&g, &mut edges)?;
    let mut colors = Vec::new();
    write_colors(&g, &mut colors)?;
    out.write("edges.tsv", &String::from_utf8(edges)?)?;
    out.write("colors.tsv", &String::from_utf8(colors)?)?;
    let record = crate::experiment::ReplicaRecord {
        replica: 0,
        seed,
        stats,
        hri: g.hri().unwrap_or(f64::NAN),
        unconverged: 0,
    };
    out.write("replicas.csv", &schema::replicas_csv(&[record]))?;
    finish("generate", res, vec![seed], started, &out)
}

fn cmd_rank(ctx: &RunContext, a: &RankArgs) -> Result<()> {
    let started = Instant::now();
    let mut res = Resolver::new(&ctx.settings);
    let algo: AlgoSpec = res
        .get("algo", a.rank.algos.clone(), "hits".to_string())?
        .parse()
        .map_err(usage)?;
    let settings = res.rank(&a.rank)?;
    let (lg, seeds) = match res.input(&a.input)? {
        Some((e, c)) => (load_graph(&e, &c)?, Vec::new()),
        None => {
            let (params, seed) = res.model(&a.model)?;
            let (graph, _) = generate(&params, seed)?;
            let labels = (0..graph.node_count()).map(|v| v.to_string()).collect();
            (
                LabeledGraph {
                    graph,
                    labels,
                    unused_colors: 0,
                },
                vec![seed],
            )
        }
    };
    let mut out = OutputDir::create(&res.out(a.out.clone())?)?;
    let r = rank_graph(&lg.graph, algo, &settings)?;
    let mut csv = format!("{}\n", schema::RANK_HEADER);
    for (pos, &v) in r.order.iter().enumerate() {
        writeln!(csv, "{},{v},{},{},{}", pos + 1, lg.labels[v], lg.graph.color(v), r.scores[v]).unwrap();
    }
    out.write("rank.csv", &csv)?;
    finish("rank", res, seeds, started, &out)?;
    ctx.check_convergence(usize::from(!r.converged))
}

fn synthetic_config(ctx: &RunContext, res: &mut Resolver, model: &ModelArgs, rank: &RankOpts, grid: &GridOpts, reps: Option<usize>, algos: &str) -> Result<SyntheticConfig> {
    let (params, seed) = res.model(model)?;
    let reps = res.get("reps", reps, 100)?;
    let algos: Vec<AlgoSpec> = res.list("algos", rank.algos.clone(), algos)?;
    let mut cfg = SyntheticConfig::new(params, reps, seed, algos);
    cfg.rank = res.rank(rank)?;
    cfg.grid = Some(res.grid(grid, params.nodes)?);
    cfg.threads = ctx.threads;
    Ok(cfg)
}

fn seeds_of(cfg: &SyntheticConfig) -> Vec<u64> {
    (0..cfg.reps as u64).map(|k| replica_seed(cfg.base_seed, k)).collect()
}

fn cmd_curve(ctx: &RunContext, a: &CurveArgs) -> Result<()> {
    let started = Instant::now();
    let mut res = Resolver::new(&ctx.settings);
    let cfg = synthetic_config(ctx, &mut res, &a.model, &a.rank, &a.grid, a.reps, DEFAULT_ALGOS)?;
    let svg = res.get("svg", a.svg.then_some(true), false)?;
    let mut out = OutputDir::create(&res.out(a.out.clone())?)?;
    let result = run_synthetic(&cfg)?;
    out.write("curves.csv", &curve_compare(&result.curves)?)?;
    out.write("replicas.csv", &schema::replicas_csv(&result.replicas))?;
    if svg {
        let title = format!(
            "N={} d={} r={} rho={} ({} replicas)",
            cfg.params.nodes, cfg.params.outdeg, cfg.params.minority_ratio, cfg.params.homophily, cfg.reps
        );
        out.write("curves.svg", &svg::render(&title, &result.curves))?;
    }
    finish("curve", res, seeds_of(&cfg), started, &out)?;
    ctx.check_convergence(result.unconverged())
}

fn cmd_meanfield(ctx: &RunContext, a: &MeanfieldArgs) -> Result<()> {
    let started = Instant::now();
    let mut res = Resolver::new(&ctx.settings);
    let points: Vec<(f64, f64)> = if res.get("grid", a.grid.then_some(true), false)? {
        let rs = linear_grid(0.05, 0.5, 0.05);
        let rhos = linear_grid(0.05, 0.95, 0.05);
        rs.iter().flat_map(|&r| rhos.iter().map(move |&p| (r, p))).collect()
    } else {
        vec![(res.get("r", a.r, 0.3)?, res.get("rho", a.rho, 0.1)?)]
    };
    let mut csv = format!("{}\n", schema::MEANFIELD_HEADER);
    for (r, rho) in points {
        let rep = meanfield::report(r, rho).with_context(|| format!("at r={r}, rho={rho}"))?;
        csv.push_str(&rep.csv_row());
        csv.push('\n');
    }
    match res.path("out", a.out.clone())? {
        Some(dir) => {
            let mut out = OutputDir::create(&dir)?;
            out.write("meanfield.csv", &csv)?;
            finish("meanfield", res, Vec::new(), started, &out)
        }
        None => {
            print!("{csv}");
            Ok(())
        }
    }
}

fn cmd_verify(ctx: &RunContext, a: &VerifyArgs) -> Result<()> {
    let started = Instant::now();
    let mut res = Resolver::new(&ctx.settings);
    let default_r = join(&linear_grid(0.05, 0.5, 0.05));
    let default_rho = join(&linear_grid(0.05, 0.95, 0.05));
    let rs: Vec<f64> = res.list("r_values", a.r_values.clone(), &default_r)?;
    let rhos: Vec<f64> = res.list("rho_values", a.rho_values.clone(), &default_rho)?;
    let checks = verify_grid(&rs, &rhos)?;
    let mut csv = format!("{}\n", schema::VERIFY_HEADER);
    for c in &checks {
        writeln!(csv, "{},{},{},{},{}", c.r, c.rho, c.check.name, c.check.passed, c.check.margin).unwrap();
    }
    let mut scan = format!("{}\n", schema::F_SCAN_HEADER);
    let scan_rs = linear_grid(0.05, 0.5, 0.05);
    for &rho in rhos.iter().filter(|&&p| p > 0.0) {
        for (r, f) in meanfield::f_in_r_scan(rho, &scan_rs)? {
            writeln!(scan, "{rho},{r},{f}").unwrap();
        }
    }
    let failed = checks.iter().filter(|c| !c.check.passed).count();
    eprintln!("{} of {} checks passed", checks.len() - failed, checks.len());
    if let Some(dir) = res.path("out", a.out.clone())? {
        let mut out = OutputDir::create(&dir)?;
        out.write("verify.csv", &csv)?;
        out.write("f_scan.csv", &scan)?;
        finish("verify", res, Vec::new(), started, &out)?;
    }
    if failed > 0 {
        for c in checks.iter().filter(|c| !c.check.passed) {
            eprintln!("FAIL r={} rho={} {} margin={}", c.r, c.rho, c.check.name, c.check.margin);
        }
        return Err(CliError::ChecksFailed {
            failed,
            total: checks.len(),
        }
        .into());
    }
    Ok(())
}

fn join(values: &[f64]) -> String {
    values.iter().map(f64::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_sweep(ctx: &RunContext, a: &SweepArgs) -> Result<()> {
    let started = Instant::now();
    let mut res = Resolver::new(&ctx.settings);
    let axis = res
        .opt("axis", a.axis)?
        .ok_or_else(|| usage("--axis is required (rho or k)"))?;
    let raw_values = res
        .opt("values", a.values.clone())?
        .ok_or_else(|| usage("--values is required"))?;
    let input = res.input(&a.input)?;
    let mut csv = format!("{}\n", schema::SWEEP_HEADER);
    let mut seeds = Vec::new();
    let mut unconverged = 0;
    let mut svg_sets = Vec::new();

    match axis {
        Axis::Rho => {
            if input.is_some() {
                return Err(usage("the rho axis sweeps BPAM replicas and takes no input graph"));
            }
            let rhos: Vec<f64> = parse_list(&raw_values)?;
            if rhos.is_empty() {
                return Err(usage("--values must not be empty"));
            }
            let base = synthetic_config(ctx, &mut res, &a.model, &a.rank, &a.grid, a.reps, DEFAULT_ALGOS)?;
            for (i, &rho) in rhos.iter().enumerate() {
                let mut cfg = base.clone();
                cfg.params.homophily = rho;
                let out = run_synthetic(&cfg).with_context(|| format!("sweep rho={rho}"))?;
                if i == 0 {
                    seeds = seeds_of(&cfg);
                }
                unconverged += out.unconverged();
                push_sweep_rows(&mut csv, "rho", &rho.to_string(), &out.curves);
                svg_sets.push((format!("rho={rho}"), out.curves));
            }
        }
        Axis::K => {
            let ks: Vec<usize> = parse_list(&raw_values)?;
            if ks.is_empty() || ks.contains(&0) {
                return Err(usage("--values must list positive k"));
            }
            let weight = res.get("weight", a.weight, SubspaceWeight::Unit)?;
            let algos: Vec<AlgoSpec> = ks.iter().map(|&k| AlgoSpec::Subspace { k, weight }).collect();
            match input {
                Some((e, c)) => {
                    let lg = load_graph(&e, &c)?;
                    let settings = res.rank(&a.rank)?;
                    let grid = res.grid(&a.grid, lg.graph.node_count())?;
                    let (curves, u) = curves_for_graph(&lg.graph, &algos, &settings, &grid)?;
                    unconverged += u;
                    for ((k, algo), curve) in ks.iter().zip(&algos).zip(curves) {
                        let named = vec![(algo.to_string(), curve)];
                        push_sweep_rows(&mut csv, "k", &k.to_string(), &named);
                        svg_sets.push((format!("k={k}"), named));
                    }
                }
                None => {
                    let mut cfg = synthetic_config(ctx, &mut res, &a.model, &a.rank, &a.grid, a.reps, "hits")?;
                    cfg.algos = algos;
                    seeds = seeds_of(&cfg);
                    let out = run_synthetic(&cfg)?;
                    unconverged += out.unconverged();
                    for (k, named) in ks.iter().zip(out.curves) {
                        push_sweep_rows(&mut csv, "k", &k.to_string(), std::slice::from_ref(&named));
                        svg_sets.push((format!("k={k}"), vec![named]));
                    }
                }
            }
        }
    }

    let svg_on = res.get("svg", a.svg.then_some(true), false)?;
    let mut out = OutputDir::create(&res.out(a.out.clone())?)?;
    out.write("sweep.csv", &csv)?;
    if svg_on {
        let flat: Vec<(String, FairnessCurve)> = svg_sets
            .into_iter()
            .flat_map(|(label, curves)| curves.into_iter().map(move |(n, c)| (format!("{label} {n}"), c)))
            .collect();
        out.write("sweep.svg", &svg::render(&format!("sweep over {axis}"), &flat))?;
    }
    finish("sweep", res, seeds, started, &out)?;
    ctx.check_convergence(unconverged)
}

fn cmd_real(ctx: &RunContext, a: &RealArgs) -> Result<()> {
    let started = Instant::now();
    let mut res = Resolver::new(&ctx.settings);
    let (edges, colors) = res
        .input(&a.input)?
        .ok_or_else(|| usage("--edges and --colors are required"))?;
    let lg = load_graph(&edges, &colors)?;
    let g = &lg.graph;
    if g.color_count(Color::Red) == 0 || g.color_count(Color::Blue) == 0 {
        anyhow::bail!("both colors must be present; found a single-color graph");
    }
    let algos: Vec<AlgoSpec> = res.list("algos", a.rank.algos.clone(), REAL_ALGOS)?;
    let settings = res.rank(&a.rank)?;
    let grid = res.grid(&a.grid, g.node_count())?;
    let kind = res.get("degree_kind", a.degree_kind, DegreeKind::Total)?;
    let svg_on = res.get("svg", a.svg.then_some(true), false)?;
    let mut out = OutputDir::create(&res.out(a.out.clone())?)?;

    let (curves, unconverged) = curves_for_graph(g, &algos, &settings, &grid)?;
    let named: Vec<(String, FairnessCurve)> = algos.iter().map(|a| a.to_string()).zip(curves).collect();
    out.write("curves.csv", &curve_compare(&named)?)?;

    let (red, blue) = ccdf_by_color(g, kind);
    out.write("ccdf.csv", &ccdf_csv(&red, &blue))?;

    let mut nodes = format!("{}\n", schema::NODES_HEADER);
    for (v, label) in lg.labels.iter().enumerate() {
        writeln!(nodes, "{v},{label},{}", g.color(v)).unwrap();
    }
    out.write("nodes.csv", &nodes)?;

    let hri = g.hri()?;
    let summary = format!(
        "{}\n{},{},{},{},{},{}\n",
        schema::SUMMARY_HEADER,
        g.node_count(),
        g.edge_count(),
        g.minority_fraction(),
        g.cross_edge_count(),
        hri,
        lg.unused_colors
    );
    out.write("summary.csv", &summary)?;
    if svg_on {
        let title = format!("{} ({} nodes, HRI {:.3})", edges.display(), g.node_count(), hri);
        out.write("curves.svg", &svg::render(&title, &named))?;
    }
    finish("real", res, Vec::new(), started, &out)?;
    ctx.check_convergence(unconverged)
}
