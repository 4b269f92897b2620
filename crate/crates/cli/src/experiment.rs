//! Monte-Carlo replication over BPAM graphs and single-graph analysis.

use std::fmt;
use std::str::FromStr;

use anyhow::{Context, Result};
use rayon::prelude::*;

use fairank_core::bpam::{generate, replica_seed, BpamParams, GenerationStats};
use fairank_core::fairness::{average_curves, default_grid, minority_share_curve, FairnessCurve};
use fairank_core::graph::{ColoredDigraph, DegreeKind};
use fairank_core::rankers::{
    degree_rank, hits, pagerank, randomized_hits, rank_order_tie_shuffle, subspace_hits, IterationControl,
    RankingResult, SubspaceWeight, DEFAULT_EPS, DEFAULT_ETA,
};

use crate::error::usage;

/// A ranker selectable from the command line. Names match
/// [`fairank_core::rankers::Algorithm`]'s display form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlgoSpec {
    Degree(DegreeKind),
    PageRank,
    Hits,
    HitsHub,
    RandomizedHits,
    RandomizedHitsHub,
    Subspace { k: usize, weight: SubspaceWeight },
}

impl fmt::Display for AlgoSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgoSpec::Degree(DegreeKind::In) => write!(f, "degree"),
            AlgoSpec::Degree(DegreeKind::Out) => write!(f, "outdegree"),
            AlgoSpec::Degree(DegreeKind::Total) => write!(f, "total_degree"),
            AlgoSpec::PageRank => write!(f, "pagerank"),
            AlgoSpec::Hits => write!(f, "hits"),
            AlgoSpec::HitsHub => write!(f, "hits_hub"),
            AlgoSpec::RandomizedHits => write!(f, "rhits"),
            AlgoSpec::RandomizedHitsHub => write!(f, "rhits_hub"),
            AlgoSpec::Subspace { k, weight } => write!(f, "subspace_k{k}_{weight}"),
        }
    }
}

impl FromStr for AlgoSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "degree" | "indegree" => AlgoSpec::Degree(DegreeKind::In),
            "outdegree" => AlgoSpec::Degree(DegreeKind::Out),
            "total_degree" => AlgoSpec::Degree(DegreeKind::Total),
            "pagerank" => AlgoSpec::PageRank,
            "hits" => AlgoSpec::Hits,
            "hits_hub" => AlgoSpec::HitsHub,
            "rhits" => AlgoSpec::RandomizedHits,
            "rhits_hub" => AlgoSpec::RandomizedHitsHub,
            other => {
                let rest = other
                    .strip_prefix("subspace_k")
                    .ok_or_else(|| format!("unknown algorithm {other:?}"))?;
                let (k, weight) = rest.split_once('_').unwrap_or((rest, "unit"));
                let k = k.parse().map_err(|_| format!("bad k in {other:?}"))?;
                AlgoSpec::Subspace { k, weight: weight.parse()? }
            }
        })
    }
}

/// Ranker hyperparameters shared by every algorithm in a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankSettings {
    pub ctrl: IterationControl,
    pub eta: f64,
    pub eps: f64,
    /// Break score ties randomly with this seed instead of by node id.
    pub tie_shuffle: Option<u64>,
}

impl Default for RankSettings {
    fn default() -> Self {
        Self {
            ctrl: IterationControl::default(),
            eta: DEFAULT_ETA,
            eps: DEFAULT_EPS,
            tie_shuffle: None,
        }
    }
}

pub fn rank_graph(g: &ColoredDigraph, algo: AlgoSpec, s: &RankSettings) -> Result<RankingResult> {
    let mut result = match algo {
        AlgoSpec::Degree(kind) => degree_rank(g, kind),
        AlgoSpec::PageRank => pagerank(g, s.eta, &s.ctrl)?,
        AlgoSpec::Hits => hits(g, &s.ctrl)?.0,
        AlgoSpec::HitsHub => hits(g, &s.ctrl)?.1,
        AlgoSpec::RandomizedHits => randomized_hits(g, s.eps, &s.ctrl)?.0,
        AlgoSpec::RandomizedHitsHub => randomized_hits(g, s.eps, &s.ctrl)?.1,
        AlgoSpec::Subspace { k, weight } => subspace_hits(g, k.min(g.node_count()), weight, &s.ctrl)?,
    };
    if let Some(seed) = s.tie_shuffle {
        result.order = rank_order_tie_shuffle(&result.scores, seed);
    }
    Ok(result)
}

/// Fairness curve of every algorithm on one graph, plus how many rankings
/// stopped before converging.
pub fn curves_for_graph(
    g: &ColoredDigraph,
    algos: &[AlgoSpec],
    settings: &RankSettings,
    grid: &[f64],
) -> Result<(Vec<FairnessCurve>, usize)> {
    let mut curves = Vec::with_capacity(algos.len());
    let mut unconverged = 0;
    for &algo in algos {
        let r = rank_graph(g, algo, settings).with_context(|| format!("ranking with {algo}"))?;
        if !r.converged {
            unconverged += 1;
        }
        for w in &r.warnings {
            log::warn!("{algo}: {w:?}");
        }
        curves.push(minority_share_curve(&r.order, g.colors(), grid)?);
    }
    Ok((curves, unconverged))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticConfig {
    pub params: BpamParams,
    pub reps: usize,
    pub base_seed: u64,
    pub algos: Vec<AlgoSpec>,
    /// Explicit grid; `None` means `default_grid(n, grid_points)`.
    pub grid: Option<Vec<f64>>,
    pub grid_points: usize,
    pub rank: RankSettings,
    pub threads: usize,
}

impl SyntheticConfig {
    pub fn new(params: BpamParams, reps: usize, base_seed: u64, algos: Vec<AlgoSpec>) -> Self {
        Self {
            params,
            reps,
            base_seed,
            algos,
            grid: None,
            grid_points: 40,
            rank: RankSettings::default(),
            threads: 1,
        }
    }

    pub fn resolved_grid(&self) -> Vec<f64> {
        self.grid
            .clone()
            .unwrap_or_else(|| default_grid(self.params.nodes, self.grid_points))
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        self.rank.ctrl.validate()?;
        if self.reps < 1 {
            return Err(usage("reps must be at least 1"));
        }
        if self.algos.is_empty() {
            return Err(usage("at least one algorithm is required"));
        }
        if self.threads < 1 {
            return Err(usage("threads must be at least 1"));
        }
        Ok(())
    }
}

/// One replica's graph statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplicaRecord {
    pub replica: usize,
    pub seed: u64,
    pub stats: GenerationStats,
    pub hri: f64,
    pub unconverged: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticOutput {
    /// `(algorithm name, replica-mean curve)` in the order requested.
    pub curves: Vec<(String, FairnessCurve)>,
    /// Per-replica curves, `replica_curves[replica][algo]`.
    pub replica_curves: Vec<Vec<FairnessCurve>>,
    pub replicas: Vec<ReplicaRecord>,
}

impl SyntheticOutput {
    pub fn unconverged(&self) -> usize {
        self.replicas.iter().map(|r| r.unconverged).sum()
    }

    pub fn curve(&self, name: &str) -> Option<&FairnessCurve> {
        self.curves.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }
}

/// Runs `f(replica, seed, graph, stats)` on every replica.
///
/// Replicas fan out over a pool of `threads` workers; results come back in
/// replica order, so the outcome does not depend on the thread count.
pub fn map_replicas<T, F>(params: &BpamParams, reps: usize, base_seed: u64, threads: usize, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize, u64, &ColoredDigraph, &GenerationStats) -> Result<T> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .context("building worker pool")?;
    pool.install(|| {
        (0..reps)
            .into_par_iter()
            .map(|k| {
                let seed = replica_seed(base_seed, k as u64);
                let (g, stats) = generate(params, seed)?;
                f(k, seed, &g, &stats)
            })
            .collect::<Vec<Result<T>>>()
            .into_iter()
            .enumerate()
            .map(|(k, r)| r.with_context(|| format!("replica {k} (seed {})", replica_seed(base_seed, k as u64))))
            .collect()
    })
}

/// Replica-averaged fairness curves for every configured algorithm.
pub fn run_synthetic(cfg: &SyntheticConfig) -> Result<SyntheticOutput> {
    cfg.validate()?;
    let grid = cfg.resolved_grid();
    let per_replica = map_replicas(&cfg.params, cfg.reps, cfg.base_seed, cfg.threads, |k, seed, g, stats| {
        let (curves, unconverged) = curves_for_graph(g, &cfg.algos, &cfg.rank, &grid)?;
        let record = ReplicaRecord {
            replica: k,
            seed,
            stats: *stats,
            hri: g.hri().unwrap_or(f64::NAN),
            unconverged,
        };
        Ok((curves, record))
    })?;
    let (replica_curves, replicas): (Vec<_>, Vec<_>) = per_replica.into_iter().unzip();
    let curves = cfg
        .algos
        .iter()
        .enumerate()
        .map(|(i, algo)| {
            let column: Vec<FairnessCurve> = replica_curves.iter().map(|c: &Vec<FairnessCurve>| c[i].clone()).collect();
            Ok((algo.to_string(), average_curves(&column)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SyntheticOutput {
        curves,
        replica_curves,
        replicas,
    })
}
