//! Link-analysis rankers.
//!
//! Every ranker returns a [`RankingResult`] whose `order` sorts nodes by
//! descending score and breaks ties by ascending node id, so every ranking
//! is total and reproducible.

mod degree;
mod hits;
mod pagerank;
mod randomized;
mod subspace;

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use degree::degree_rank;
pub use hits::{hits, hits_trace, HitsTrace, EIGENGAP_TOL};
pub use pagerank::{pagerank, DEFAULT_ETA};
pub use randomized::{randomized_hits, DEFAULT_EPS};
pub use subspace::{subspace_hits, top_eigenpairs, EigenPairs, SubspaceWeight};

use crate::error::{invalid, Result};
use crate::graph::{DegreeKind, NodeId};

/// Stopping rule for the iterative rankers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationControl {
    /// L1 distance between successive normalized iterates.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for IterationControl {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 1000,
        }
    }
}

impl IterationControl {
    pub fn new(tol: f64, max_iter: usize) -> Result<Self> {
        let c = Self { tol, max_iter };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(invalid("tol", "must be positive"));
        }
        if self.max_iter < 1 {
            return Err(invalid("max_iter", "must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Algorithm {
    Degree(DegreeKind),
    PageRank,
    HitsAuthority,
    HitsHub,
    RandomizedHitsAuthority,
    RandomizedHitsHub,
    SubspaceHits { k: usize, weight: SubspaceWeight },
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Degree(DegreeKind::In) => write!(f, "degree"),
            Algorithm::Degree(DegreeKind::Out) => write!(f, "outdegree"),
            Algorithm::Degree(DegreeKind::Total) => write!(f, "total_degree"),
            Algorithm::PageRank => write!(f, "pagerank"),
            Algorithm::HitsAuthority => write!(f, "hits"),
            Algorithm::HitsHub => write!(f, "hits_hub"),
            Algorithm::RandomizedHitsAuthority => write!(f, "rhits"),
            Algorithm::RandomizedHitsHub => write!(f, "rhits_hub"),
            Algorithm::SubspaceHits { k, weight } => write!(f, "subspace_k{k}_{weight}"),
        }
    }
}

/// Numerical caveats attached to a ranking.
#[derive(Debug, Clone, PartialEq)]
pub enum RankWarning {
    /// The top eigenvalue of `AᵀA` is not simple; the limit depends on the
    /// starting vector.
    DegenerateEigengap { lambda1: f64, lambda2: f64 },
    /// Fewer than `k` eigenvalues are numerically non-zero.
    DegenerateSubspace { k: usize, numeric_rank: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingResult {
    pub algorithm: Algorithm,
    pub scores: Vec<f64>,
    /// Node ids, best first.
    pub order: Vec<NodeId>,
    pub iterations: usize,
    pub converged: bool,
    pub residual: f64,
    pub warnings: Vec<RankWarning>,
}

impl RankingResult {
    pub(crate) fn new(
        algorithm: Algorithm,
        scores: Vec<f64>,
        iterations: usize,
        converged: bool,
        residual: f64,
    ) -> Self {
        let order = rank_order(&scores);
        Self {
            algorithm,
            scores,
            order,
            iterations,
            converged,
            residual,
            warnings: Vec::new(),
        }
    }

    /// `rank[v]` is the 1-based position of node `v` in `order`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut ranks = vec![0; self.order.len()];
        for (pos, &v) in self.order.iter().enumerate() {
            ranks[v] = pos + 1;
        }
        ranks
    }

    pub fn is_degenerate(&self) -> bool {
        !self.warnings.is_empty()
    }
}

/// Sorts node ids by descending score, ascending id on ties.
pub fn rank_order(scores: &[f64]) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    order
}

/// Like [`rank_order`] but breaks ties by a random key drawn from `seed`.
pub fn rank_order_tie_shuffle(scores: &[f64], seed: u64) -> Vec<NodeId> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let keys: Vec<u64> = (0..scores.len()).map(|_| rng.random()).collect();
    let mut order: Vec<NodeId> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| {
        scores[b]
            .total_cmp(&scores[a])
            .then(keys[a].cmp(&keys[b]))
            .then(a.cmp(&b))
    });
    order
}
