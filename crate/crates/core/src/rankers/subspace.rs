use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Algorithm, IterationControl, RankWarning, RankingResult};
use crate::error::{invalid, Result};
use crate::graph::ColoredDigraph;
use crate::linalg::{dot, norm2, orthonormalize, symmetric_eigen};

/// Loosest subspace-angle tolerance accepted; tighter `IterationControl::tol`
/// values take precedence.
const MAX_ANGLE_TOL: f64 = 1e-8;
/// Extra block columns beyond the `k` requested.
const OVERSAMPLING: usize = 2;
/// Eigenvalues below this fraction of the largest count as numerically zero.
const RANK_TOL: f64 = 1e-12;
const START_SEED: u64 = 0x5eed_a7a7;

/// Eigenvalue weighting `f(λ)` in the subspace score.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceWeight {
    /// `f(λ) = 1`
    Unit,
    /// `f(λ) = λ²`
    LambdaSq,
}

impl SubspaceWeight {
    pub fn apply(self, lambda: f64) -> f64 {
        match self {
            SubspaceWeight::Unit => 1.0,
            SubspaceWeight::LambdaSq => lambda * lambda,
        }
    }
}

impl fmt::Display for SubspaceWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubspaceWeight::Unit => write!(f, "unit"),
            SubspaceWeight::LambdaSq => write!(f, "lambda2"),
        }
    }
}

impl FromStr for SubspaceWeight {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "unit" => Ok(SubspaceWeight::Unit),
            "lambda2" | "lambda_sq" => Ok(SubspaceWeight::LambdaSq),
            other => Err(format!("unknown weight {other:?}, expected unit or lambda2")),
        }
    }
}

/// Leading eigenpairs of `AᵀA`, eigenvalues descending.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPairs {
    pub values: Vec<f64>,
    /// Unit-norm eigenvectors, `vectors[i]` pairs with `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    pub iterations: usize,
    pub converged: bool,
    /// Sine of the largest principal angle between the last two Ritz subspaces.
    pub angle: f64,
}

fn apply_gram(g: &ColoredDigraph, x: &[f64], tmp: &mut [f64], out: &mut [f64]) {
    g.push_into(x, tmp);
    g.pull_into(tmp, out);
}

/// Top-`k` eigenpairs of `AᵀA` by orthogonal subspace iteration with
/// Rayleigh-Ritz extraction.
///
/// The block carries `k + 2` columns (capped at `n`) and is
/// re-orthonormalized every step. Iteration stops once the span of the
/// leading `k` Ritz vectors moves by less than `min(ctrl.tol, 1e-8)`.
pub fn top_eigenpairs(g: &ColoredDigraph, k: usize, ctrl: &IterationControl) -> Result<EigenPairs> {
    ctrl.validate()?;
    let n = g.node_count();
    if k < 1 || k > n {
        return Err(invalid("k", format!("must lie in [1, {n}]")));
    }
    let p = (k + OVERSAMPLING).min(n);
    let angle_tol = ctrl.tol.min(MAX_ANGLE_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(START_SEED);
    let mut q: Vec<Vec<f64>> = (0..p)
        .map(|_| (0..n).map(|_| rng.random_range(-1.0..1.0)).collect())
        .collect();
    refill(&mut q, &mut rng);

    let mut tmp = vec![0.0; n];
    let mut w: Vec<Vec<f64>> = vec![vec![0.0; n]; p];
    let mut prev_top: Option<Vec<Vec<f64>>> = None;
    let mut values = vec![0.0; p];
    let mut angle = f64::INFINITY;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < ctrl.max_iter {
        iterations += 1;
        for (qi, wi) in q.iter().zip(w.iter_mut()) {
            apply_gram(g, qi, &mut tmp, wi);
        }
        // Rayleigh-Ritz on span(q)
        let h: Vec<Vec<f64>> = (0..p)
            .map(|i| (0..p).map(|j| 0.5 * (dot(&q[i], &w[j]) + dot(&q[j], &w[i]))).collect())
            .collect();
        let (theta, u) = symmetric_eigen(&h);
        let ritz = combine(&q, &u);
        let ritz_w = combine(&w, &u);
        values = theta;

        if let Some(prev) = &prev_top {
            angle = subspace_angle(prev, &ritz[..k]);
            if angle < angle_tol {
                converged = true;
                q = ritz;
                break;
            }
        }
        prev_top = Some(ritz[..k].to_vec());
        q = ritz_w;
        refill(&mut q, &mut rng);
    }

    // `q` holds Ritz vectors on convergence; otherwise the latest estimate
    // is in `prev_top`.
    let vectors = if converged {
        q.into_iter().take(k).collect()
    } else {
        prev_top.unwrap_or_else(|| q.into_iter().take(k).collect())
    };
    Ok(EigenPairs {
        values: values.into_iter().take(k).map(|v| v.max(0.0)).collect(),
        vectors,
        iterations,
        converged,
        angle,
    })
}

/// Columns `Σ_j basis[j] * u[i][j]` for each coefficient vector `u[i]`.
fn combine(basis: &[Vec<f64>], coeffs: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = basis[0].len();
    coeffs
        .iter()
        .map(|c| {
            let mut v = vec![0.0; n];
            for (b, &cj) in basis.iter().zip(c) {
                if cj != 0.0 {
                    v.iter_mut().zip(b).for_each(|(x, y)| *x += cj * y);
                }
            }
            v
        })
        .collect()
}

/// Orthonormalizes, replacing collapsed columns with fresh random directions.
fn refill(q: &mut [Vec<f64>], rng: &mut ChaCha8Rng) {
    for _ in 0..4 {
        let collapsed = orthonormalize(q);
        if collapsed.is_empty() {
            return;
        }
        for j in collapsed {
            q[j].iter_mut().for_each(|x| *x = rng.random_range(-1.0..1.0));
        }
    }
    orthonormalize(q);
}

/// Largest distance from a vector of `new` to `span(old)`; both orthonormal.
fn subspace_angle(old: &[Vec<f64>], new: &[Vec<f64>]) -> f64 {
    new.iter()
        .map(|v| {
            let mut r = v.clone();
            for o in old {
                let c = dot(o, v);
                r.iter_mut().zip(o).for_each(|(x, y)| *x -= c * y);
            }
            norm2(&r)
        })
        .fold(0.0, f64::max)
}

/// Subspace HITS: `a_j = Σ_{i<k} f(λ_i) v_i[j]²` over the top `k`
/// eigenpairs of `AᵀA`.
///
/// Squaring removes the eigenvector sign ambiguity. If fewer than `k`
/// eigenvalues are numerically non-zero the result carries
/// [`RankWarning::DegenerateSubspace`].
pub fn subspace_hits(
    g: &ColoredDigraph,
    k: usize,
    weight: SubspaceWeight,
    ctrl: &IterationControl,
) -> Result<RankingResult> {
    let pairs = top_eigenpairs(g, k, ctrl)?;
    let n = g.node_count();
    let mut scores = vec![0.0; n];
    for (lambda, v) in pairs.values.iter().zip(&pairs.vectors) {
        let f = weight.apply(*lambda);
        scores.iter_mut().zip(v).for_each(|(s, x)| *s += f * x * x);
    }
    let mut result = RankingResult::new(
        Algorithm::SubspaceHits { k, weight },
        scores,
        pairs.iterations,
        pairs.converged,
        pairs.angle,
    );
    let top = pairs.values.first().copied().unwrap_or(0.0);
    let numeric_rank = pairs.values.iter().filter(|&&l| l > RANK_TOL * top).count();
    if numeric_rank < k {
        result.warnings.push(RankWarning::DegenerateSubspace { k, numeric_rank });
    }
    Ok(result)
}
