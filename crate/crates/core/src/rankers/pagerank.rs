use super::{Algorithm, IterationControl, RankingResult};
use crate::error::{invalid, Result};
use crate::graph::ColoredDigraph;
use crate::linalg::{l1_distance, normalize_l1};

/// Damping used throughout (restart probability 0.15).
pub const DEFAULT_ETA: f64 = 0.85;

/// PageRank by power iteration with a uniform teleport vector.
///
/// Solves `x = eta (P x + m/n 1) + (1 - eta)/n 1`, where `P` is the
/// out-degree normalized transition matrix and `m` is the mass sitting on
/// dangling nodes, redistributed uniformly. Scores sum to one after every
/// iteration.
pub fn pagerank(g: &ColoredDigraph, eta: f64, ctrl: &IterationControl) -> Result<RankingResult> {
    ctrl.validate()?;
    if !(0.0..1.0).contains(&eta) {
        return Err(invalid("eta", "must lie in [0, 1)"));
    }
    let n = g.node_count();
    let inv_out: Vec<f64> = (0..n)
        .map(|v| match g.out_degree(v) {
            0 => 0.0,
            d => 1.0 / d as f64,
        })
        .collect();
    let mut x = vec![1.0 / n as f64; n];
    let mut spread = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < ctrl.max_iter {
        iterations += 1;
        let mut dangling = 0.0;
        for v in 0..n {
            spread[v] = x[v] * inv_out[v];
            if inv_out[v] == 0.0 {
                dangling += x[v];
            }
        }
        g.pull_into(&spread, &mut next);
        let base = (eta * dangling + 1.0 - eta) / n as f64;
        next.iter_mut().for_each(|y| *y = eta * *y + base);
        normalize_l1(&mut next);
        residual = l1_distance(&x, &next);
        std::mem::swap(&mut x, &mut next);
        if residual < ctrl.tol {
            converged = true;
            break;
        }
    }
    Ok(RankingResult::new(
        Algorithm::PageRank,
        x,
        iterations,
        converged,
        residual,
    ))
}
