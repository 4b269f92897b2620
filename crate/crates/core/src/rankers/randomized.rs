use super::{Algorithm, IterationControl, RankingResult};
use crate::error::{invalid, Result};
use crate::graph::ColoredDigraph;
use crate::linalg::l1_distance;

/// Restart probability, the same 0.15 as PageRank's.
pub const DEFAULT_EPS: f64 = 0.15;

/// Randomized HITS with uniform restart.
///
/// Iterates, from `h = 1`,
///
/// ```text
/// a = eps 1 + (1 - eps) A_rowᵀ h
/// h = eps 1 + (1 - eps) A_col a
/// ```
///
/// with `A_row` the out-degree normalized and `A_col` the in-degree
/// normalized adjacency. Nodes without out-links (rows) or in-links
/// (columns) get a uniform `1/n` row or column. Convergence is measured on
/// the sum-normalized iterates; returned scores are the raw fixed point.
pub fn randomized_hits(
    g: &ColoredDigraph,
    eps: f64,
    ctrl: &IterationControl,
) -> Result<(RankingResult, RankingResult)> {
    ctrl.validate()?;
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(invalid("eps", "must lie in (0, 1]"));
    }
    let n = g.node_count();
    let nf = n as f64;
    let inv_out: Vec<f64> = (0..n).map(|v| inv(g.out_degree(v))).collect();
    let inv_in: Vec<f64> = (0..n).map(|v| inv(g.in_degree(v))).collect();

    let mut auth = vec![0.0; n];
    let mut hub = vec![1.0; n];
    let mut next_auth = vec![0.0; n];
    let mut next_hub = vec![0.0; n];
    let mut spread = vec![0.0; n];
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < ctrl.max_iter {
        iterations += 1;
        // a = eps + (1 - eps) A_rowᵀ h
        let mut uniform = 0.0;
        for w in 0..n {
            if inv_out[w] == 0.0 {
                spread[w] = 0.0;
                uniform += hub[w] / nf;
            } else {
                spread[w] = hub[w] * inv_out[w];
            }
        }
        g.pull_into(&spread, &mut next_auth);
        next_auth
            .iter_mut()
            .for_each(|a| *a = eps + (1.0 - eps) * (*a + uniform));
        // h = eps + (1 - eps) A_col a
        let mut uniform = 0.0;
        for v in 0..n {
            if inv_in[v] == 0.0 {
                spread[v] = 0.0;
                uniform += next_auth[v] / nf;
            } else {
                spread[v] = next_auth[v] * inv_in[v];
            }
        }
        g.push_into(&spread, &mut next_hub);
        next_hub
            .iter_mut()
            .for_each(|h| *h = eps + (1.0 - eps) * (*h + uniform));

        residual = normalized_distance(&auth, &next_auth).max(normalized_distance(&hub, &next_hub));
        std::mem::swap(&mut auth, &mut next_auth);
        std::mem::swap(&mut hub, &mut next_hub);
        if residual < ctrl.tol {
            converged = true;
            break;
        }
    }
    Ok((
        RankingResult::new(Algorithm::RandomizedHitsAuthority, auth, iterations, converged, residual),
        RankingResult::new(Algorithm::RandomizedHitsHub, hub, iterations, converged, residual),
    ))
}

fn inv(d: usize) -> f64 {
    if d == 0 {
        0.0
    } else {
        1.0 / d as f64
    }
}

fn normalized_distance(a: &[f64], b: &[f64]) -> f64 {
    let sa: f64 = a.iter().sum();
    let sb: f64 = b.iter().sum();
    if sa <= 0.0 || sb <= 0.0 {
        return l1_distance(a, b);
    }
    a.iter().zip(b).map(|(x, y)| (x / sa - y / sb).abs()).sum()
}
