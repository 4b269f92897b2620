use super::subspace::top_eigenpairs;
use super::{Algorithm, IterationControl, RankWarning, RankingResult};
use crate::error::{invalid, Error, Result};
use crate::graph::ColoredDigraph;
use crate::linalg::{l1_distance, normalize_l2};

/// Relative gap `(λ1 - λ2) / λ1` of `AᵀA` below which the principal
/// eigenvalue is treated as repeated.
pub const EIGENGAP_TOL: f64 = 1e-6;

/// HITS by alternating power iteration from `h = 1`.
///
/// Each half step is L2-normalized. The authority vector converges to the
/// principal eigenvector of `AᵀA` and the hub vector to that of `AAᵀ`. When
/// that eigenvalue is numerically repeated the limit depends on the start
/// vector and both results carry [`RankWarning::DegenerateEigengap`].
///
/// Returns `(authorities, hubs)`.
pub fn hits(g: &ColoredDigraph, ctrl: &IterationControl) -> Result<(RankingResult, RankingResult)> {
    ctrl.validate()?;
    if g.edge_count() == 0 {
        return Err(Error::ZeroMatrix);
    }
    let n = g.node_count();
    let mut hub = vec![1.0; n];
    let mut auth = vec![0.0; n];
    let mut next_auth = vec![0.0; n];
    let mut next_hub = vec![0.0; n];
    let mut residual = f64::INFINITY;
    let mut iterations = 0;
    let mut converged = false;
    normalize_l2(&mut hub);

    while iterations < ctrl.max_iter {
        iterations += 1;
        g.pull_into(&hub, &mut next_auth);
        normalize_l2(&mut next_auth);
        g.push_into(&next_auth, &mut next_hub);
        normalize_l2(&mut next_hub);
        residual = l1_distance(&auth, &next_auth).max(l1_distance(&hub, &next_hub));
        std::mem::swap(&mut auth, &mut next_auth);
        std::mem::swap(&mut hub, &mut next_hub);
        if residual < ctrl.tol {
            converged = true;
            break;
        }
    }

    let mut warnings = Vec::new();
    if n >= 2 {
        let pairs = top_eigenpairs(g, 2, ctrl)?;
        let (l1, l2) = (pairs.values[0], pairs.values[1]);
        if l1 > 0.0 && (l1 - l2) <= EIGENGAP_TOL * l1 {
            warnings.push(RankWarning::DegenerateEigengap {
                lambda1: l1,
                lambda2: l2,
            });
        }
    }

    let mut authorities = RankingResult::new(Algorithm::HitsAuthority, auth, iterations, converged, residual);
    let mut hubs = RankingResult::new(Algorithm::HitsHub, hub, iterations, converged, residual);
    authorities.warnings = warnings.clone();
    hubs.warnings = warnings;
    Ok((authorities, hubs))
}

/// Unnormalized HITS authority iterates `a(1), ..., a(t_max)` from `h(0) = 1`.
///
/// `a(1)` is the indegree vector and `a(t+1) = AᵀA a(t)`, so `a(t)(v)` counts
/// backward-forward paths out of `v`. Iterates are rescaled by exact powers of
/// two to stay finite; [`HitsTrace::unnormalized`] undoes the scaling.
#[derive(Debug, Clone, PartialEq)]
pub struct HitsTrace {
    scaled: Vec<Vec<f64>>,
    exponents: Vec<i32>,
}

/// Rescale once the largest entry exceeds `2^RESCALE_BITS`.
const RESCALE_BITS: i32 = 512;

impl HitsTrace {
    pub fn len(&self) -> usize {
        self.scaled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scaled.is_empty()
    }

    /// Iterate `t` (1-based) divided by `2^exponent(t)`.
    pub fn scaled(&self, t: usize) -> &[f64] {
        &self.scaled[t - 1]
    }

    /// Power-of-two scale applied to iterate `t`.
    pub fn exponent(&self, t: usize) -> i32 {
        self.exponents[t - 1]
    }

    /// Iterate `t` at its true magnitude (may overflow to infinity).
    pub fn unnormalized(&self, t: usize) -> Vec<f64> {
        let e = self.exponent(t);
        self.scaled(t).iter().map(|x| x * 2f64.powi(e)).collect()
    }
}

pub fn hits_trace(g: &ColoredDigraph, t_max: usize) -> Result<HitsTrace> {
    if t_max < 1 {
        return Err(invalid("t_max", "must be at least 1"));
    }
    let n = g.node_count();
    let ones = vec![1.0; n];
    let mut a = vec![0.0; n];
    g.pull_into(&ones, &mut a);
    let mut scaled = vec![a];
    let mut exponents = vec![0i32];
    let mut h = vec![0.0; n];
    for _ in 1..t_max {
        let prev = scaled.last().unwrap();
        let mut next = vec![0.0; n];
        g.push_into(prev, &mut h);
        g.pull_into(&h, &mut next);
        let mut e = *exponents.last().unwrap();
        let max = next.iter().fold(0.0f64, |m, &x| m.max(x));
        if max > 2f64.powi(RESCALE_BITS) {
            let factor = 2f64.powi(-RESCALE_BITS);
            next.iter_mut().for_each(|x| *x *= factor);
            e += RESCALE_BITS;
        }
        scaled.push(next);
        exponents.push(e);
    }
    Ok(HitsTrace { scaled, exponents })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue as B, Red as R};
    use crate::graph::DegreeKind;
    use crate::linalg::dot;
    use nalgebra::DMatrix;

    fn dense_principal(g: &ColoredDigraph) -> Vec<f64> {
        let n = g.node_count();
        let mut a = DMatrix::<f64>::zeros(n, n);
        for (s, t) in g.edges() {
            a[(s, t)] += 1.0;
        }
        let m = a.transpose() * &a;
        let eig = m.symmetric_eigen();
        let (imax, _) = eig
            .eigenvalues
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.total_cmp(y.1))
            .unwrap();
        eig.eigenvectors.column(imax).iter().copied().collect()
    }

    /// Counts alternating paths `v <- w -> z <- ...` with `back` backward steps.
    fn path_count(edges: &[(usize, usize)], v: usize, back: usize) -> u64 {
        let mut total = 0;
        for &(w, target) in edges {
            if target != v {
                continue;
            }
            if back == 1 {
                total += 1;
            } else {
                for &(src, z) in edges {
                    if src == w {
                        total += path_count(edges, z, back - 1);
                    }
                }
            }
        }
        total
    }

    #[test]
    fn star_has_single_authority() {
        let g = ColoredDigraph::from_edge_list(&[(1, 0), (2, 0), (3, 0), (4, 0)], &[R, B, B, R, B])
            .unwrap();
        let (auth, hubs) = hits(&g, &IterationControl::default()).unwrap();
        assert!((auth.scores[0] - 1.0).abs() < 1e-12);
        assert!(auth.scores[1..].iter().all(|&s| s == 0.0));
        assert_eq!(auth.order[0], 0);
        assert!(hubs.scores[1..].windows(2).all(|w| (w[0] - w[1]).abs() < 1e-15));
        assert_eq!(hubs.scores[0], 0.0);
    }

    #[test]
    fn eight_node_graph_matches_dense_eigenvector() {
        let edges = [
            (0, 1), (0, 2), (1, 2), (2, 3), (3, 0), (4, 2), (4, 5), (5, 6),
            (6, 2), (7, 1), (7, 2), (3, 5), (1, 6), (6, 7), (5, 1),
        ];
        let g = ColoredDigraph::from_edge_list(&edges, &[R, B, B, R, B, B, R, B]).unwrap();
        let (auth, _) = hits(&g, &IterationControl::default()).unwrap();
        assert!(auth.converged);
        assert!(auth.warnings.is_empty());
        let dense = dense_principal(&g);
        let cos = dot(&auth.scores, &dense).abs();
        assert!(cos >= 1.0 - 1e-8, "cosine {cos}");
        assert!(auth.scores.iter().all(|&s| s >= 0.0));
    }

    #[test]
    fn disjoint_two_cycles_are_flagged() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1), (1, 0), (2, 3), (3, 2)], &[R, R, B, B]).unwrap();
        let (auth, hubs) = hits(&g, &IterationControl::default()).unwrap();
        assert!(matches!(auth.warnings[0], RankWarning::DegenerateEigengap { .. }));
        assert!(hubs.is_degenerate());
    }

    #[test]
    fn trace_first_iterate_is_indegree() {
        let edges = [(0, 1), (2, 1), (1, 3), (3, 0), (2, 3), (2, 3)];
        let g = ColoredDigraph::from_edge_list(&edges, &[R, B, B, R]).unwrap();
        let tr = hits_trace(&g, 3).unwrap();
        let indeg: Vec<f64> = g.degrees(DegreeKind::In).iter().map(|&d| d as f64).collect();
        assert_eq!(tr.unnormalized(1), indeg);
    }

    #[test]
    fn trace_on_two_cycle_is_constant() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1), (1, 0)], &[R, B]).unwrap();
        let tr = hits_trace(&g, 5).unwrap();
        for t in 1..=5 {
            assert_eq!(tr.unnormalized(t), vec![1.0, 1.0]);
        }
    }

    #[test]
    fn trace_matches_path_counts() {
        let edges = vec![(0, 1), (0, 2), (1, 2), (3, 2), (4, 1), (4, 5), (5, 2), (2, 0), (3, 5), (3, 5)];
        let g = ColoredDigraph::from_edge_list(&edges, &[R, B, B, R, B, B]).unwrap();
        let tr = hits_trace(&g, 3).unwrap();
        for t in 1..=3 {
            let a = tr.unnormalized(t);
            for v in 0..6 {
                assert_eq!(a[v], path_count(&edges, v, t) as f64, "t={t} v={v}");
            }
        }
    }

    #[test]
    fn trace_rescales_without_losing_ratios() {
        let edges: Vec<(usize, usize)> = (1..40).map(|w| (w, 0)).chain((1..40).map(|w| (w, 40))).collect();
        let mut colors = vec![B; 41];
        colors[0] = R;
        let g = ColoredDigraph::from_edge_list(&edges, &colors).unwrap();
        let tr = hits_trace(&g, 200).unwrap();
        assert!(tr.exponent(200) > 0);
        let last = tr.scaled(200);
        assert!(last.iter().all(|x| x.is_finite()));
        assert_eq!(last[0], last[40]);
    }

    #[test]
    fn trace_rejects_zero_length() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1)], &[R, B]).unwrap();
        assert!(hits_trace(&g, 0).is_err());
    }
}
