//! Degree CCDFs, power-law tail fits and rank statistics.

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredDigraph, DegreeKind};

/// Complementary CDF of a degree multiset: `(k, P[deg >= k])`.
///
/// The grid is `k = 0` followed by every distinct degree value, ascending.
/// Tied degrees share one grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct Ccdf {
    points: Vec<(u64, f64)>,
}

impl Ccdf {
    /// CCDF of a degree multiset. An empty multiset gives an empty CCDF.
    pub fn from_degrees(degrees: &[usize]) -> Self {
        if degrees.is_empty() {
            return Self { points: Vec::new() };
        }
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        let n = sorted.len() as f64;
        let mut points = vec![(0u64, 1.0)];
        let mut i = 0;
        while i < sorted.len() {
            let k = sorted[i];
            if k > 0 {
                points.push((k as u64, (sorted.len() - i) as f64 / n));
            }
            while i < sorted.len() && sorted[i] == k {
                i += 1;
            }
        }
        Self { points }
    }

    /// Wraps precomputed points; they must be sorted by strictly increasing `k`.
    pub fn from_points(points: Vec<(u64, f64)>) -> Result<Self> {
        if points.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(crate::error::invalid("points", "k must be strictly increasing"));
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[(u64, f64)] {
        &self.points
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Step-function value `P[deg >= k]` for any `k`.
    pub fn evaluate(&self, k: u64) -> f64 {
        match self.points.binary_search_by(|p| p.0.cmp(&k)) {
            Ok(i) => self.points[i].1,
            Err(i) if i < self.points.len() => self.points[i].1,
            Err(_) => 0.0,
        }
    }

    /// Largest grid `k` whose CCDF value is at least `floor`.
    pub fn last_k_at_least(&self, floor: f64) -> Option<u64> {
        self.points.iter().rev().find(|p| p.1 >= floor).map(|p| p.0)
    }
}

/// Per-color CCDFs `(red, blue)` of the selected degree.
pub fn ccdf_by_color(g: &ColoredDigraph, which: DegreeKind) -> (Ccdf, Ccdf) {
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for v in 0..g.node_count() {
        let d = g.degree(v, which);
        match g.color(v) {
            Color::Red => red.push(d),
            Color::Blue => blue.push(d),
        }
    }
    (Ccdf::from_degrees(&red), Ccdf::from_degrees(&blue))
}

/// Pointwise mean of step CCDFs on the union of their grids.
pub fn average_ccdfs(ccdfs: &[Ccdf]) -> Ccdf {
    let live: Vec<&Ccdf> = ccdfs.iter().filter(|c| !c.is_empty()).collect();
    if live.is_empty() {
        return Ccdf { points: Vec::new() };
    }
    let mut grid: Vec<u64> = live.iter().flat_map(|c| c.points.iter().map(|p| p.0)).collect();
    grid.sort_unstable();
    grid.dedup();
    let m = live.len() as f64;
    let points = grid
        .into_iter()
        .map(|k| (k, live.iter().map(|c| c.evaluate(k)).sum::<f64>() / m))
        .collect();
    Ccdf { points }
}

/// Least-squares line through the log-log CCDF tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailFit {
    /// Density exponent `1 + |slope|`, so a CCDF tail `k^{-2}` gives 3.
    pub beta: f64,
    pub slope: f64,
    pub intercept: f64,
    pub points_used: usize,
}

/// Fits every grid point with `k >= k_min` and a positive CCDF.
pub fn tail_exponent_fit(ccdf: &Ccdf, k_min: u64) -> Result<TailFit> {
    tail_exponent_fit_range(ccdf, k_min, u64::MAX)
}

/// Like [`tail_exponent_fit`] but also drops points above `k_max`, where the
/// finite-size cutoff bends the CCDF down.
pub fn tail_exponent_fit_range(ccdf: &Ccdf, k_min: u64, k_max: u64) -> Result<TailFit> {
    let (xs, ys): (Vec<f64>, Vec<f64>) = ccdf
        .points
        .iter()
        .filter(|p| p.0 >= k_min.max(1) && p.0 <= k_max && p.1 > 0.0)
        .map(|p| ((p.0 as f64).ln(), p.1.ln()))
        .unzip();
    if xs.len() < 3 {
        return Err(Error::InsufficientTail {
            k_min,
            found: xs.len(),
        });
    }
    let (slope, intercept) = least_squares(&xs, &ys).ok_or(Error::DegenerateTail)?;
    if slope >= 0.0 || !slope.is_finite() {
        return Err(Error::DegenerateTail);
    }
    Ok(TailFit {
        beta: 1.0 - slope,
        slope,
        intercept,
        points_used: xs.len(),
    })
}

/// Tail fit from `k_min` up to the largest `k` still reached by at least
/// `min_nodes` of the `class_size` nodes the CCDF describes.
///
/// Averaged BPAM CCDFs bend down where only a handful of nodes per replica
/// remain; the count floor trims that region.
pub fn tail_exponent_fit_counted(ccdf: &Ccdf, k_min: u64, class_size: f64, min_nodes: f64) -> Result<TailFit> {
    let k_max = if class_size > 0.0 {
        ccdf.last_k_at_least(min_nodes / class_size).unwrap_or(0)
    } else {
        0
    };
    tail_exponent_fit_range(ccdf, k_min, k_max)
}

/// Ordinary least squares `y = slope x + intercept`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<(f64, f64)> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx <= 0.0 {
        return None;
    }
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}

/// Coefficient of determination of the OLS fit of `ys` on `xs`.
pub fn r_squared(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let (slope, intercept) = least_squares(xs, ys)?;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let ss_tot: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    if ss_tot <= 0.0 {
        return None;
    }
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    Some(1.0 - ss_res / ss_tot)
}

/// Ranks starting at 1, ties get the mean of the positions they span.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]] == values[idx[i]] {
            j += 1;
        }
        let mean = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = mean;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman rank correlation with average ranks for ties.
pub fn spearman(a: &[f64], b: &[f64]) -> Option<f64> {
    assert_eq!(a.len(), b.len());
    pearson(&average_ranks(a), &average_ranks(b))
}

pub fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    let n = a.len() as f64;
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let mut sab = 0.0;
    let mut saa = 0.0;
    let mut sbb = 0.0;
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    if saa <= 0.0 || sbb <= 0.0 {
        return None;
    }
    Some(sab / (saa * sbb).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue as B, Red as R};
    use proptest::prelude::*;

    #[test]
    fn star_center_ccdf() {
        let g = ColoredDigraph::from_edge_list(&[(1, 0), (2, 0), (3, 0), (4, 0)], &[R, B, B, B, B])
            .unwrap();
        let (red, blue) = ccdf_by_color(&g, DegreeKind::Total);
        assert_eq!(red.evaluate(4), 1.0);
        assert_eq!(red.evaluate(5), 0.0);
        assert_eq!(blue.points(), &[(0, 1.0), (1, 1.0)]);
    }

    #[test]
    fn six_node_ccdf_matches_tabulation() {
        let edges = [(0, 1), (0, 2), (1, 2), (3, 2), (4, 2), (5, 0), (2, 0), (4, 3)];
        let colors = [R, B, B, R, B, R];
        let g = ColoredDigraph::from_edge_list(&edges, &colors).unwrap();
        let (red, blue) = ccdf_by_color(&g, DegreeKind::Total);
        // total degrees: 0:4, 1:2, 2:5, 3:2, 4:2, 5:1
        // red {4, 2, 1}; blue {2, 5, 2}
        assert_eq!(
            red.points(),
            &[(0, 1.0), (1, 1.0), (2, 2.0 / 3.0), (4, 1.0 / 3.0)]
        );
        assert_eq!(blue.points(), &[(0, 1.0), (2, 1.0), (5, 1.0 / 3.0)]);
        for k in 0..8u64 {
            let reds = [4usize, 2, 1].iter().filter(|&&d| d as u64 >= k).count() as f64 / 3.0;
            assert_eq!(red.evaluate(k), reds, "k={k}");
        }
        let (red_in, _) = ccdf_by_color(&g, DegreeKind::In);
        // red indegrees {2, 1, 0}
        assert_eq!(red_in.points(), &[(0, 1.0), (1, 2.0 / 3.0), (2, 1.0 / 3.0)]);
    }

    #[test]
    fn synthetic_power_law_fit() {
        let points = (10u64..=1000).map(|k| (k, 50.0 * (k as f64).powi(-2))).collect();
        let ccdf = Ccdf::from_points(points).unwrap();
        let fit = tail_exponent_fit(&ccdf, 10).unwrap();
        assert!((fit.beta - 3.0).abs() < 0.01, "{fit:?}");
    }

    #[test]
    fn degenerate_tails() {
        let flat = Ccdf::from_points((1u64..20).map(|k| (k, 0.5)).collect()).unwrap();
        assert_eq!(tail_exponent_fit(&flat, 1).unwrap_err(), Error::DegenerateTail);
        let short = Ccdf::from_points(vec![(0, 1.0), (5, 0.5), (9, 0.1)]).unwrap();
        assert!(matches!(
            tail_exponent_fit(&short, 5).unwrap_err(),
            Error::InsufficientTail { found: 2, .. }
        ));
    }

    #[test]
    fn averaging_step_functions() {
        let a = Ccdf::from_degrees(&[1, 3]);
        let b = Ccdf::from_degrees(&[2, 2]);
        let avg = average_ccdfs(&[a, b]);
        assert_eq!(
            avg.points(),
            &[(0, 1.0), (1, 1.0), (2, 0.75), (3, 0.25)]
        );
    }

    #[test]
    fn spearman_handles_ties() {
        assert_eq!(average_ranks(&[3.0, 1.0, 3.0, 2.0]), vec![3.5, 1.0, 3.5, 2.0]);
        let rho = spearman(&[1.0, 2.0, 3.0, 4.0], &[10.0, 20.0, 30.0, 45.0]).unwrap();
        assert!((rho - 1.0).abs() < 1e-12);
        let rho = spearman(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]).unwrap();
        assert!((rho + 1.0).abs() < 1e-12);
    }

    #[test]
    fn r_squared_of_exact_line() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        let ys = [3.0, 5.0, 7.0, 9.0];
        assert!((r_squared(&xs, &ys).unwrap() - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn ccdf_is_monotone(degrees in prop::collection::vec(0usize..50, 1..100)) {
            let c = Ccdf::from_degrees(&degrees);
            prop_assert_eq!(c.points()[0], (0, 1.0));
            for w in c.points().windows(2) {
                prop_assert!(w[0].0 < w[1].0);
                prop_assert!(w[0].1 >= w[1].1);
            }
        }
    }
}
