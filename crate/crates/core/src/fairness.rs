//! Minority representation along a ranking.

use std::fmt::Write as _;

use crate::error::{invalid, Error, Result};
use crate::graph::{Color, NodeId};

/// Grid points are matched against this relative tolerance in lookups.
const GRID_TOL: f64 = 1e-12;

/// Minority share among the top `⌈x·n⌉` ranks for each `x` in `grid`.
#[derive(Debug, Clone, PartialEq)]
pub struct FairnessCurve {
    pub grid: Vec<f64>,
    pub share: Vec<f64>,
    /// Population minority fraction.
    pub baseline: f64,
}

impl FairnessCurve {
    /// Share at grid point `x`.
    pub fn share_at(&self, x: f64) -> Result<f64> {
        self.position(x).map(|i| self.share[i])
    }

    fn position(&self, x: f64) -> Result<usize> {
        self.grid
            .iter()
            .position(|&g| (g - x).abs() <= GRID_TOL * x.abs().max(1.0))
            .ok_or(Error::OffGrid(x))
    }
}

/// Number of ranks in the top-`x` prefix of `n` nodes.
///
/// The small slack keeps `x = k/n` from rounding up to `k + 1`.
pub fn top_count(x: f64, n: usize) -> usize {
    ((x * n as f64 - 1e-9).ceil() as usize).clamp(1, n)
}

/// `points` log-spaced fractions from `1/n` to `1.0`, deduplicated.
pub fn default_grid(n: usize, points: usize) -> Vec<f64> {
    if n <= 1 || points <= 1 {
        return vec![1.0];
    }
    let lo = (1.0 / n as f64).ln();
    let mut grid: Vec<f64> = (0..points)
        .map(|i| (lo * (1.0 - i as f64 / (points - 1) as f64)).exp())
        .collect();
    grid[0] = 1.0 / n as f64;
    grid[points - 1] = 1.0;
    grid.dedup();
    grid
}

fn red_fraction(count: usize, total: usize) -> f64 {
    count as f64 / total as f64
}

/// Minority share curve of `order` over `grid`.
///
/// `order` lists node ids best first and `colors[v]` gives the color of
/// node `v`. The grid must be sorted ascending within `(0, 1]`.
pub fn minority_share_curve(order: &[NodeId], colors: &[Color], grid: &[f64]) -> Result<FairnessCurve> {
    let n = order.len();
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    if colors.len() != n {
        return Err(invalid("colors", format!("expected {n} entries, got {}", colors.len())));
    }
    if grid.is_empty() {
        return Err(invalid("grid", "must not be empty"));
    }
    if grid.iter().any(|&x| !(x > 0.0 && x <= 1.0)) {
        return Err(invalid("grid", "values must lie in (0, 1]"));
    }
    if grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(invalid("grid", "values must be sorted"));
    }
    // prefix[m] = number of reds among the first m ranks
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0usize);
    for &v in order {
        let c = colors.get(v).ok_or(Error::MissingColor(v))?;
        prefix.push(prefix.last().unwrap() + usize::from(*c == Color::Red));
    }
    let share = grid
        .iter()
        .map(|&x| {
            let m = top_count(x, n);
            red_fraction(prefix[m], m)
        })
        .collect();
    Ok(FairnessCurve {
        grid: grid.to_vec(),
        share,
        baseline: red_fraction(prefix[n], n),
    })
}

/// `share(x) − baseline`; negative means the minority is under-represented.
pub fn parity_gap(curve: &FairnessCurve, x: f64) -> Result<f64> {
    Ok(curve.share_at(x)? - curve.baseline)
}

/// Pointwise mean of replica curves over a shared grid.
pub fn average_curves(curves: &[FairnessCurve]) -> Result<FairnessCurve> {
    let first = curves.first().ok_or_else(|| invalid("curves", "must not be empty"))?;
    if curves.iter().any(|c| c.grid != first.grid) {
        return Err(Error::MismatchedGrids);
    }
    let k = curves.len() as f64;
    let share = (0..first.grid.len())
        .map(|i| curves.iter().map(|c| c.share[i]).sum::<f64>() / k)
        .collect();
    Ok(FairnessCurve {
        grid: first.grid.clone(),
        share,
        baseline: curves.iter().map(|c| c.baseline).sum::<f64>() / k,
    })
}

pub const CURVE_HEADER: &str = "algo,x,share,baseline";

/// Long-format CSV of named curves, one row per `(algo, x)`.
pub fn curve_compare(curves: &[(String, FairnessCurve)]) -> Result<String> {
    if let Some((_, first)) = curves.first() {
        if curves.iter().any(|(_, c)| c.grid != first.grid) {
            return Err(Error::MismatchedGrids);
        }
    }
    let mut out = String::from(CURVE_HEADER);
    out.push('\n');
    for (name, c) in curves {
        for (x, s) in c.grid.iter().zip(&c.share) {
            writeln!(out, "{name},{x},{s},{}", c.baseline).unwrap();
        }
    }
    Ok(out)
}
