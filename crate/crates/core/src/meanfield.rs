//! Mean-field analytics of BPAM: the edge-share fixed point `α`, attachment
//! probabilities, degree exponents and the HITS multiplicative-factor ratio.
//!
//! Matrices are indexed by [`Color::index`], so `p[R][B]` is `p[0][1]`.

use std::fmt::Write as _;

use crate::error::{invalid, Error, Result};
use crate::graph::{Color, ColoredDigraph};
use crate::rankers::hits_trace;

pub type Matrix2 = [[f64; 2]; 2];

const R: usize = 0;
const B: usize = 1;

pub const ALPHA_TOL: f64 = 1e-12;
const ALPHA_MAX_ITER: usize = 100_000;
const DAMPING: f64 = 0.5;
/// Tolerance for row sums and for equality checks at boundary parameters.
pub const CHECK_TOL: f64 = 1e-12;
/// Step of the local monotonicity scan of `F` around `ρ`.
const F_SCAN_STEP: f64 = 1e-3;
/// Default indegree cap for [`empirical_mf_ratio`].
pub const DEFAULT_INDEGREE_CAP: usize = 10;

fn check_unit(name: &'static str, v: f64) -> Result<()> {
    if (0.0..=1.0).contains(&v) {
        Ok(())
    } else {
        Err(invalid(name, format!("{v} is outside [0, 1]")))
    }
}

/// `(r, ρ)` where the fixed point is exactly `α = r`.
fn alpha_is_r(r: f64, rho: f64) -> bool {
    rho == 0.0 || rho == 1.0 || r == 0.0 || r == 0.5 || r == 1.0
}

/// `(r, ρ)` where both colors attach with the same exponent, `K_B = K_R = ½`.
fn exponents_equal(r: f64, rho: f64) -> bool {
    rho == 0.0 || rho == 1.0 || r == 0.5
}

/// `A(α) = ½(r + rα/(α+ρ−αρ) + αρ(1−r)/(αρ+1−α))`.
pub fn alpha_map(alpha: f64, r: f64, rho: f64) -> f64 {
    0.5 * (r + r * alpha / (alpha + rho - alpha * rho) + alpha * rho * (1.0 - r) / (alpha * rho + 1.0 - alpha))
}

/// Fraction of edge endpoints held by red nodes in the large-`N` limit.
///
/// Solved by damped fixed-point iteration from `α = r`. The corners
/// `ρ ∈ {0, 1}` and `r ∈ {0, ½, 1}` return `r` directly.
pub fn solve_alpha(r: f64, rho: f64, tol: f64) -> Result<f64> {
    check_unit("r", r)?;
    check_unit("rho", rho)?;
    if !(tol > 0.0) {
        return Err(invalid("tol", "must be positive"));
    }
    if alpha_is_r(r, rho) {
        return Ok(r);
    }
    let mut alpha = r;
    for _ in 0..ALPHA_MAX_ITER {
        let next = alpha_map(alpha, r, rho);
        if (next - alpha).abs() < tol {
            return Ok(alpha);
        }
        alpha = (1.0 - DAMPING) * alpha + DAMPING * next;
    }
    Err(Error::NoConvergence(ALPHA_MAX_ITER))
}

/// `α + ρ(1−α)` and `αρ + 1 − α`, the attachment normalizers of a red and
/// a blue newcomer.
fn normalizers(alpha: f64, rho: f64) -> (f64, f64) {
    (alpha + rho * (1.0 - alpha), alpha * rho + 1.0 - alpha)
}

/// Outgoing and incoming attachment probabilities `(p_out, p_in)`.
///
/// `p_out[C][C']` is the chance a `C` newcomer links to a `C'` node;
/// `p_in[C][C']` the chance a `C` node's in-edge comes from `C'`.
pub fn attachment_probs(alpha: f64, rho: f64, r: f64) -> Result<(Matrix2, Matrix2)> {
    check_unit("alpha", alpha)?;
    check_unit("rho", rho)?;
    check_unit("r", r)?;
    let undefined = || Error::UndefinedProbability { alpha, rho, r };
    let (dr, db) = normalizers(alpha, rho);
    if dr == 0.0 || db == 0.0 {
        return Err(undefined());
    }
    let p_out = [
        [alpha / dr, rho * (1.0 - alpha) / dr],
        [rho * alpha / db, (1.0 - alpha) / db],
    ];
    let blue_from = [rho * r / dr, (1.0 - r) / db];
    let red_from = [r / dr, rho * (1.0 - r) / db];
    let (sb, sr) = (blue_from[0] + blue_from[1], red_from[0] + red_from[1]);
    if sb == 0.0 || sr == 0.0 {
        return Err(undefined());
    }
    let p_in = [
        [red_from[0] / sr, red_from[1] / sr],
        [blue_from[0] / sb, blue_from[1] / sb],
    ];
    Ok((p_out, p_in))
}

/// Power-law coefficients and exponents `β = 1 + 1/K` per color.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exponents {
    pub k_b: f64,
    pub k_r: f64,
    pub beta_b: f64,
    pub beta_r: f64,
}

pub fn exponents(r: f64, rho: f64) -> Result<Exponents> {
    let alpha = solve_alpha(r, rho, ALPHA_TOL)?;
    exponents_at(alpha, r, rho)
}

fn exponents_at(alpha: f64, r: f64, rho: f64) -> Result<Exponents> {
    let (k_b, k_r) = if exponents_equal(r, rho) {
        (0.5, 0.5)
    } else {
        let (dr, db) = normalizers(alpha, rho);
        (
            0.5 * (r * rho / dr + (1.0 - r) / db),
            0.5 * (r / dr + rho * (1.0 - r) / db),
        )
    };
    if !(k_b > 0.0 && k_r > 0.0) {
        return Err(Error::UndefinedProbability { alpha, rho, r });
    }
    Ok(Exponents {
        k_b,
        k_r,
        beta_b: 1.0 + 1.0 / k_b,
        beta_r: 1.0 + 1.0 / k_r,
    })
}

/// `q[C][C'] = p_in[C][B]·p_out[B][C'] + p_in[C][R]·p_out[R][C']`: the
/// chance that a `C` node's in-neighbor also links to a `C'` node.
pub fn q_matrix(p_out: &Matrix2, p_in: &Matrix2) -> Matrix2 {
    let mut q = [[0.0; 2]; 2];
    for (c, row) in q.iter_mut().enumerate() {
        for (c2, v) in row.iter_mut().enumerate() {
            *v = p_in[c][B] * p_out[B][c2] + p_in[c][R] * p_out[R][c2];
        }
    }
    q
}

/// Ratio `F = q_RB / q_BB` of the red and blue HITS multiplicative factors.
///
/// The size-biased moment shared by both factors cancels, so `F` is the same
/// for every iteration `t ≥ 2`. Defined for `ρ ∈ (0, 1]` with `F(1) = 1`.
pub fn mf_ratio(r: f64, rho: f64) -> Result<f64> {
    check_unit("r", r)?;
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(invalid("rho", "F is defined on (0, 1]"));
    }
    if rho == 1.0 {
        return Ok(1.0);
    }
    let alpha = solve_alpha(r, rho, ALPHA_TOL)?;
    let (p_out, p_in) = attachment_probs(alpha, rho, r)?;
    let q = q_matrix(&p_out, &p_in);
    Ok(q[R][B] / q[B][B])
}

/// Size-biased indegree moment `Σ d^t / Σ d` over nodes of `color`.
pub fn size_biased_moment(g: &ColoredDigraph, t: i32, color: Color) -> Result<f64> {
    let (mut num, mut den) = (0.0, 0.0);
    for v in (0..g.node_count()).filter(|&v| g.color(v) == color) {
        let d = g.in_degree(v) as f64;
        num += d.powi(t);
        den += d;
    }
    if den == 0.0 {
        return Err(Error::ZeroIndegree(color.as_char()));
    }
    Ok(num / den)
}

/// Simulated counterpart of [`mf_ratio`]: mean of `a(t)(v) / d_in(v)` over
/// red nodes with `1 ≤ d_in ≤ cap`, divided by the same mean over blue nodes.
pub fn empirical_mf_ratio(g: &ColoredDigraph, t: usize, cap: usize) -> Result<f64> {
    if t < 2 {
        return Err(invalid("t", "must be at least 2"));
    }
    if cap < 1 {
        return Err(invalid("cap", "must be at least 1"));
    }
    let trace = hits_trace(g, t)?;
    let a = trace.scaled(t);
    let mut sum = [0.0; 2];
    let mut count = [0usize; 2];
    for (v, &av) in a.iter().enumerate() {
        let d = g.in_degree(v);
        if (1..=cap).contains(&d) {
            let c = g.color(v).index();
            sum[c] += av / d as f64;
            count[c] += 1;
        }
    }
    for color in Color::BOTH {
        if count[color.index()] == 0 {
            return Err(Error::EmptyDegreeClass(color.as_char()));
        }
    }
    let mean = |c: usize| sum[c] / count[c] as f64;
    Ok(mean(R) / mean(B))
}

/// All mean-field quantities at one `(r, ρ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanFieldReport {
    pub r: f64,
    pub rho: f64,
    pub alpha: f64,
    pub p_out: Matrix2,
    pub p_in: Matrix2,
    pub k_b: f64,
    pub k_r: f64,
    pub beta_b: f64,
    pub beta_r: f64,
    pub q: Matrix2,
    /// `None` at `ρ = 0`, where `F` is undefined.
    pub f: Option<f64>,
}

pub fn report(r: f64, rho: f64) -> Result<MeanFieldReport> {
    let alpha = solve_alpha(r, rho, ALPHA_TOL)?;
    let (p_out, p_in) = attachment_probs(alpha, rho, r)?;
    let e = exponents_at(alpha, r, rho)?;
    let q = q_matrix(&p_out, &p_in);
    let f = if rho > 0.0 { Some(mf_ratio(r, rho)?) } else { None };
    Ok(MeanFieldReport {
        r,
        rho,
        alpha,
        p_out,
        p_in,
        k_b: e.k_b,
        k_r: e.k_r,
        beta_b: e.beta_b,
        beta_r: e.beta_r,
        q,
        f,
    })
}

pub const REPORT_HEADER: &str = "r,rho,alpha,K_B,K_R,beta_B,beta_R,q_BB,q_RB,q_BR,q_RR,F";

impl MeanFieldReport {
    /// One CSV row matching [`REPORT_HEADER`]; `F` is empty when undefined.
    pub fn csv_row(&self) -> String {
        let mut s = String::new();
        write!(
            s,
            "{},{},{},{},{},{},{},{},{},{},{},",
            self.r,
            self.rho,
            self.alpha,
            self.k_b,
            self.k_r,
            self.beta_b,
            self.beta_r,
            self.q[B][B],
            self.q[R][B],
            self.q[B][R],
            self.q[R][R],
        )
        .unwrap();
        if let Some(f) = self.f {
            write!(s, "{f}").unwrap();
        }
        s
    }
}

/// Outcome of one named inequality. `margin` is the slack by which it holds
/// and is negative on failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub margin: f64,
}

/// Collects `lhs < rhs` checks. At boundary parameters the strict
/// inequalities degenerate to equalities, so there `lhs ≤ rhs + CHECK_TOL`
/// is accepted instead.
struct Checker {
    boundary: bool,
    checks: Vec<Check>,
}

impl Checker {
    fn less(&mut self, name: &'static str, lhs: f64, rhs: f64) {
        let margin = rhs - lhs;
        let passed = if self.boundary { margin >= -CHECK_TOL } else { margin > 0.0 };
        self.checks.push(Check { name, passed, margin });
    }

    fn less_eq(&mut self, name: &'static str, lhs: f64, rhs: f64) {
        let margin = rhs - lhs;
        self.checks.push(Check {
            name,
            passed: margin >= -CHECK_TOL,
            margin,
        });
    }

    fn strict(&mut self, name: &'static str, lhs: f64, rhs: f64) {
        let margin = rhs - lhs;
        self.checks.push(Check {
            name,
            passed: margin > 0.0,
            margin,
        });
    }
}

/// Whether `(r, ρ)` lies on the edge of the propositions' domain, where the
/// strict inequalities hold with equality.
pub fn is_boundary(r: f64, rho: f64) -> bool {
    r == 0.0 || r == 0.5 || rho == 0.0 || rho == 1.0
}

fn row_sum_error(m: &Matrix2) -> f64 {
    m.iter().map(|row| (row[0] + row[1] - 1.0).abs()).fold(0.0, f64::max)
}

/// Analytic checks on a report. Exposed separately from
/// [`verify_propositions`] so tampered reports can be checked too.
pub fn check_report(rep: &MeanFieldReport) -> Vec<Check> {
    let mut c = Checker {
        boundary: is_boundary(rep.r, rep.rho),
        checks: Vec::new(),
    };
    let row_err = row_sum_error(&rep.p_out)
        .max(row_sum_error(&rep.p_in))
        .max(row_sum_error(&rep.q));
    c.less_eq("row_sums", row_err, CHECK_TOL);
    c.less("alpha_below_r", rep.alpha, rep.r);
    c.less("k_b_above_half", 0.5, rep.k_b);
    c.less("k_r_below_half", rep.k_r, 0.5);
    c.less("beta_r_above_3", 3.0, rep.beta_r);
    c.less("beta_b_below_3", rep.beta_b, 3.0);
    c.strict("beta_b_above_2", 2.0, rep.beta_b);
    c.strict("two_k_b_minus_one_below_k_r", 2.0 * rep.k_b - 1.0, rep.k_r);
    c.less_eq("q_rb_at_most_q_bb", rep.q[R][B], rep.q[B][B]);
    c.checks
}

/// Every analytic proposition at `(r, ρ)` with `r ∈ [0, ½]`, as named checks.
///
/// Adds a local monotonicity scan of `F` around `ρ` and `F(1) = 1` to
/// [`check_report`].
pub fn verify_propositions(r: f64, rho: f64) -> Result<Vec<Check>> {
    if !(0.0..=0.5).contains(&r) {
        return Err(invalid("r", "propositions cover r in [0, 0.5]"));
    }
    let rep = report(r, rho)?;
    let mut c = Checker {
        boundary: is_boundary(r, rho),
        checks: check_report(&rep),
    };
    if let Some(f) = rep.f {
        c.less_eq("f_at_most_one", f, 1.0);
        let lo = rho - F_SCAN_STEP;
        if lo > 0.0 {
            c.less("f_increasing_below", mf_ratio(r, lo)?, f);
        }
        let hi = (rho + F_SCAN_STEP).min(1.0);
        if hi > rho {
            c.less("f_increasing_above", f, mf_ratio(r, hi)?);
        }
    }
    let f1 = mf_ratio(r, 1.0)?;
    c.checks.push(Check {
        name: "f_at_one_is_one",
        passed: f1 == 1.0,
        margin: -(f1 - 1.0).abs(),
    });
    Ok(c.checks)
}

/// One grid point of [`verify_grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridCheck {
    pub r: f64,
    pub rho: f64,
    pub check: Check,
}

pub const VERIFY_HEADER: &str = "r,rho,check,passed,margin";

/// Runs [`verify_propositions`] on every `(r, ρ)` pair, plus a
/// `f_increasing_grid` check comparing `F` at consecutive `ρ` values.
pub fn verify_grid(rs: &[f64], rhos: &[f64]) -> Result<Vec<GridCheck>> {
    let mut out = Vec::new();
    for &r in rs {
        let mut prev: Option<f64> = None;
        for &rho in rhos {
            for check in verify_propositions(r, rho)? {
                out.push(GridCheck { r, rho, check });
            }
            if rho > 0.0 {
                let f = mf_ratio(r, rho)?;
                if let Some(p) = prev {
                    let margin = f - p;
                    let passed = if is_boundary(r, rho) { margin >= -CHECK_TOL } else { margin > 0.0 };
                    out.push(GridCheck {
                        r,
                        rho,
                        check: Check {
                            name: "f_increasing_grid",
                            passed,
                            margin,
                        },
                    });
                }
                prev = Some(f);
            }
        }
    }
    Ok(out)
}

/// `F` as a function of `r` at fixed `ρ`. Reported only: monotonicity in
/// `r` is not established analytically.
pub fn f_in_r_scan(rho: f64, rs: &[f64]) -> Result<Vec<(f64, f64)>> {
    rs.iter().map(|&r| Ok((r, mf_ratio(r, rho)?))).collect()
}

/// `{start, start+step, ...}` up to `end` inclusive, with values rounded to
/// 12 decimals so grids compare exactly.
pub fn linear_grid(start: f64, end: f64, step: f64) -> Vec<f64> {
    let n = ((end - start) / step + 1e-9).floor() as usize;
    (0..=n)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue as Bc, Red as Rc};
    use proptest::prelude::*;

    fn grid25() -> Vec<(f64, f64)> {
        let rs = [0.05, 0.15, 0.3, 0.45, 0.5];
        let rhos = [0.05, 0.2, 0.5, 0.8, 0.95];
        rs.iter().flat_map(|&r| rhos.iter().map(move |&p| (r, p))).collect()
    }

    #[test]
    fn alpha_corners() {
        for r in [0.0, 0.1, 0.3, 0.5, 1.0] {
            assert_eq!(solve_alpha(r, 1.0, ALPHA_TOL).unwrap(), r);
            assert_eq!(solve_alpha(r, 0.0, ALPHA_TOL).unwrap(), r);
        }
        assert_eq!(solve_alpha(0.5, 0.3, ALPHA_TOL).unwrap(), 0.5);
        // the corner value is a genuine fixed point
        for rho in [0.2, 0.7] {
            assert!((alpha_map(0.5, 0.5, rho) - 0.5).abs() < 1e-15);
        }
    }

    #[test]
    fn alpha_fixed_point() {
        let a = solve_alpha(0.3, 0.5, ALPHA_TOL).unwrap();
        assert!(a < 0.3);
        assert!((alpha_map(a, 0.3, 0.5) - a).abs() < ALPHA_TOL);
        // bisection on A(α) − α over (0, r) as an independent solve
        let (mut lo, mut hi) = (1e-9, 0.3 - 1e-9);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if alpha_map(mid, 0.3, 0.5) - mid > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((a - lo).abs() < 1e-10, "{a} vs {lo}");
    }

    #[test]
    fn bad_inputs() {
        assert!(solve_alpha(-0.1, 0.5, ALPHA_TOL).is_err());
        assert!(solve_alpha(0.3, 1.5, ALPHA_TOL).is_err());
        assert!(mf_ratio(0.3, 0.0).is_err());
        assert!(matches!(
            attachment_probs(0.0, 0.0, 0.3),
            Err(Error::UndefinedProbability { .. })
        ));
        assert!(matches!(
            attachment_probs(1.0, 0.0, 0.3),
            Err(Error::UndefinedProbability { .. })
        ));
        assert!(verify_propositions(0.7, 0.5).is_err());
    }

    #[test]
    fn rho_one_collapse() {
        let a = 0.3;
        let (p_out, p_in) = attachment_probs(a, 1.0, 0.3).unwrap();
        assert_eq!(p_out[R][R], a);
        assert_eq!(p_out[B][B], 1.0 - a);
        let q = q_matrix(&p_out, &p_in);
        assert!((q[R][B] - (1.0 - a)).abs() < 1e-15);
        assert!((q[B][B] - (1.0 - a)).abs() < 1e-15);
    }

    #[test]
    fn rows_sum_to_one() {
        for (r, rho) in grid25() {
            let rep = report(r, rho).unwrap();
            for m in [rep.p_out, rep.p_in, rep.q] {
                assert!(row_sum_error(&m) <= CHECK_TOL);
            }
        }
    }

    #[test]
    fn probs_match_unreduced_forms() {
        // the un-cancelled expressions, with the (1−α) and α factors kept
        let (r, rho) = (0.3, 0.5);
        let a = solve_alpha(r, rho, ALPHA_TOL).unwrap();
        let dr = a + rho * (1.0 - a);
        let db = a * rho + 1.0 - a;
        let bb_num = (1.0 - r) * (1.0 - a) / db;
        let br_num = rho * r * (1.0 - a) / dr;
        let rr_num = r * a / dr;
        let rb_num = rho * (1.0 - r) * a / db;
        let (p_out, p_in) = attachment_probs(a, rho, r).unwrap();
        let close = |x: f64, y: f64| assert!((x - y).abs() < 1e-14, "{x} vs {y}");
        close(p_in[B][B], bb_num / (bb_num + br_num));
        close(p_in[B][R], br_num / (bb_num + br_num));
        close(p_in[R][R], rr_num / (rr_num + rb_num));
        close(p_in[R][B], rb_num / (rr_num + rb_num));
        close(p_out[R][B], 1.0 - a / dr);
        close(p_out[B][R], 1.0 - (1.0 - a) / db);
        let q = q_matrix(&p_out, &p_in);
        assert!(q[B][B] >= q[R][B]);
    }

    #[test]
    fn exponent_cases() {
        for (r, rho) in [(0.3, 1.0), (0.3, 0.0), (0.5, 0.2), (0.5, 0.9)] {
            let e = exponents(r, rho).unwrap();
            assert_eq!((e.k_b, e.k_r, e.beta_b, e.beta_r), (0.5, 0.5, 3.0, 3.0));
        }
        let e = exponents(0.3, 0.3).unwrap();
        assert!(e.beta_r > 3.0 && 3.0 > e.beta_b && e.beta_b > 2.0);
        assert!(2.0 * e.k_b - 1.0 < e.k_r);
        // r = ½ symmetry holds in the raw formula too
        let a = solve_alpha(0.5, 0.4, ALPHA_TOL).unwrap();
        let (dr, db) = normalizers(a, 0.4);
        let kb = 0.5 * (0.5 * 0.4 / dr + 0.5 / db);
        let kr = 0.5 * (0.5 / dr + 0.4 * 0.5 / db);
        assert!((kb - kr).abs() < 1e-15);
    }

    #[test]
    fn f_is_increasing_and_one_at_one() {
        assert_eq!(mf_ratio(0.3, 1.0).unwrap(), 1.0);
        let f: Vec<f64> = [0.1, 0.3, 0.5, 0.9]
            .iter()
            .map(|&rho| mf_ratio(0.3, rho).unwrap())
            .collect();
        assert!(f.windows(2).all(|w| w[0] < w[1]));
        assert!(f[3] < 1.0);
        // finite-difference scan around ρ = 0.5
        let step = 1e-3;
        let scan: Vec<f64> = (-5..=5)
            .map(|i| mf_ratio(0.3, 0.5 + i as f64 * step).unwrap())
            .collect();
        assert!(scan.windows(2).all(|w| w[0] < w[1]));
        // closed form at r = ½
        for rho in [0.1, 0.4, 0.8] {
            let expect = 2.0 * rho / (1.0 + rho * rho);
            assert!((mf_ratio(0.5, rho).unwrap() - expect).abs() < 1e-14);
        }
    }

    #[test]
    fn propositions_pass_on_grid() {
        let rs = linear_grid(0.05, 0.5, 0.05);
        let rhos = linear_grid(0.05, 0.95, 0.05);
        assert_eq!((rs.len(), rhos.len()), (10, 19));
        let checks = verify_grid(&rs, &rhos).unwrap();
        let failed: Vec<_> = checks.iter().filter(|c| !c.check.passed).collect();
        assert!(failed.is_empty(), "{failed:?}");
    }

    #[test]
    fn rho_one_margins_are_zero() {
        let checks = verify_propositions(0.3, 1.0).unwrap();
        assert!(checks.iter().all(|c| c.passed));
        for name in ["alpha_below_r", "k_b_above_half", "beta_r_above_3", "f_at_one_is_one"] {
            let c = checks.iter().find(|c| c.name == name).unwrap();
            assert_eq!(c.margin, 0.0, "{name}");
        }
    }

    #[test]
    fn perturbed_report_fails_targeted_check() {
        let mut rep = report(0.3, 0.3).unwrap();
        rep.k_b = 0.45;
        let failed: Vec<&str> = check_report(&rep)
            .into_iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        assert_eq!(failed, vec!["k_b_above_half"]);
    }

    #[test]
    fn report_row_shape() {
        let row = report(0.3, 0.0).unwrap().csv_row();
        assert_eq!(row.split(',').count(), REPORT_HEADER.split(',').count());
        assert!(row.ends_with(','));
    }

    #[test]
    fn size_biased_examples() {
        // indegrees: node 1 gets 1, node 2 gets 3
        let g = ColoredDigraph::from_edge_list(&[(0, 1), (0, 2), (1, 2), (3, 2)], &[Rc, Bc, Bc, Rc]).unwrap();
        assert_eq!(size_biased_moment(&g, 1, Bc).unwrap(), 1.0);
        assert_eq!(size_biased_moment(&g, 2, Bc).unwrap(), 2.5);
        assert_eq!(size_biased_moment(&g, 2, Rc), Err(Error::ZeroIndegree('R')));
    }

    #[test]
    fn empirical_ratio_by_path_count() {
        let edges = [(0, 1), (2, 1), (2, 3), (3, 0), (1, 3), (4, 0), (4, 3), (0, 4)];
        let colors = [Rc, Bc, Bc, Rc, Bc];
        let g = ColoredDigraph::from_edge_list(&edges, &colors).unwrap();
        // a(t+1)(v) = Σ over w→v, w→x of a(t)(x), with a(1) the indegree
        let step = |a: &[f64; 5]| {
            let mut next = [0.0; 5];
            for &(w, v) in &edges {
                for &(w2, x) in &edges {
                    if w2 == w {
                        next[v] += a[x];
                    }
                }
            }
            next
        };
        let mut a1 = [0.0; 5];
        edges.iter().for_each(|&(_, t)| a1[t] += 1.0);
        let a3 = step(&step(&a1));
        let mean = |c: Color| {
            let vs: Vec<usize> = (0..5).filter(|&v| colors[v] == c && g.in_degree(v) > 0).collect();
            vs.iter().map(|&v| a3[v] / g.in_degree(v) as f64).sum::<f64>() / vs.len() as f64
        };
        let expect = mean(Rc) / mean(Bc);
        let got = empirical_mf_ratio(&g, 3, 10).unwrap();
        assert!((got - expect).abs() < 1e-12, "{got} vs {expect}");
        assert!(empirical_mf_ratio(&g, 1, 10).is_err());
        assert_eq!(empirical_mf_ratio(&g, 3, 0).map(|_| ()), Err(invalid("cap", "must be at least 1")));
    }

    #[test]
    fn grids() {
        assert_eq!(linear_grid(0.05, 0.5, 0.05)[9], 0.5);
        assert_eq!(linear_grid(0.0, 1.0, 0.25), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }

    proptest! {
        #[test]
        fn power_inequality(r in 0.01f64..0.49, rho in 0.01f64..0.99) {
            let a = solve_alpha(r, rho, ALPHA_TOL).unwrap();
            prop_assert!(a < r);
            prop_assert!(a > 0.0);
        }

        #[test]
        fn f_in_unit_interval(r in 0.01f64..0.5, rho in 0.01f64..1.0) {
            let f = mf_ratio(r, rho).unwrap();
            prop_assert!(f > 0.0 && f <= 1.0 + 1e-15);
        }
    }
}
