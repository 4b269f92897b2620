//! Replica-level statistical checks of the generator against the mean-field
//! predictions.

use fairank_core::bpam::{generate, replica_seed, BpamParams};
use fairank_core::graph::{Color, ColoredDigraph, DegreeKind};
use fairank_core::meanfield::{empirical_mf_ratio, exponents, size_biased_moment, solve_alpha, ALPHA_TOL};
use fairank_core::stats::{average_ccdfs, ccdf_by_color, least_squares, tail_exponent_fit_counted, Ccdf};

const REPS: u64 = 100;

fn replicas(n: usize, r: f64, rho: f64, base: u64) -> impl Iterator<Item = (ColoredDigraph, f64)> {
    let p = BpamParams::new(n, 6, r, rho).unwrap();
    (0..REPS).map(move |k| {
        let (g, stats) = generate(&p, replica_seed(base, k)).unwrap();
        (g, stats.alpha_hat)
    })
}

fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

#[test]
fn minority_fraction_within_binomial_band() {
    let p = BpamParams::new(1000, 6, 0.3, 0.1).unwrap();
    let (g, _) = generate(&p, 17).unwrap();
    // binomial sd at N=1000 is 0.0145, so ±0.05 is about 3.4 sd
    assert!((g.minority_fraction() - 0.3).abs() < 0.05);
}

#[test]
fn degrees_are_conserved() {
    for (g, _) in replicas(300, 0.3, 0.3, 5).take(10) {
        let e = g.edge_count();
        assert_eq!(g.degrees(DegreeKind::In).iter().sum::<usize>(), e);
        assert_eq!(g.degrees(DegreeKind::Out).iter().sum::<usize>(), e);
    }
}

#[test]
fn edge_share_matches_fixed_point() {
    // replica sd of alpha_hat is about 0.02, so the mean of 100 has
    // standard error 0.002; 0.01 is five standard errors
    for rho in [0.1, 0.3, 0.5] {
        let hats: Vec<f64> = replicas(1000, 0.3, rho, 300).map(|(_, a)| a).collect();
        let alpha = solve_alpha(0.3, rho, ALPHA_TOL).unwrap();
        let m = mean(&hats);
        assert!((m - alpha).abs() < 0.01, "rho={rho}: {m} vs {alpha}");
    }
}

fn averaged_ccdfs(r: f64, rho: f64, base: u64) -> (Ccdf, Ccdf, f64, f64) {
    let (mut reds, mut blues) = (Vec::new(), Vec::new());
    let (mut nr, mut nb) = (0.0, 0.0);
    for (g, _) in replicas(1000, r, rho, base) {
        let (cr, cb) = ccdf_by_color(&g, DegreeKind::Total);
        nr += g.color_count(Color::Red) as f64;
        nb += g.color_count(Color::Blue) as f64;
        reds.push(cr);
        blues.push(cb);
    }
    let k = REPS as f64;
    (average_ccdfs(&reds), average_ccdfs(&blues), nr / k, nb / k)
}

#[test]
fn blue_tail_dominates_red_tail() {
    let (red, blue, _, _) = averaged_ccdfs(0.3, 0.5, 900);
    for k in [30, 50, 80] {
        assert!(blue.evaluate(k) > red.evaluate(k), "k={k}");
    }
}

#[test]
fn fitted_exponents_are_ordered() {
    let (red, blue, nr, nb) = averaged_ccdfs(0.3, 0.3, 1200);
    let fr = tail_exponent_fit_counted(&red, 12, nr, 10.0).unwrap();
    let fb = tail_exponent_fit_counted(&blue, 12, nb, 10.0).unwrap();
    assert!(fb.beta < fr.beta, "{} vs {}", fb.beta, fr.beta);
}

#[test]
fn mf_ratio_grows_with_homophily_parameter() {
    let avg = |rho: f64| {
        let v: Vec<f64> = replicas(1000, 0.3, rho, 40)
            .map(|(g, _)| empirical_mf_ratio(&g, 3, 10).unwrap())
            .collect();
        mean(&v)
    };
    let (lo, mid, hi) = (avg(0.1), avg(0.3), avg(0.5));
    assert!(lo < mid && mid < hi, "{lo} {mid} {hi}");
}

#[test]
fn mf_ratio_is_near_one_when_symmetric() {
    let v: Vec<f64> = replicas(1000, 0.5, 1.0, 77)
        .map(|(g, _)| empirical_mf_ratio(&g, 3, 10).unwrap())
        .collect();
    let m = mean(&v);
    assert!((m - 1.0).abs() < 0.1, "{m}");
}

/// Slope of mean `ln d̃₂(B)` against `ln N`.
fn moment_slope(ns: &[usize]) -> f64 {
    let (xs, ys): (Vec<f64>, Vec<f64>) = ns
        .iter()
        .map(|&n| {
            let logs: Vec<f64> = replicas(n, 0.3, 0.3, 7)
                .map(|(g, _)| size_biased_moment(&g, 2, Color::Blue).unwrap().ln())
                .collect();
            ((n as f64).ln(), mean(&logs))
        })
        .unzip();
    least_squares(&xs, &ys).unwrap().0
}

/// Mean-field finite-size prediction: node `i` of `N` has degree about
/// `(N/i)^K`, so `Σd² ∝ N^{2K} H_N(2K)` with the partial zeta sum `H_N`.
fn predicted_slope(ns: &[usize], k: f64) -> f64 {
    let (xs, ys): (Vec<f64>, Vec<f64>) = ns
        .iter()
        .map(|&n| {
            let h: f64 = (1..=n).map(|i| (i as f64).powf(-2.0 * k)).sum();
            let n = n as f64;
            (n.ln(), (2.0 * k - 1.0) * n.ln() + h.ln())
        })
        .unzip();
    least_squares(&xs, &ys).unwrap().0
}

const SIZES: [usize; 3] = [500, 1000, 2000];

#[test]
fn size_biased_moment_growth_matches_finite_size_prediction() {
    let e = exponents(0.3, 0.3).unwrap();
    let measured = moment_slope(&SIZES);
    let predicted = predicted_slope(&SIZES, e.k_b);
    assert!(
        (measured / predicted - 1.0).abs() < 0.3,
        "measured {measured}, predicted {predicted}"
    );
}

/// The asymptotic slope `2/(β_B − 1) − 1` is about 0.046 here, while the
/// partial sum `H_N(2K_B)` with `2K_B ≈ 1.05` still grows like `ln N` at
/// these sizes and adds roughly `1/ln N` to the slope. Measured slopes sit
/// near 0.19, so this only holds at much larger `N`.
#[test]
#[ignore = "asymptotic regime is out of reach at N <= 2000"]
fn size_biased_moment_growth_matches_asymptotic_slope() {
    let e = exponents(0.3, 0.3).unwrap();
    let measured = moment_slope(&SIZES);
    let asymptotic = 2.0 / (e.beta_b - 1.0) - 1.0;
    assert!((measured / asymptotic - 1.0).abs() < 0.3, "{measured} vs {asymptotic}");
}
