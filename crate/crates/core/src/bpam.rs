//! Biased preferential attachment with two communities.
//!
//! Growth starts from two seed nodes, node 0 red and node 1 blue, joined by
//! the edge `0 -> 1`. Seed nodes never emit further edges. Every later node
//! is red with probability `r` and draws `d` targets in sequence:
//!
//! 1. pick `v` with probability proportional to its current total degree;
//! 2. if `v` has the other color, keep it with probability `rho`, otherwise
//!    discard it and go back to 1;
//! 3. add `u -> v` and bump the degree of `v` immediately.
//!
//! The arriving node's own degree only enters the sampler once all of its
//! `d` edges are placed, so it can never pick itself. Parallel edges are
//! allowed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::graph::{Color, ColoredDigraph, DegreeKind};

/// Consecutive homophily rejections tolerated before giving up.
pub const REJECTION_CAP: u64 = 10_000_000;

/// Generator RNG: ChaCha with 8 rounds, seeded through `seed_from_u64`.
pub type BpamRng = ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BpamParams {
    /// Final node count `N`, seed nodes included.
    pub nodes: usize,
    /// Edges emitted by every non-seed node.
    pub outdeg: usize,
    /// Probability `r` that an arriving node is red.
    pub minority_ratio: f64,
    /// Acceptance probability `rho` for a cross-color edge.
    pub homophily: f64,
}

impl BpamParams {
    pub fn new(nodes: usize, outdeg: usize, minority_ratio: f64, homophily: f64) -> Result<Self> {
        let p = Self {
            nodes,
            outdeg,
            minority_ratio,
            homophily,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.nodes < 2 {
            return Err(invalid("nodes", "must be at least 2"));
        }
        if self.outdeg < 1 {
            return Err(invalid("outdeg", "must be at least 1"));
        }
        if !(0.0..=1.0).contains(&self.minority_ratio) {
            return Err(invalid("minority_ratio", "must lie in [0, 1]"));
        }
        if !(0.0..=1.0).contains(&self.homophily) {
            return Err(invalid("homophily", "must lie in [0, 1]"));
        }
        if self.minority_ratio > 0.5 {
            log::warn!(
                "minority_ratio {} > 0.5: the red community is not a minority",
                self.minority_ratio
            );
        }
        Ok(())
    }
}

/// Seed of replica `k` for a run with base seed `base`.
pub fn replica_seed(base: u64, k: u64) -> u64 {
    base.wrapping_add(k)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenerationStats {
    /// Share of edge endpoints on red nodes, `d_tot(R) / 2|E|`.
    pub alpha_hat: f64,
    /// Homophily rejections over the whole run.
    pub rejections: u64,
    pub red_nodes: usize,
    pub blue_nodes: usize,
    /// Number of seed nodes (always 2); they carry the single seed edge and
    /// emit no other edges.
    pub seed_nodes: usize,
}

/// Samples nodes proportionally to their degree from a repeated-endpoint list.
#[derive(Debug, Clone, Default)]
pub struct DegreeSampler {
    endpoints: Vec<u32>,
}

impl DegreeSampler {
    /// Sampler over the total degrees of `g`.
    pub fn from_graph(g: &ColoredDigraph) -> Self {
        let mut endpoints = Vec::with_capacity(2 * g.edge_count());
        for (s, t) in g.edges() {
            endpoints.push(s as u32);
            endpoints.push(t as u32);
        }
        Self { endpoints }
    }

    pub fn push(&mut self, v: usize) {
        self.endpoints.push(v as u32);
    }

    pub fn total_weight(&self) -> usize {
        self.endpoints.len()
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.endpoints[rng.random_range(0..self.endpoints.len())] as usize
    }
}

/// Draws one BPAM graph. Identical `params` and `seed` give identical graphs.
pub fn generate(params: &BpamParams, seed: u64) -> Result<(ColoredDigraph, GenerationStats)> {
    params.validate()?;
    let mut rng = BpamRng::seed_from_u64(seed);
    let n = params.nodes;
    let d = params.outdeg;
    let r = params.minority_ratio;
    let rho = params.homophily;

    let mut colors = Vec::with_capacity(n);
    colors.push(Color::Red);
    colors.push(Color::Blue);
    let mut edges: Vec<(u32, u32)> = Vec::with_capacity(1 + (n - 2) * d);
    edges.push((0, 1));
    let mut sampler = DegreeSampler {
        endpoints: Vec::with_capacity(2 * edges.capacity()),
    };
    sampler.push(0);
    sampler.push(1);
    let mut rejections = 0u64;

    for u in 2..n {
        let color = if rng.random::<f64>() < r {
            Color::Red
        } else {
            Color::Blue
        };
        colors.push(color);
        for _ in 0..d {
            let mut streak = 0u64;
            let v = loop {
                let v = sampler.sample(&mut rng);
                if colors[v] == color || rng.random::<f64>() < rho {
                    break v;
                }
                streak += 1;
                if streak >= REJECTION_CAP {
                    return Err(Error::RejectionCap(streak));
                }
            };
            rejections += streak;
            edges.push((u as u32, v as u32));
            sampler.push(v);
        }
        for _ in 0..d {
            sampler.push(u);
        }
    }

    let g = ColoredDigraph::build(colors, edges);
    let red_nodes = g.color_count(Color::Red);
    let red_degree: usize = (0..n)
        .filter(|&v| g.color(v) == Color::Red)
        .map(|v| g.degree(v, DegreeKind::Total))
        .sum();
    let stats = GenerationStats {
        alpha_hat: red_degree as f64 / (2 * g.edge_count()) as f64,
        rejections,
        red_nodes,
        blue_nodes: n - red_nodes,
        seed_nodes: 2,
    };
    Ok((g, stats))
}
