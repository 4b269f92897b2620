//! Two-colored directed multigraph in compressed adjacency form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dense node index in `[0, n)`.
pub type NodeId = usize;

/// Community label. `Red` is the minority community.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    /// Row/column index used by the 2x2 color matrices (`R = 0`, `B = 1`).
    pub fn index(self) -> usize {
        match self {
            Color::Red => 0,
            Color::Blue => 1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "R" | "r" => Ok(Color::Red),
            "B" | "b" => Ok(Color::Blue),
            other => Err(format!("unknown color {other:?}, expected R or B")),
        }
    }
}

/// Which degree to read off a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeKind {
    In,
    Out,
    /// `in + out`.
    Total,
}

impl FromStr for DegreeKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "in" => Ok(DegreeKind::In),
            "out" => Ok(DegreeKind::Out),
            "total" => Ok(DegreeKind::Total),
            other => Err(format!("unknown degree kind {other:?}")),
        }
    }
}

impl fmt::Display for DegreeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegreeKind::In => "in",
            DegreeKind::Out => "out",
            DegreeKind::Total => "total",
        })
    }
}

/// Immutable colored directed multigraph.
///
/// Parallel edges are kept with multiplicity and self-loops are allowed.
/// Adjacency is stored twice (by source and by target) so both `A x` and
/// `Aᵀ x` are sequential scans. Within one node, neighbors keep the order in
/// which their edges were supplied.
#[derive(Debug, Clone, PartialEq)]
pub struct ColoredDigraph {
    colors: Vec<Color>,
    edges: Vec<(u32, u32)>,
    out_offsets: Vec<usize>,
    out_targets: Vec<u32>,
    in_offsets: Vec<usize>,
    in_sources: Vec<u32>,
}

impl ColoredDigraph {
    /// Builds a graph on `colors.len()` nodes.
    ///
    /// Fails with [`Error::EmptyGraph`] for an empty edge list and with
    /// [`Error::MissingColor`] when an endpoint has no color.
    pub fn from_edge_list(edges: &[(NodeId, NodeId)], colors: &[Color]) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let n = colors.len();
        for &(s, t) in edges {
            if s >= n {
                return Err(Error::MissingColor(s));
            }
            if t >= n {
                return Err(Error::MissingColor(t));
            }
        }
        if n > u32::MAX as usize {
            return Err(crate::error::invalid("n", "more than u32::MAX nodes"));
        }
        let edges: Vec<(u32, u32)> = edges.iter().map(|&(s, t)| (s as u32, t as u32)).collect();
        Ok(Self::build(colors.to_vec(), edges))
    }

    pub(crate) fn build(colors: Vec<Color>, edges: Vec<(u32, u32)>) -> Self {
        let n = colors.len();
        let (out_offsets, out_targets) = csr(n, edges.iter().map(|&(s, t)| (s, t)), edges.len());
        let (in_offsets, in_sources) = csr(n, edges.iter().map(|&(s, t)| (t, s)), edges.len());
        Self {
            colors,
            edges,
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
        }
    }

    pub fn node_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: NodeId) -> Color {
        self.colors[v]
    }

    /// Edges in construction order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = (NodeId, NodeId)> + '_ {
        self.edges.iter().map(|&(s, t)| (s as usize, t as usize))
    }

    pub fn out_neighbors(&self, v: NodeId) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.out_targets[self.out_offsets[v]..self.out_offsets[v + 1]]
            .iter()
            .map(|&t| t as usize)
    }

    pub fn in_neighbors(&self, v: NodeId) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
            .iter()
            .map(|&s| s as usize)
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.in_offsets[v + 1] - self.in_offsets[v]
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    pub fn degree(&self, v: NodeId, kind: DegreeKind) -> usize {
        match kind {
            DegreeKind::In => self.in_degree(v),
            DegreeKind::Out => self.out_degree(v),
            DegreeKind::Total => self.in_degree(v) + self.out_degree(v),
        }
    }

    pub fn degrees(&self, kind: DegreeKind) -> Vec<usize> {
        (0..self.node_count()).map(|v| self.degree(v, kind)).collect()
    }

    pub fn color_count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// Empirical minority fraction: red nodes over all nodes.
    pub fn minority_fraction(&self) -> f64 {
        if self.colors.is_empty() {
            return 0.0;
        }
        self.color_count(Color::Red) as f64 / self.node_count() as f64
    }

    pub fn cross_edge_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|&&(s, t)| self.colors[s as usize] != self.colors[t as usize])
            .count()
    }

    /// Homophily rarefaction index: observed cross-color edges divided by
    /// `2 r (1 - r) |E|` with `r` the empirical minority fraction.
    ///
    /// 1 means integrated, values below 1 mean homophilic.
    pub fn hri(&self) -> Result<f64> {
        let r = self.minority_fraction();
        let expected = 2.0 * r * (1.0 - r) * self.edge_count() as f64;
        if expected <= 0.0 {
            return Err(Error::HriUndefined);
        }
        Ok(self.cross_edge_count() as f64 / expected)
    }

    /// `out[v] = Σ_{w → v} x[w]`, i.e. `Aᵀ x`.
    pub fn pull_into(&self, x: &[f64], out: &mut [f64]) {
        for (v, o) in out.iter_mut().enumerate() {
            *o = self.in_sources[self.in_offsets[v]..self.in_offsets[v + 1]]
                .iter()
                .map(|&w| x[w as usize])
                .sum();
        }
    }

    /// `out[w] = Σ_{w → v} x[v]`, i.e. `A x`.
    pub fn push_into(&self, x: &[f64], out: &mut [f64]) {
        for (w, o) in out.iter_mut().enumerate() {
            *o = self.out_targets[self.out_offsets[w]..self.out_offsets[w + 1]]
                .iter()
                .map(|&v| x[v as usize])
                .sum();
        }
    }

    /// Same graph with node `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[NodeId]) -> Self {
        let n = self.node_count();
        assert_eq!(perm.len(), n, "permutation length must equal node count");
        let mut colors = vec![Color::Blue; n];
        for (v, &p) in perm.iter().enumerate() {
            colors[p] = self.colors[v];
        }
        let edges = self
            .edges
            .iter()
            .map(|&(s, t)| (perm[s as usize] as u32, perm[t as usize] as u32))
            .collect();
        Self::build(colors, edges)
    }
}

fn csr(
    n: usize,
    pairs: impl Iterator<Item = (u32, u32)> + Clone,
    m: usize,
) -> (Vec<usize>, Vec<u32>) {
    let mut offsets = vec![0usize; n + 1];
    for (k, _) in pairs.clone() {
        offsets[k as usize + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut cursor = offsets.clone();
    let mut targets = vec![0u32; m];
    for (k, v) in pairs {
        targets[cursor[k as usize]] = v;
        cursor[k as usize] += 1;
    }
    (offsets, targets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::{Blue as B, Red as R};

    #[test]
    fn single_edge() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1)], &[R, B]).unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.degrees(DegreeKind::In), vec![0, 1]);
    }

    #[test]
    fn parallel_edges_keep_multiplicity() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1), (0, 1)], &[B, B]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.in_degree(1), 2);
        assert_eq!(g.out_degree(0), 2);
    }

    #[test]
    fn degrees_match_brute_force_count() {
        let edges = [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 1),
            (4, 1),
            (1, 4),
            (2, 2),
            (0, 3),
            (4, 3),
            (4, 3),
        ];
        let g = ColoredDigraph::from_edge_list(&edges, &[R, B, B, R, B]).unwrap();
        for v in 0..5 {
            let indeg = edges.iter().filter(|e| e.1 == v).count();
            let outdeg = edges.iter().filter(|e| e.0 == v).count();
            assert_eq!(g.in_degree(v), indeg, "indeg {v}");
            assert_eq!(g.out_degree(v), outdeg, "outdeg {v}");
            assert_eq!(g.degree(v, DegreeKind::Total), indeg + outdeg);
        }
        let sum_in: usize = g.degrees(DegreeKind::In).iter().sum();
        assert_eq!(sum_in, 10);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            ColoredDigraph::from_edge_list(&[], &[R]).unwrap_err(),
            Error::EmptyGraph
        );
        assert_eq!(
            ColoredDigraph::from_edge_list(&[(0, 2)], &[R, B]).unwrap_err(),
            Error::MissingColor(2)
        );
    }

    #[test]
    fn minority_fraction_counts_red() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1), (2, 3)], &[R, R, R, R]).unwrap();
        assert_eq!(g.minority_fraction(), 1.0);
        let mut colors = vec![B; 10];
        colors[2] = R;
        colors[5] = R;
        colors[9] = R;
        let g = ColoredDigraph::from_edge_list(&[(0, 9)], &colors).unwrap();
        assert!((g.minority_fraction() - 0.3).abs() < 1e-15);
    }

    #[test]
    fn hri_values() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1), (2, 3)], &[R, R, B, B]).unwrap();
        assert_eq!(g.hri().unwrap(), 0.0);
        // r = 0.5 and every edge crosses: |E| / (0.5 |E|) = 2
        let g = ColoredDigraph::from_edge_list(&[(0, 2), (3, 1), (1, 2)], &[R, R, B, B]).unwrap();
        assert!((g.hri().unwrap() - 2.0).abs() < 1e-12);
        let g = ColoredDigraph::from_edge_list(&[(0, 1)], &[B, B]).unwrap();
        assert_eq!(g.hri().unwrap_err(), Error::HriUndefined);
    }

    #[test]
    fn hri_is_invariant_under_edge_duplication() {
        let edges = vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
        let colors = [R, B, B, R];
        let g = ColoredDigraph::from_edge_list(&edges, &colors).unwrap();
        let doubled: Vec<_> = edges.iter().chain(edges.iter()).copied().collect();
        let g2 = ColoredDigraph::from_edge_list(&doubled, &colors).unwrap();
        assert_eq!(g.hri().unwrap(), g2.hri().unwrap());
    }

    #[test]
    fn matvec_products() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1), (0, 2), (2, 1)], &[R, B, B]).unwrap();
        let x = [1.0, 10.0, 100.0];
        let mut out = [0.0; 3];
        g.pull_into(&x, &mut out);
        assert_eq!(out, [0.0, 101.0, 1.0]);
        g.push_into(&x, &mut out);
        assert_eq!(out, [110.0, 0.0, 10.0]);
    }

    #[test]
    fn relabel_moves_colors_and_edges() {
        let g = ColoredDigraph::from_edge_list(&[(0, 1)], &[R, B]).unwrap();
        let h = g.relabeled(&[1, 0]);
        assert_eq!(h.colors(), &[B, R]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(1, 0)]);
    }
}
