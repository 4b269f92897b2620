use super::{Algorithm, RankingResult};
use crate::graph::{ColoredDigraph, DegreeKind};

/// Ranks nodes by the chosen degree.
pub fn degree_rank(g: &ColoredDigraph, which: DegreeKind) -> RankingResult {
    let scores = g.degrees(which).into_iter().map(|d| d as f64).collect();
    RankingResult::new(Algorithm::Degree(which), scores, 0, true, 0.0)
}
