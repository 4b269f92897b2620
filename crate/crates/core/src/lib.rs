//! Biased preferential attachment networks and the link-analysis rankers
//! used to study how minorities fare in them.
//!
//! - [`bpam`] grows two-colored directed networks with homophily.
//! - [`rankers`] holds degree, PageRank, HITS and its randomized and
//!   subspace variants.
//! - [`fairness`] measures minority share among the top of a ranking.
//! - [`meanfield`] solves the degree-level mean-field equations.

pub mod bpam;
pub mod error;
pub mod fairness;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod meanfield;
pub mod rankers;
pub mod stats;

pub use error::{Error, Result};
pub use graph::{Color, ColoredDigraph, DegreeKind, NodeId};
