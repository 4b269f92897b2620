//! Experiment driver: BPAM replication, real-data analysis and mean-field
//! verification, writing CSV, SVG and a reproducibility manifest.

pub mod commands;
pub mod config;
pub mod error;
pub mod experiment;
pub mod manifest;
pub mod schema;
pub mod svg;
