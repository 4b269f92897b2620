//! Headers and row builders for every CSV the tool emits.

use std::fmt::Write as _;

use fairank_core::fairness::FairnessCurve;

use crate::experiment::ReplicaRecord;

pub use fairank_core::fairness::CURVE_HEADER;
pub use fairank_core::io::CCDF_HEADER;
pub use fairank_core::meanfield::{REPORT_HEADER as MEANFIELD_HEADER, VERIFY_HEADER};

pub const REPLICAS_HEADER: &str = "replica,seed,alpha_hat,rejections,red_nodes,blue_nodes,hri,unconverged";
pub const SWEEP_HEADER: &str = "axis,value,algo,x,share,baseline";
pub const NODES_HEADER: &str = "id,label,color";
pub const SUMMARY_HEADER: &str = "nodes,edges,minority_fraction,cross_edges,hri,unused_colors";
pub const RANK_HEADER: &str = "rank,id,label,color,score";
pub const F_SCAN_HEADER: &str = "rho,r,F";

/// Every `(file name, header)` pair the tool can write.
pub const CONTRACT: &[(&str, &str)] = &[
    ("curves.csv", CURVE_HEADER),
    ("replicas.csv", REPLICAS_HEADER),
    ("sweep.csv", SWEEP_HEADER),
    ("ccdf.csv", CCDF_HEADER),
    ("nodes.csv", NODES_HEADER),
    ("summary.csv", SUMMARY_HEADER),
    ("rank.csv", RANK_HEADER),
    ("meanfield.csv", MEANFIELD_HEADER),
    ("verify.csv", VERIFY_HEADER),
    ("f_scan.csv", F_SCAN_HEADER),
];

pub fn replicas_csv(records: &[ReplicaRecord]) -> String {
    let mut s = format!("{REPLICAS_HEADER}\n");
    for r in records {
        writeln!(
            s,
            "{},{},{},{},{},{},{},{}",
            r.replica,
            r.seed,
            r.stats.alpha_hat,
            r.stats.rejections,
            r.stats.red_nodes,
            r.stats.blue_nodes,
            r.hri,
            r.unconverged
        )
        .unwrap();
    }
    s
}

/// Appends sweep rows for one axis value.
pub fn push_sweep_rows(out: &mut String, axis: &str, value: &str, curves: &[(String, FairnessCurve)]) {
    for (algo, c) in curves {
        for (x, share) in c.grid.iter().zip(&c.share) {
            writeln!(out, "{axis},{value},{algo},{x},{share},{}", c.baseline).unwrap();
        }
    }
}
