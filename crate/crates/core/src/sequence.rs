//! Tabulation of null-graph orders over families of base clusters.

use num_bigint::BigUint;

use crate::blending::{max_edge_iteration, run_total_blending};
use crate::cluster::ColourCluster;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// All weights 1: the cluster of `K_ℓ`.
    CompleteGraph,
    /// All weights `r`.
    Uniform(BigUint),
    /// The first ℓ entries of a fixed weight list.
    Custom(Vec<BigUint>),
}

impl Family {
    pub fn cluster(&self, l: usize) -> Result<ColourCluster> {
        match self {
            Family::CompleteGraph => ColourCluster::from_weights(vec![1u32; l]),
            Family::Uniform(r) => ColourCluster::from_weights(vec![r.clone(); l]),
            Family::Custom(ws) => {
                if l > ws.len() {
                    return Err(Error::validation(format!(
                        "custom list has {} weights, row needs {l}",
                        ws.len()
                    )));
                }
                ColourCluster::from_weights(ws[..l].to_vec())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRow {
    pub l: usize,
    pub cluster: String,
    pub t_chi: usize,
    pub null_order: BigUint,
    pub max_edges: BigUint,
    pub max_edge_iteration: usize,
}

pub fn tabulate(family: &Family, l_min: usize, l_max: usize) -> Result<Vec<SequenceRow>> {
    if l_min < 2 || l_min > l_max {
        return Err(Error::validation(format!(
            "need 2 <= l_min <= l_max, got {l_min}..{l_max}"
        )));
    }
    (l_min..=l_max)
        .map(|l| {
            let cluster = family.cluster(l)?;
            let trace = run_total_blending(&cluster)?;
            let (max_edge_iteration, max_edges) = max_edge_iteration(&trace);
            Ok(SequenceRow {
                l,
                cluster: cluster
                    .to_literal()
                    .expect("families produce base clusters"),
                t_chi: trace.t_chi,
                null_order: trace.null_order,
                max_edges,
                max_edge_iteration,
            })
        })
        .collect()
}

/// CSV with a header row; the cluster literal is quoted.
pub fn to_csv(rows: &[SequenceRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "l",
        "cluster",
        "t_chi",
        "null_order",
        "max_edges",
        "max_edge_iteration",
    ])
    .expect("in-memory write");
    for r in rows {
        w.write_record([
            r.l.to_string(),
            r.cluster.clone(),
            r.t_chi.to_string(),
            r.null_order.to_string(),
            r.max_edges.to_string(),
            r.max_edge_iteration.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
