//! Graphical embodiments of colour clusters and the chromatic blending
//! recursion, with exact brute-force oracles to check the results.
//!
//! ```
//! use chromablend::{run_total_blending, ColourCluster};
//!
//! let k4: ColourCluster = "1,1,1,1".parse().unwrap();
//! let trace = run_total_blending(&k4).unwrap();
//! assert_eq!(trace.t_chi, 3);
//! assert_eq!(trace.null_order.to_string(), "90");
//! ```

pub mod blending;
pub mod cluster;
pub mod config;
pub mod corpus;
pub mod embodiment;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod sequence;
pub mod verify;

pub use blending::{
    blend_step_cluster, blend_step_graph, max_edge_iteration, run_total_blending,
    run_total_blending_from_graph, BlendStep, BlendTrace,
};
pub use cluster::{blend_labels, normalize, ColourClass, ColourCluster, ColourLabel};
pub use config::{OutputFormat, RunConfig, SweepBounds};
pub use embodiment::{
    build_max_embodiment, build_min_chromatic_embodiment, build_min_proper_embodiment,
    eps_equality_holds, epsilon_minus, epsilon_plus,
};
pub use error::{Error, Result};
pub use graph::ColouredGraph;
pub use oracle::{chromatic_number, clique_number, is_proper, mycielski, t_chi_graph, GraphStats};
