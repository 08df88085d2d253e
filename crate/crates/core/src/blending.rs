//! The chromatic blending recursion.
//!
//! One iteration colours every edge with the blend of its endpoint colours,
//! turns each edge into a vertex and drops the old vertices. The new vertices
//! form a colour cluster, which is re-embodied edge-maximally (complete
//! multipartite) for the next iteration. Since the edge-maximal embodiment is
//! determined by the cluster, the recursion runs on `(label, weight)` pairs:
//! two classes of weights `a` and `b` contribute `a·b` vertices of the blended
//! colour.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cluster::{blend_labels, normalize, ColourClass, ColourCluster, ColourLabel};
use crate::embodiment::epsilon_plus;
use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use crate::oracle::{chromatic_number, is_proper};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlendStep {
    pub iteration: usize,
    pub cluster: ColourCluster,
    pub vertex_count: BigUint,
    pub edge_count: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlendTrace {
    pub steps: Vec<BlendStep>,
    /// First iteration whose cluster has a single class.
    pub t_chi: usize,
    /// Vertex count of the final, edgeless graph.
    pub null_order: BigUint,
}

/// One symbolic iteration on the edge-maximal embodiment of `cluster`.
pub fn blend_step_cluster(cluster: &ColourCluster) -> Result<ColourCluster> {
    let classes = cluster.classes();
    if classes.len() < 2 {
        return Err(Error::Terminal(format!(
            "{cluster} has a single class and its embodiment has no edges"
        )));
    }
    let mut raw = Vec::with_capacity(classes.len() * (classes.len() - 1) / 2);
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            raw.push(ColourClass::new(
                blend_labels(a.label(), b.label()),
                a.weight() * b.weight(),
            )?);
        }
    }
    normalize(raw)
}

/// One iteration on an actual coloured graph: every edge becomes a vertex
/// carrying the blend of its endpoints.
pub fn blend_step_graph(graph: &ColouredGraph) -> Result<ColourCluster> {
    if !is_proper(graph) {
        return Err(Error::validation(
            "graph colouring is missing or not proper",
        ));
    }
    if graph.edge_count() == 0 {
        return Err(Error::Terminal("graph has no edges".into()));
    }
    let raw = graph
        .edges()
        .map(|(u, v)| {
            let (a, b) = (
                graph.label(u).expect("proper"),
                graph.label(v).expect("proper"),
            );
            ColourClass::new(blend_labels(a, b), 1u32)
        })
        .collect::<Result<Vec<_>>>()?;
    normalize(raw)
}

fn symbolic_step(iteration: usize, cluster: ColourCluster) -> BlendStep {
    BlendStep {
        iteration,
        vertex_count: cluster.total_weight(),
        edge_count: epsilon_plus(&cluster),
        cluster,
    }
}

/// Continues symbolic iterations from `steps.last()` until one class is left.
fn finish(mut steps: Vec<BlendStep>) -> Result<BlendTrace> {
    loop {
        let last = steps.last().expect("at least one step");
        if last.cluster.class_count() == 1 {
            break;
        }
        let next = blend_step_cluster(&last.cluster)?;
        let iteration = last.iteration + 1;
        debug_assert_eq!(next.total_weight(), last.edge_count);
        steps.push(symbolic_step(iteration, next));
    }
    let last = steps.last().expect("at least one step");
    Ok(BlendTrace {
        t_chi: last.iteration,
        null_order: last.vertex_count.clone(),
        steps,
    })
}

/// Runs the recursion from a cluster (iteration 0) to total blending.
///
/// Terminates for every cluster with at least two classes: the smallest label
/// size grows by at least one per iteration and is bounded by ℓ.
pub fn run_total_blending(cluster: &ColourCluster) -> Result<BlendTrace> {
    if cluster.class_count() < 2 {
        return Err(Error::validation(
            "blending needs at least two colour classes",
        ));
    }
    finish(vec![symbolic_step(0, cluster.clone())])
}

/// Runs the recursion from a chromatically coloured connected graph.
/// Iteration 1 blends the graph's own edges; later iterations are symbolic.
pub fn run_total_blending_from_graph(
    graph: &ColouredGraph,
    oracle_cap: usize,
) -> Result<BlendTrace> {
    if graph.edge_count() == 0 {
        return Err(Error::validation(
            "graph-start blending needs at least one edge",
        ));
    }
    if !graph.is_connected() {
        return Err(Error::validation(
            "graph-start blending needs a connected graph",
        ));
    }
    if !is_proper(graph) {
        return Err(Error::validation(
            "graph colouring is missing or not proper",
        ));
    }
    let chi = chromatic_number(graph, oracle_cap)?.chi;
    let used = graph.colour_count();
    if used != chi {
        return Err(Error::validation(format!(
            "colouring uses {used} colours but the chromatic number is {chi}"
        )));
    }
    let start = BlendStep {
        iteration: 0,
        cluster: graph.colour_cluster()?,
        vertex_count: BigUint::from(graph.vertex_count()),
        edge_count: BigUint::from(graph.edge_count()),
    };
    let first = symbolic_step(1, blend_step_graph(graph)?);
    finish(vec![start, first])
}

/// First iteration attaining the maximum edge count, with that count.
pub fn max_edge_iteration(trace: &BlendTrace) -> (usize, BigUint) {
    let mut best = (0, BigUint::zero());
    for step in &trace.steps {
        if step.edge_count > best.1 {
            best = (step.iteration, step.edge_count.clone());
        }
    }
    best
}

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    label: Vec<u32>,
    weight: String,
}

#[derive(Serialize, Deserialize)]
struct StepDoc {
    iteration: usize,
    classes: Vec<ClassDoc>,
    vertices: String,
    edges: String,
}

#[derive(Serialize, Deserialize)]
struct MaxEdgeDoc {
    iteration: usize,
    edges: String,
}

#[derive(Serialize, Deserialize)]
struct TraceDoc {
    steps: Vec<StepDoc>,
    t_chi: usize,
    null_order: String,
    max_edge_iteration: MaxEdgeDoc,
}

fn parse_big(s: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::validation(format!("'{s}' is not a decimal integer")))
}

impl BlendTrace {
    /// Trace document; big integers are decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let (max_it, max_edges) = max_edge_iteration(self);
        let doc = TraceDoc {
            steps: self
                .steps
                .iter()
                .map(|s| StepDoc {
                    iteration: s.iteration,
                    classes: s
                        .cluster
                        .classes()
                        .iter()
                        .map(|c| ClassDoc {
                            label: c.label().members().to_vec(),
                            weight: c.weight().to_string(),
                        })
                        .collect(),
                    vertices: s.vertex_count.to_string(),
                    edges: s.edge_count.to_string(),
                })
                .collect(),
            t_chi: self.t_chi,
            null_order: self.null_order.to_string(),
            max_edge_iteration: MaxEdgeDoc {
                iteration: max_it,
                edges: max_edges.to_string(),
            },
        };
        serde_json::to_value(doc).expect("trace document serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: TraceDoc =
            serde_json::from_value(value.clone()).map_err(|e| Error::parse(0, e.to_string()))?;
        let steps = doc
            .steps
            .into_iter()
            .map(|s| {
                let classes = s
                    .classes
                    .into_iter()
                    .map(|c| ColourClass::new(ColourLabel::new(c.label)?, parse_big(&c.weight)?))
                    .collect::<Result<Vec<_>>>()?;
                Ok(BlendStep {
                    iteration: s.iteration,
                    cluster: normalize(classes)?,
                    vertex_count: parse_big(&s.vertices)?,
                    edge_count: parse_big(&s.edges)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if steps.is_empty() {
            return Err(Error::validation("trace has no steps"));
        }
        Ok(BlendTrace {
            steps,
            t_chi: doc.t_chi,
            null_order: parse_big(&doc.null_order)?,
        })
    }
}
