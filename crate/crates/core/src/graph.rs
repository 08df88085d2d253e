//! Simple undirected graphs with optional colour labels on the vertices.
//!
//! Text format:
//!
//! ```text
//! n m
//! u v        (m edge lines, 0-based vertex ids)
//! c v 1,2    (optional colour lines, 1-based base-colour indices)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::cluster::{normalize, ColourClass, ColourCluster, ColourLabel};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ColouredGraph {
    labels: Vec<Option<ColourLabel>>,
    edges: BTreeSet<(usize, usize)>,
}

impl ColouredGraph {
    /// Edgeless, uncoloured graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        ColouredGraph {
            labels: vec![None; n],
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds a vertex and returns its id.
    pub fn add_vertex(&mut self, label: Option<ColourLabel>) -> usize {
        self.labels.push(label);
        self.labels.len() - 1
    }

    /// Adds the edge `uv`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::validation(format!(
                "edge {u}-{v} references a vertex outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::validation(format!("loop at vertex {u}")));
        }
        Ok(self.edges.insert((u.min(v), u.max(v))))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.edges.remove(&(u.min(v), u.max(v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn set_label(&mut self, v: usize, label: Option<ColourLabel>) -> Result<()> {
        let n = self.labels.len();
        let slot = self
            .labels
            .get_mut(v)
            .ok_or_else(|| Error::validation(format!("vertex {v} outside 0..{n}")))?;
        *slot = label;
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn label(&self, v: usize) -> Option<&ColourLabel> {
        self.labels.get(v).and_then(Option::as_ref)
    }

    pub fn labels(&self) -> &[Option<ColourLabel>] {
        &self.labels
    }

    pub fn is_fully_labelled(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    pub fn has_any_label(&self) -> bool {
        self.labels.iter().any(Option::is_some)
    }

    /// Copy of the graph with every label removed.
    pub fn uncoloured(&self) -> Self {
        ColouredGraph {
            labels: vec![None; self.labels.len()],
            edges: self.edges.clone(),
        }
    }

    /// Replaces all labels with singleton labels `{colour[v]}`.
    pub fn with_colouring(&self, colouring: &[u32]) -> Result<Self> {
        if colouring.len() != self.labels.len() {
            return Err(Error::validation(format!(
                "colouring has {} entries for {} vertices",
                colouring.len(),
                self.labels.len()
            )));
        }
        let labels = colouring
            .iter()
            .map(|&c| ColourLabel::singleton(c).map(Some))
            .collect::<Result<Vec<_>>>()?;
        Ok(ColouredGraph {
            labels,
            edges: self.edges.clone(),
        })
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.labels.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.labels.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// True for the empty graph and for any graph with one component.
    pub fn is_connected(&self) -> bool {
        let n = self.labels.len();
        if n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count() + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Self {
        let index: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = ColouredGraph {
            labels: keep.iter().map(|&v| self.labels[v].clone()).collect(),
            edges: BTreeSet::new(),
        };
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                g.edges.insert((a.min(b), a.max(b)));
            }
        }
        g
    }

    /// The colour cluster carried by the vertex labels.
    pub fn colour_cluster(&self) -> Result<ColourCluster> {
        let classes = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, l)| {
                let l = l
                    .clone()
                    .ok_or_else(|| Error::validation(format!("vertex {v} has no colour")))?;
                ColourClass::new(l, 1u32)
            })
            .collect::<Result<Vec<_>>>()?;
        normalize(classes)
    }

    /// Number of distinct labels in use.
    pub fn colour_count(&self) -> usize {
        self.labels.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.vertex_count(), self.edge_count());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        for (v, label) in self.labels.iter().enumerate() {
            if let Some(label) = label {
                let members: Vec<String> = label.members().iter().map(u32::to_string).collect();
                let _ = writeln!(out, "c {v} {}", members.join(","));
            }
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing 'n m' header"))?;
        let (n, m) = match header.split_whitespace().collect::<Vec<_>>()[..] {
            [n, m] => (parse_usize(hline, n)?, parse_usize(hline, m)?),
            _ => return Err(Error::parse(hline, "header must be 'n m'")),
        };

        let mut g = ColouredGraph::new(n);
        let mut seen_edges = 0;
        for (lno, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields[..] {
                ["c", v, members] => {
                    let v = parse_usize(lno, v)?;
                    if v >= n {
                        return Err(Error::parse(
                            lno,
                            format!("colour line for vertex {v} outside 0..{n}"),
                        ));
                    }
                    let members = members
                        .split(',')
                        .map(|s| {
                            s.parse::<u32>()
                                .map_err(|_| Error::parse(lno, format!("bad colour index '{s}'")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let label =
                        ColourLabel::new(members).map_err(|e| Error::parse(lno, e.to_string()))?;
                    if g.labels[v].replace(label).is_some() {
                        return Err(Error::parse(lno, format!("vertex {v} coloured twice")));
                    }
                }
                [u, v] => {
                    if g.has_any_label() {
                        return Err(Error::parse(lno, "edge line after colour lines"));
                    }
                    let (u, v) = (parse_usize(lno, u)?, parse_usize(lno, v)?);
                    let added = g
                        .add_edge(u, v)
                        .map_err(|e| Error::parse(lno, e.to_string()))?;
                    if !added {
                        return Err(Error::parse(lno, format!("parallel edge {u}-{v}")));
                    }
                    seen_edges += 1;
                }
                _ => return Err(Error::parse(lno, format!("unrecognised line '{line}'"))),
            }
        }
        if seen_edges != m {
            return Err(Error::parse(
                hline,
                format!("header declares {m} edges, found {seen_edges}"),
            ));
        }
        Ok(g)
    }

    /// Graphviz rendering; vertices sharing a label share a fill colour.
    pub fn to_dot(&self) -> String {
        const FILLS: [&str; 12] = [
            "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
            "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f",
        ];
        let styles: BTreeMap<&ColourLabel, usize> = self
            .labels
            .iter()
            .flatten()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();

        let mut out = String::from("graph G {\n  node [shape=circle, style=filled];\n");
        for (v, label) in self.labels.iter().enumerate() {
            match label {
                Some(l) => {
                    let _ = writeln!(
                        out,
                        "  {v} [label=\"{v}\\n{l}\", fillcolor=\"{}\"];",
                        FILLS[styles[l] % FILLS.len()]
                    );
                }
                None => {
                    let _ = writeln!(out, "  {v} [label=\"{v}\", fillcolor=\"white\"];");
                }
            }
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = GraphDoc {
            vertices: self
                .labels
                .iter()
                .enumerate()
                .map(|(id, l)| VertexDoc {
                    id,
                    label: l.as_ref().map(|l| l.members().to_vec()),
                })
                .collect(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
        };
        serde_json::to_value(doc).expect("graph document serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let doc: GraphDoc =
            serde_json::from_value(value.clone()).map_err(|e| Error::parse(0, e.to_string()))?;
        let mut g = ColouredGraph::new(doc.vertices.len());
        for (i, vd) in doc.vertices.into_iter().enumerate() {
            if vd.id != i {
                return Err(Error::validation(
                    "vertex ids must be 0-based and consecutive",
                ));
            }
            g.labels[i] = vd.label.map(ColourLabel::new).transpose()?;
        }
        for [u, v] in doc.edges {
            if !g.add_edge(u, v)? {
                return Err(Error::validation(format!("parallel edge {u}-{v}")));
            }
        }
        Ok(g)
    }
}

#[derive(Serialize, Deserialize)]
struct VertexDoc {
    id: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    label: Option<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<[usize; 2]>,
}

fn parse_usize(line: usize, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("'{s}' is not a non-negative integer")))
}
