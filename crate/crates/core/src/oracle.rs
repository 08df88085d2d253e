//! Exact brute-force graph invariants used to cross-check the blending engine.
//!
//! Everything here is exhaustive search. Graphs above the configured vertex
//! cap are refused rather than approximated.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::ColouredGraph;

pub const DEFAULT_ORACLE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub chi: usize,
    pub omega: usize,
    pub delta: usize,
    pub triangle_free: bool,
    pub t_chi: usize,
}

/// Exact chromatic number with one witness colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chromatic {
    pub chi: usize,
    /// Colour of each vertex, `1..=chi`.
    pub colouring: Vec<u32>,
}

struct Adjacency {
    n: usize,
    lists: Vec<Vec<usize>>,
    matrix: Vec<Vec<bool>>,
}

impl Adjacency {
    fn new(g: &ColouredGraph) -> Self {
        let n = g.vertex_count();
        let lists = g.adjacency();
        let mut matrix = vec![vec![false; n]; n];
        for (u, v) in g.edges() {
            matrix[u][v] = true;
            matrix[v][u] = true;
        }
        Adjacency { n, lists, matrix }
    }

    /// Vertices by descending degree, ties by ascending id.
    fn degree_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| {
            self.lists[b]
                .len()
                .cmp(&self.lists[a].len())
                .then(a.cmp(&b))
        });
        order
    }
}

fn check_cap(g: &ColouredGraph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            what: "oracle input",
            actual: g.vertex_count().to_string(),
            cap,
        });
    }
    Ok(())
}

/// True iff every vertex is labelled and no edge joins equal labels.
pub fn is_proper(g: &ColouredGraph) -> bool {
    g.is_fully_labelled() && g.edges().all(|(u, v)| g.label(u) != g.label(v))
}

pub fn max_degree(g: &ColouredGraph) -> usize {
    g.max_degree()
}

pub fn is_triangle_free(g: &ColouredGraph) -> bool {
    let adj = Adjacency::new(g);
    for (u, v) in g.edges() {
        if adj.lists[u].iter().any(|&w| adj.matrix[v][w]) {
            return false;
        }
    }
    true
}

/// Greedy clique along the degree order; a lower bound for ω and χ.
fn greedy_clique(adj: &Adjacency) -> Vec<usize> {
    let mut clique: Vec<usize> = Vec::new();
    for v in adj.degree_order() {
        if clique.iter().all(|&u| adj.matrix[u][v]) {
            clique.push(v);
        }
    }
    clique
}

/// Greedy colouring along the degree order; an upper bound for χ.
fn greedy_colouring(adj: &Adjacency) -> Vec<u32> {
    let mut colour = vec![0u32; adj.n];
    for v in adj.degree_order() {
        let mut c = 1;
        while adj.lists[v].iter().any(|&u| colour[u] == c) {
            c += 1;
        }
        colour[v] = c;
    }
    colour
}

struct KColouring<'a> {
    adj: &'a Adjacency,
    order: Vec<usize>,
    colour: Vec<u32>,
    k: u32,
}

impl KColouring<'_> {
    fn fits(&self, v: usize, c: u32) -> bool {
        !self.adj.lists[v].iter().any(|&u| self.colour[u] == c)
    }

    /// Extends the partial colouring from position `pos` of the order.
    /// `used` is the highest colour used so far; a new colour is only ever
    /// `used + 1`, which removes colour-permutation symmetry.
    fn search(&mut self, pos: usize, used: u32) -> bool {
        let Some(&v) = self.order.get(pos) else {
            return true;
        };
        if self.colour[v] != 0 {
            return self.search(pos + 1, used);
        }
        for c in 1..=(used + 1).min(self.k) {
            if self.fits(v, c) {
                self.colour[v] = c;
                if self.search(pos + 1, used.max(c)) {
                    return true;
                }
                self.colour[v] = 0;
            }
        }
        false
    }
}

/// Exact χ by backtracking over the descending-degree order, with a greedy
/// clique pre-coloured as the lower bound and a greedy colouring as the upper
/// bound. The witness is the first colouring found and is deterministic.
pub fn chromatic_number(g: &ColouredGraph, cap: usize) -> Result<Chromatic> {
    check_cap(g, cap)?;
    if g.vertex_count() == 0 {
        return Err(Error::validation("chromatic number of the empty graph"));
    }
    let adj = Adjacency::new(g);
    let greedy = greedy_colouring(&adj);
    let upper = *greedy.iter().max().expect("non-empty") as usize;
    let clique = greedy_clique(&adj);

    let mut order = clique.clone();
    order.extend(
        adj.degree_order()
            .into_iter()
            .filter(|v| !clique.contains(v)),
    );

    for k in clique.len()..upper {
        let mut search = KColouring {
            adj: &adj,
            order: order.clone(),
            colour: vec![0; adj.n],
            k: k as u32,
        };
        for (i, &v) in clique.iter().enumerate() {
            search.colour[v] = i as u32 + 1;
        }
        if search.search(0, clique.len() as u32) {
            return Ok(Chromatic {
                chi: k,
                colouring: search.colour,
            });
        }
    }
    Ok(Chromatic {
        chi: upper,
        colouring: greedy,
    })
}

/// Up to `limit` chromatic colourings that are pairwise distinct as vertex
/// partitions, in canonical order (vertices in id order, colours numbered by
/// first appearance).
pub fn chromatic_colourings(g: &ColouredGraph, cap: usize, limit: usize) -> Result<Vec<Vec<u32>>> {
    let chi = chromatic_number(g, cap)?.chi as u32;
    let adj = Adjacency::new(g);

    fn walk(
        adj: &Adjacency,
        v: usize,
        used: u32,
        k: u32,
        colour: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if v == adj.n {
            if used == k {
                out.push(colour.clone());
            }
            return;
        }
        // Not enough vertices left to open the remaining colours.
        if (k - used) as usize > adj.n - v {
            return;
        }
        for c in 1..=(used + 1).min(k) {
            if !adj.lists[v].iter().any(|&u| u < v && colour[u] == c) {
                colour[v] = c;
                walk(adj, v + 1, used.max(c), k, colour, out, limit);
                colour[v] = 0;
            }
        }
    }

    let mut out = Vec::new();
    let mut colour = vec![0; adj.n];
    walk(&adj, 0, 0, chi, &mut colour, &mut out, limit);
    Ok(out)
}

/// Exact clique number by branch and bound.
pub fn clique_number(g: &ColouredGraph, cap: usize) -> Result<usize> {
    check_cap(g, cap)?;
    let adj = Adjacency::new(g);

    fn expand(adj: &Adjacency, size: usize, candidates: &[usize], best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (i, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - i <= *best {
                return;
            }
            let next: Vec<usize> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&u| adj.matrix[v][u])
                .collect();
            expand(adj, size + 1, &next, best);
        }
    }

    let mut best = greedy_clique(&adj).len();
    expand(&adj, 0, &adj.degree_order(), &mut best);
    Ok(best)
}

/// Mycielski graph: originals `0..n`, shadows `n..2n`, apex `2n`.
pub fn mycielski(g: &ColouredGraph) -> ColouredGraph {
    let n = g.vertex_count();
    let mut m = ColouredGraph::new(2 * n + 1);
    for (u, v) in g.edges() {
        m.add_edge(u, v).expect("ids in range");
        m.add_edge(n + u, v).expect("ids in range");
        m.add_edge(n + v, u).expect("ids in range");
    }
    for i in 0..n {
        m.add_edge(2 * n, n + i).expect("ids in range");
    }
    m
}

/// Number of blending iterations to total blending, `χ - 1`.
pub fn t_chi_graph(g: &ColouredGraph, cap: usize) -> Result<usize> {
    if g.edge_count() == 0 {
        return Err(Error::validation(
            "t_chi needs a graph with at least one edge",
        ));
    }
    Ok(chromatic_number(g, cap)?.chi - 1)
}

pub fn graph_stats(g: &ColouredGraph, cap: usize) -> Result<GraphStats> {
    let chi = chromatic_number(g, cap)?.chi;
    Ok(GraphStats {
        chi,
        omega: clique_number(g, cap)?,
        delta: max_degree(g),
        triangle_free: is_triangle_free(g),
        t_chi: chi.saturating_sub(1),
    })
}
