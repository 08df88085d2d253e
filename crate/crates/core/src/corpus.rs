//! Graph families and the fixed test corpus used by the verification sweeps.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cluster::ColourCluster;
use crate::embodiment::build_max_embodiment;
use crate::graph::ColouredGraph;
use crate::oracle::mycielski;

/// Seed of the random part of [`standard_corpus`].
pub const CORPUS_SEED: u64 = 0x6368_726f_6d61;

pub fn path(n: usize) -> ColouredGraph {
    ColouredGraph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

pub fn cycle(n: usize) -> ColouredGraph {
    assert!(n >= 3, "cycles need at least 3 vertices");
    ColouredGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn complete(n: usize) -> ColouredGraph {
    ColouredGraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("valid clique")
}

pub fn star(leaves: usize) -> ColouredGraph {
    ColouredGraph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("valid star")
}

/// Complete multipartite graph with the given part sizes, uncoloured.
pub fn complete_multipartite(parts: &[u32]) -> ColouredGraph {
    let cluster = ColourCluster::from_weights(parts.iter().copied()).expect("positive part sizes");
    build_max_embodiment(&cluster, usize::MAX)
        .expect("no cap")
        .uncoloured()
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// with probability `p`, with vertex ids shuffled.
pub fn random_connected<R: Rng>(n: usize, p: f64, rng: &mut R) -> ColouredGraph {
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let mut g = ColouredGraph::new(n);
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        g.add_edge(ids[i], ids[parent]).expect("valid edge");
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid edge");
            }
        }
    }
    g
}

/// Random connected subgraph with at least one edge. `g` must be connected
/// with at least one edge.
pub fn random_connected_subgraph<R: Rng>(g: &ColouredGraph, rng: &mut R) -> ColouredGraph {
    let n = g.vertex_count();
    assert!(
        n >= 2 && g.is_connected(),
        "needs a connected graph with an edge"
    );
    let adj = g.adjacency();
    let target = rng.gen_range(2..=n);

    // Grow a connected vertex set from a random start.
    let start = rng.gen_range(0..n);
    let mut chosen = vec![start];
    let mut inside = vec![false; n];
    inside[start] = true;
    while chosen.len() < target {
        let frontier: Vec<usize> = chosen
            .iter()
            .flat_map(|&u| adj[u].iter().copied())
            .filter(|&v| !inside[v])
            .collect();
        let &next = frontier
            .choose(rng)
            .expect("connected graph has a frontier");
        inside[next] = true;
        chosen.push(next);
    }
    chosen.sort_unstable();
    let induced = g.induced_subgraph(&chosen);

    // Keep a random spanning tree of the induced graph and a random half of
    // the other edges.
    let k = induced.vertex_count();
    let iadj = induced.adjacency();
    let mut h = ColouredGraph::new(k);
    for (v, l) in induced.labels().iter().enumerate() {
        h.set_label(v, l.clone()).expect("in range");
    }
    let mut seen = vec![false; k];
    let root = rng.gen_range(0..k);
    seen[root] = true;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        let mut nbrs = iadj[u].clone();
        nbrs.shuffle(rng);
        for v in nbrs {
            if !seen[v] {
                seen[v] = true;
                h.add_edge(u, v).expect("valid edge");
                stack.push(u);
                stack.push(v);
                break;
            }
        }
    }
    for (u, v) in induced.edges() {
        if !h.has_edge(u, v) && rng.gen_bool(0.5) {
            h.add_edge(u, v).expect("valid edge");
        }
    }
    h
}

/// Integer partitions of `n` with parts listed in non-decreasing order.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in min..=rest {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}

/// Named connected graphs on at most 9 vertices: paths, cycles, complete
/// graphs, complete multipartite graphs, Mycielski graphs of small graphs and
/// seeded random graphs.
pub fn named_corpus() -> Vec<(String, ColouredGraph)> {
    let mut out = Vec::new();
    for n in 2..=9 {
        out.push((format!("P{n}"), path(n)));
    }
    for n in 3..=9 {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in 2..=9 {
        out.push((format!("K{n}"), complete(n)));
    }
    for n in 2..=9 {
        for parts in partitions(n) {
            if parts.len() >= 2 && parts.iter().any(|&p| p > 1) {
                let name = parts
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                out.push((format!("K({name})"), complete_multipartite(&parts)));
            }
        }
    }
    for (name, g) in [
        ("K2", complete(2)),
        ("P3", path(3)),
        ("K3", complete(3)),
        ("P4", path(4)),
        ("C4", cycle(4)),
        ("S3", star(3)),
    ] {
        out.push((format!("mu({name})"), mycielski(&g)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    for i in 0..30 {
        let n = 4 + i % 6;
        let p = [0.15, 0.3, 0.5, 0.7][i % 4];
        out.push((
            format!("R{i}(n={n},p={p})"),
            random_connected(n, p, &mut rng),
        ));
    }
    out
}

pub fn standard_corpus() -> Vec<ColouredGraph> {
    named_corpus().into_iter().map(|(_, g)| g).collect()
}
