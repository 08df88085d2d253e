//! Exhaustive verification sweeps over base clusters and the graph corpus.
//!
//! Every check produces one [`Check`] line. Instances are evaluated in
//! parallel and collected in canonical order, so a report depends only on
//! its inputs.

use std::fmt::Write as _;

use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::blending::{run_total_blending, run_total_blending_from_graph, BlendTrace};
use crate::cluster::ColourCluster;
use crate::config::{RunConfig, SweepBounds};
use crate::corpus::{named_corpus, random_connected_subgraph, CORPUS_SEED};
use crate::embodiment::{
    build_max_embodiment, build_min_chromatic_embodiment, build_min_proper_embodiment,
    epsilon_minus, epsilon_plus_binomial, epsilon_plus_pairwise,
};
use crate::error::{Error, Result};
use crate::graph::ColouredGraph;
use crate::oracle::{
    chromatic_colourings, chromatic_number, clique_number, is_proper, is_triangle_free, mycielski,
    t_chi_graph,
};

/// Random connected subgraphs drawn per corpus graph by the monotonicity sweep.
pub const SUBGRAPHS_PER_GRAPH: usize = 50;
/// Chromatic colourings tried per corpus graph by the graph-start sweep.
pub const COLOURINGS_PER_GRAPH: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    Eps,
    Blend,
    Bounds,
    Mycielski,
    Monotone,
    All,
}

impl std::str::FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "eps" => Theorem::Eps,
            "blend" => Theorem::Blend,
            "bounds" => Theorem::Bounds,
            "mycielski" => Theorem::Mycielski,
            "monotone" => Theorem::Monotone,
            "all" => Theorem::All,
            _ => return Err(Error::validation(format!("unknown theorem selector '{s}'"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Recorded finding that is not a failure.
    Note(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub section: &'static str,
    pub instance: String,
    pub detail: String,
    pub outcome: Outcome,
}

impl Check {
    fn new(section: &'static str, instance: impl Into<String>, ok: bool, detail: String) -> Self {
        Check {
            section,
            instance: instance.into(),
            outcome: if ok {
                Outcome::Pass
            } else {
                Outcome::Fail(detail.clone())
            },
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        !matches!(self.outcome, Outcome::Fail(_))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn notes(&self) -> impl Iterator<Item = &Check> {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Note(_)))
    }

    pub fn all_passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// One line per check, then per-section totals and an overall verdict.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match &c.outcome {
                Outcome::Pass => "PASS",
                Outcome::Fail(_) => "FAIL",
                Outcome::Note(_) => "NOTE",
            };
            let _ = writeln!(out, "{tag} {} {}: {}", c.section, c.instance, c.detail);
        }
        let mut sections: Vec<&'static str> = Vec::new();
        for c in &self.checks {
            if !sections.contains(&c.section) {
                sections.push(c.section);
            }
        }
        out.push('\n');
        for s in sections {
            let of = |f: fn(&Outcome) -> bool| {
                self.checks
                    .iter()
                    .filter(|c| c.section == s && f(&c.outcome))
                    .count()
            };
            let _ = writeln!(
                out,
                "{s}: {} pass, {} fail, {} note",
                of(|o| matches!(o, Outcome::Pass)),
                of(|o| matches!(o, Outcome::Fail(_))),
                of(|o| matches!(o, Outcome::Note(_))),
            );
        }
        let verdict = if self.all_passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "RESULT: {verdict}");
        out
    }
}

/// Every weight vector with `min_l <= ℓ <= max_l` and weights in
/// `1..=max_r`, by ℓ then lexicographically.
pub fn base_clusters(min_l: usize, bounds: SweepBounds) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for l in min_l.max(1)..=bounds.max_l {
        let mut w = vec![1u32; l];
        loop {
            out.push(w.clone());
            let Some(i) = (0..l).rev().find(|&i| w[i] < bounds.max_r) else {
                break;
            };
            w[i] += 1;
            for x in &mut w[i + 1..] {
                *x = 1;
            }
        }
    }
    out
}

fn literal(w: &[u32]) -> String {
    w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn cluster(w: &[u32]) -> ColourCluster {
    ColourCluster::from_weights(w.iter().copied()).expect("sweep weights are positive")
}

fn sweep<F>(bounds: SweepBounds, f: F) -> Result<Vec<Check>>
where
    F: Fn(&[u32]) -> Result<Check> + Sync,
{
    base_clusters(2, bounds).par_iter().map(|w| f(w)).collect()
}

fn require_vertices(bounds: SweepBounds, cap: usize, what: &str) -> Result<()> {
    if bounds.max_vertices() > cap {
        return Err(Error::validation(format!(
            "sweep reaches {} vertices, above the {what} cap {cap}",
            bounds.max_vertices()
        )));
    }
    Ok(())
}

/// Edge-maximal count: binomial form, pairwise-product form and the edge
/// count of the built complete multipartite graph all agree.
pub fn eps_plus_checks(bounds: SweepBounds, materialization_cap: usize) -> Result<Vec<Check>> {
    require_vertices(bounds, materialization_cap, "materialization")?;
    sweep(bounds, |w| {
        let c = cluster(w);
        let binomial = epsilon_plus_binomial(&c);
        let pairwise = epsilon_plus_pairwise(&c);
        let built = BigUint::from(build_max_embodiment(&c, materialization_cap)?.edge_count());
        Ok(Check::new(
            "eps-plus",
            literal(w),
            binomial == pairwise && pairwise == built,
            format!("binomial={binomial} pairwise={pairwise} built={built}"),
        ))
    })
}

/// Type-I build: exactly ε⁻ edges, connected, proper, χ = ℓ.
pub fn eps_minus_checks(bounds: SweepBounds, cfg: &RunConfig) -> Result<Vec<Check>> {
    require_vertices(bounds, cfg.materialization_cap, "materialization")?;
    require_vertices(bounds, cfg.oracle_vertex_cap, "oracle")?;
    sweep(bounds, |w| {
        let c = cluster(w);
        let expected = epsilon_minus(&c)?;
        let g = build_min_chromatic_embodiment(&c, cfg.materialization_cap)?;
        let edges = BigUint::from(g.edge_count());
        let chi = chromatic_number(&g, cfg.oracle_vertex_cap)?.chi;
        let connected = g.is_connected();
        let proper = is_proper(&g);
        Ok(Check::new(
            "eps-minus",
            literal(w),
            edges == expected && connected && proper && chi == w.len(),
            format!(
                "edges={edges} expected={expected} connected={connected} proper={proper} chi={chi}"
            ),
        ))
    })
}

/// Spider tree: `N - 1` edges, connected, proper.
pub fn min_proper_checks(bounds: SweepBounds, materialization_cap: usize) -> Result<Vec<Check>> {
    require_vertices(bounds, materialization_cap, "materialization")?;
    sweep(bounds, |w| {
        let g = build_min_proper_embodiment(&cluster(w), materialization_cap)?;
        let n: usize = w.iter().map(|&r| r as usize).sum();
        let tree = g.is_tree();
        let proper = is_proper(&g);
        Ok(Check::new(
            "min-proper",
            literal(w),
            g.edge_count() + 1 == n && tree && proper,
            format!("edges={} n={n} tree={tree} proper={proper}", g.edge_count()),
        ))
    })
}

/// ε⁻ = ε⁺ exactly when every weight is 1. Asserted for ℓ ≥ 3; for ℓ = 2
/// instances where the equivalence breaks are recorded as notes.
pub fn eps_equality_checks(bounds: SweepBounds) -> Result<Vec<Check>> {
    sweep(bounds, |w| {
        let c = cluster(w);
        let minus = epsilon_minus(&c)?;
        let plus = epsilon_plus_pairwise(&c);
        let equal = minus == plus;
        let unit = c.all_unit_weights();
        let detail = format!("eps-={minus} eps+={plus} all_unit={unit}");
        let mut check = Check::new("eps-equality", literal(w), equal == unit, detail);
        if w.len() == 2 && equal != unit {
            check.outcome = Outcome::Note("l = 2 boundary: equality with a weight above 1".into());
        }
        Ok(check)
    })
}

/// Removing any one edge of `K_ℓ` lowers χ to ℓ - 1.
pub fn clique_edge_deletion_checks(max_l: usize, cfg: &RunConfig) -> Result<Vec<Check>> {
    (2..=max_l)
        .into_par_iter()
        .map(|l| {
            let k = build_min_chromatic_embodiment(&cluster(&vec![1; l]), cfg.materialization_cap)?;
            let mut worst = Vec::new();
            for (u, v) in k.edges() {
                let mut g = k.clone();
                g.remove_edge(u, v);
                let chi = chromatic_number(&g, cfg.oracle_vertex_cap)?.chi;
                if chi != l - 1 {
                    worst.push(format!("{u}-{v}:chi={chi}"));
                }
            }
            Ok(Check::new(
                "clique-edge-deletion",
                format!("K{l}"),
                worst.is_empty(),
                if worst.is_empty() {
                    format!("all {} deletions give chi={}", k.edge_count(), l - 1)
                } else {
                    worst.join(" ")
                },
            ))
        })
        .collect()
}

fn edge_counts(trace: &BlendTrace) -> String {
    trace
        .steps
        .iter()
        .map(|s| s.edge_count.to_string())
        .collect::<Vec<_>>()
        .join("/")
}

/// Cluster-start recursion: single class first reached at iteration ℓ - 1,
/// final label `{1..ℓ}`.
pub fn blend_cluster_checks(bounds: SweepBounds) -> Result<Vec<Check>> {
    sweep(bounds, |w| {
        let l = w.len();
        let t = run_total_blending(&cluster(w))?;
        let before = t
            .steps
            .get(l - 2)
            .map(|s| s.cluster.class_count())
            .unwrap_or(0);
        let full: Vec<u32> = (1..=l as u32).collect();
        let final_label_ok = t.steps.last().expect("non-empty").cluster.classes()[0]
            .label()
            .members()
            == full;
        Ok(Check::new(
            "blend-cluster",
            literal(w),
            t.t_chi == l - 1 && before > 1 && final_label_ok,
            format!(
                "t_chi={} expected={} classes_at_l-2={before} final_label_full={final_label_ok}",
                t.t_chi,
                l - 1
            ),
        ))
    })
}

/// Null-graph order equals the maximum edge count, attained at iteration ℓ - 2.
pub fn max_edge_checks(bounds: SweepBounds) -> Result<Vec<Check>> {
    sweep(bounds, |w| {
        let l = w.len();
        let t = run_total_blending(&cluster(w))?;
        let max = t
            .steps
            .iter()
            .map(|s| &s.edge_count)
            .max()
            .expect("non-empty")
            .clone();
        let at = &t.steps[l - 2].edge_count;
        Ok(Check::new(
            "max-edges",
            literal(w),
            t.null_order == max && *at == max,
            format!(
                "null_order={} max={max} edges@l-2={at} edges={}",
                t.null_order,
                edge_counts(&t)
            ),
        ))
    })
}

/// Graph-start blending on the edge-maximal embodiment reproduces the
/// cluster-start trace.
pub fn graph_cluster_consistency_checks(
    bounds: SweepBounds,
    cfg: &RunConfig,
) -> Result<Vec<Check>> {
    require_vertices(bounds, cfg.materialization_cap, "materialization")?;
    require_vertices(bounds, cfg.oracle_vertex_cap, "oracle")?;
    sweep(bounds, |w| {
        let c = cluster(w);
        let symbolic = run_total_blending(&c)?;
        let g = build_max_embodiment(&c, cfg.materialization_cap)?;
        let from_graph = run_total_blending_from_graph(&g, cfg.oracle_vertex_cap)?;
        Ok(Check::new(
            "graph-cluster-consistency",
            literal(w),
            symbolic == from_graph,
            format!(
                "t_chi={} null_order={}",
                from_graph.t_chi, from_graph.null_order
            ),
        ))
    })
}

/// Distinct chromatic colourings of `g`: the oracle witness, further
/// partitions, then colour renamings of those, up to `want` in total.
pub fn chromatic_colouring_variants(
    g: &ColouredGraph,
    cap: usize,
    want: usize,
) -> Result<Vec<Vec<u32>>> {
    let witness = chromatic_number(g, cap)?;
    let chi = witness.chi as u32;
    let mut out = vec![witness.colouring];
    let push = |out: &mut Vec<Vec<u32>>, c: Vec<u32>| {
        if out.len() < want && !out.contains(&c) {
            out.push(c);
        }
    };
    let partitions = chromatic_colourings(g, cap, want)?;
    for p in &partitions {
        push(&mut out, p.clone());
    }
    let renamings: [fn(u32, u32) -> u32; 2] = [|c, k| c % k + 1, |c, k| k + 1 - c];
    for p in partitions {
        for rename in renamings {
            push(&mut out, p.iter().map(|&c| rename(c, chi)).collect());
        }
    }
    Ok(out)
}

/// Graph-start blending with several chromatic colourings ends after χ - 1
/// iterations.
pub fn blend_graph_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    named_corpus()
        .par_iter()
        .map(|(name, g)| {
            let chi = chromatic_number(g, cfg.oracle_vertex_cap)?.chi;
            let colourings =
                chromatic_colouring_variants(g, cfg.oracle_vertex_cap, COLOURINGS_PER_GRAPH)?;
            let mut t_chis = Vec::new();
            for col in &colourings {
                let trace =
                    run_total_blending_from_graph(&g.with_colouring(col)?, cfg.oracle_vertex_cap)?;
                t_chis.push(trace.t_chi);
            }
            Ok(Check::new(
                "blend-graph",
                name.clone(),
                t_chis.iter().all(|&t| t == chi - 1),
                format!("chi={chi} colourings={} t_chi={t_chis:?}", colourings.len()),
            ))
        })
        .collect()
}

/// ω - 1 ≤ t_χ ≤ Δ on the corpus.
pub fn bounds_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    named_corpus()
        .par_iter()
        .map(|(name, g)| {
            let omega = clique_number(g, cfg.oracle_vertex_cap)?;
            let t = t_chi_graph(g, cfg.oracle_vertex_cap)?;
            let delta = g.max_degree();
            Ok(Check::new(
                "bounds",
                name.clone(),
                omega - 1 <= t && t <= delta,
                format!("omega={omega} t_chi={t} delta={delta}"),
            ))
        })
        .collect()
}

/// For triangle-free corpus graphs with χ = k: μ(G) is triangle-free and
/// t_χ(μ(G)) = k.
pub fn mycielski_checks(cfg: &RunConfig) -> Result<Vec<Check>> {
    named_corpus()
        .par_iter()
        .filter(|(_, g)| is_triangle_free(g))
        .map(|(name, g)| {
            let k = chromatic_number(g, cfg.oracle_vertex_cap)?.chi;
            let m = mycielski(g);
            let tf = is_triangle_free(&m);
            let t = t_chi_graph(&m, cfg.oracle_vertex_cap)?;
            Ok(Check::new(
                "mycielski",
                format!("mu({name})"),
                tf && t == k,
                format!(
                    "chi(G)={k} triangle_free={tf} t_chi(mu)={t} n={}",
                    m.vertex_count()
                ),
            ))
        })
        .collect()
}

/// t_χ(H) ≤ t_χ(G) for random connected subgraphs H of each corpus graph.
pub fn monotone_checks(cfg: &RunConfig, per_graph: usize) -> Result<Vec<Check>> {
    named_corpus()
        .par_iter()
        .enumerate()
        .map(|(i, (name, g))| {
            let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ (i as u64 + 1));
            let tg = t_chi_graph(g, cfg.oracle_vertex_cap)?;
            let mut worst = 0;
            let mut violations = 0;
            for _ in 0..per_graph {
                let h = random_connected_subgraph(g, &mut rng);
                let th = t_chi_graph(&h, cfg.oracle_vertex_cap)?;
                worst = worst.max(th);
                if th > tg {
                    violations += 1;
                }
            }
            Ok(Check::new(
                "monotone",
                name.clone(),
                violations == 0,
                format!("t_chi(G)={tg} max t_chi(H)={worst} subgraphs={per_graph} violations={violations}"),
            ))
        })
        .collect()
}

/// Runs the sweeps selected by `theorem`.
pub fn run(theorem: Theorem, cfg: &RunConfig) -> Result<Report> {
    cfg.validate()?;
    let b = cfg.sweep;
    let mut checks = Vec::new();
    let wants = |t: Theorem| theorem == Theorem::All || theorem == t;
    if wants(Theorem::Eps) {
        checks.extend(eps_plus_checks(b, cfg.materialization_cap)?);
        checks.extend(eps_minus_checks(b, cfg)?);
        checks.extend(min_proper_checks(b, cfg.materialization_cap)?);
        checks.extend(eps_equality_checks(b)?);
        checks.extend(clique_edge_deletion_checks(b.max_l, cfg)?);
    }
    if wants(Theorem::Blend) {
        checks.extend(blend_cluster_checks(b)?);
        checks.extend(max_edge_checks(b)?);
        checks.extend(graph_cluster_consistency_checks(b, cfg)?);
        checks.extend(blend_graph_checks(cfg)?);
    }
    if wants(Theorem::Bounds) {
        checks.extend(bounds_checks(cfg)?);
    }
    if wants(Theorem::Mycielski) {
        checks.extend(mycielski_checks(cfg)?);
    }
    if wants(Theorem::Monotone) {
        checks.extend(monotone_checks(cfg, SUBGRAPHS_PER_GRAPH)?);
    }
    Ok(Report { checks })
}
