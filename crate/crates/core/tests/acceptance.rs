//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use chromablend::config::{RunConfig, SweepBounds};
use chromablend::corpus::named_corpus;
use chromablend::oracle::{
    chromatic_number, is_triangle_free, mycielski, t_chi_graph, DEFAULT_ORACLE_CAP,
};
use chromablend::verify::{self, Check, Outcome, COLOURINGS_PER_GRAPH, SUBGRAPHS_PER_GRAPH};
use chromablend::{corpus, run_total_blending, ColourCluster};

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    ok: bool,
    detail: String,
}

fn bounds(max_l: usize, max_r: u32) -> SweepBounds {
    SweepBounds::new(max_l, max_r).unwrap()
}

fn config(max_l: usize, max_r: u32) -> RunConfig {
    RunConfig {
        sweep: bounds(max_l, max_r),
        ..RunConfig::default()
    }
}

/// Summarizes checks; any failing check fails the criterion.
fn summarize(checks: &[Check], elapsed: Duration, limit: Option<Duration>) -> Verdict {
    let failed: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .take(5)
        .map(|c| format!("{} {}: {}", c.section, c.instance, c.detail))
        .collect();
    let notes = checks
        .iter()
        .filter(|c| matches!(c.outcome, Outcome::Note(_)))
        .count();
    let in_time = limit.is_none_or(|l| elapsed < l);
    let mut detail = format!(
        "{} checks, {} failed, {notes} notes, {:.2}s",
        checks.len(),
        checks.iter().filter(|c| !c.passed()).count(),
        elapsed.as_secs_f64()
    );
    if let Some(l) = limit {
        detail.push_str(&format!(" (limit {}s)", l.as_secs()));
    }
    if !failed.is_empty() {
        detail.push_str(&format!("; first failures: {}", failed.join(" | ")));
    }
    Verdict {
        ok: failed.is_empty() && in_time && !checks.is_empty(),
        detail,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Criterion 1: Edge-maximal count: three routes agree for ℓ ≤ 6, weights ≤ 4, in < 10 s.
fn criterion_1() -> Verdict {
    let (checks, t) = timed(|| verify::eps_plus_checks(bounds(6, 4), 2000).unwrap());
    let mut v = summarize(&checks, t, Some(Duration::from_secs(10)));
    v.ok &= checks.len() == 16 + 64 + 256 + 1024 + 4096;
    v
}

/// Criterion 2: Type-I build for ℓ ≤ 5, weights ≤ 3: ε⁻ edges, connected, proper, χ = ℓ, in < 60 s.
fn criterion_2() -> Verdict {
    let (checks, t) = timed(|| verify::eps_minus_checks(bounds(5, 3), &config(5, 3)).unwrap());
    summarize(&checks, t, Some(Duration::from_secs(60)))
}

/// Criterion 3: Spider tree for the same sweep: N - 1 edges, proper, in < 5 s.
fn criterion_3() -> Verdict {
    let (checks, t) = timed(|| verify::min_proper_checks(bounds(5, 3), 2000).unwrap());
    summarize(&checks, t, Some(Duration::from_secs(5)))
}

/// Criterion 4: ε⁻ = ε⁺ ⟺ all weights 1 for ℓ ≥ 3; ℓ = 2 exceptions reported as notes.
fn criterion_4() -> Verdict {
    let (checks, t) = timed(|| verify::eps_equality_checks(bounds(5, 3)).unwrap());
    let mut v = summarize(&checks, t, None);
    // Only ℓ = 2 may carry notes, and there exactly the clusters with a unit
    // weight next to a weight above one.
    let noted: Vec<&str> = checks
        .iter()
        .filter(|c| matches!(c.outcome, Outcome::Note(_)))
        .map(|c| c.instance.as_str())
        .collect();
    v.ok &= noted == ["1,2", "1,3", "2,1", "3,1"];
    v.detail.push_str(&format!("; l=2 findings: {noted:?}"));
    v
}

/// Criterion 5: Single class first reached at iteration ℓ - 1 for ℓ ≤ 5, weights ≤ 4, in < 30 s.
fn criterion_5() -> Verdict {
    let (checks, t) = timed(|| verify::blend_cluster_checks(bounds(5, 4)).unwrap());
    summarize(&checks, t, Some(Duration::from_secs(30)))
}

/// Criterion 6: Graph-start blending over ≥ 100 connected graphs on ≤ 9 vertices with
/// up to 3 chromatic colourings each ends after χ - 1 iterations, in < 5 min.
fn criterion_6() -> Verdict {
    let cfg = RunConfig::default();
    let (checks, t) = timed(|| verify::blend_graph_checks(&cfg).unwrap());
    let mut v = summarize(&checks, t, Some(Duration::from_secs(300)));
    let corpus = named_corpus();
    v.ok &= corpus.len() >= 100 && checks.len() == corpus.len();
    let mut short = Vec::new();
    for (name, g) in &corpus {
        v.ok &= g.vertex_count() <= 9 && g.is_connected();
        let chi = chromatic_number(g, DEFAULT_ORACLE_CAP).unwrap().chi;
        let n = verify::chromatic_colouring_variants(g, DEFAULT_ORACLE_CAP, COLOURINGS_PER_GRAPH)
            .unwrap()
            .len();
        // A connected bipartite graph has one 2-partition, hence two colourings.
        let available = if chi == 2 { 2 } else { COLOURINGS_PER_GRAPH };
        if n < available {
            short.push(name.clone());
        }
    }
    v.ok &= short.is_empty();
    v.detail.push_str(&format!(
        "; {} graphs, too few colourings: {short:?}",
        corpus.len()
    ));
    v
}

/// Criterion 7: Null order = maximum edge count, attained at iteration ℓ - 2, on every
/// criterion-5 trace.
fn criterion_7() -> Verdict {
    let (checks, t) = timed(|| verify::max_edge_checks(bounds(5, 4)).unwrap());
    summarize(&checks, t, None)
}

/// Straight-line simulation of the recursion for the all-ones cluster:
/// labels are bitmasks, weights are u128, merging is done by sorting.
fn all_ones_null_order(l: u32) -> u128 {
    let mut classes: Vec<(u32, u128)> = (0..l).map(|i| (1 << i, 1)).collect();
    while classes.len() > 1 {
        let mut next: Vec<(u32, u128)> = Vec::new();
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                next.push((classes[i].0 | classes[j].0, classes[i].1 * classes[j].1));
            }
        }
        next.sort();
        let mut merged: Vec<(u32, u128)> = Vec::new();
        for (mask, w) in next {
            match merged.last_mut() {
                Some((m, acc)) if *m == mask => *acc += w,
                _ => merged.push((mask, w)),
            }
        }
        classes = merged;
    }
    classes[0].1
}

/// Criterion 8: All-ones null orders: 1, 3 by hand, 90 confirmed by the straight-line
/// simulation.
fn criterion_8() -> Verdict {
    // ℓ = 2: K₂ has one edge. ℓ = 3: K₃'s three edges give three distinct
    // pair colours, whose K_{1,1,1} has three edges, all blending to {1,2,3}.
    let hand = [(2u32, 1u128), (3, 3)];
    let mut ok = true;
    let mut seen = BTreeMap::new();
    for l in 2..=4u32 {
        let engine =
            run_total_blending(&ColourCluster::from_weights(vec![1u32; l as usize]).unwrap())
                .unwrap()
                .null_order
                .to_string();
        let simulated = all_ones_null_order(l);
        ok &= engine == simulated.to_string();
        seen.insert(l, engine);
    }
    for (l, expected) in hand {
        ok &= seen[&l] == expected.to_string();
    }
    ok &= seen[&4] == "90";
    Verdict {
        ok,
        detail: format!("null orders {seen:?}"),
    }
}

/// Criterion 9: ω - 1 ≤ t_χ ≤ Δ on the corpus; Mycielski graphs of triangle-free
/// corpus graphs stay triangle-free with t_χ = χ(G); < 2 min.
fn criterion_9() -> Verdict {
    let cfg = RunConfig::default();
    let ((b, m), t) = timed(|| {
        (
            verify::bounds_checks(&cfg).unwrap(),
            verify::mycielski_checks(&cfg).unwrap(),
        )
    });
    let mut all = b.clone();
    all.extend(m.iter().cloned());
    let mut v = summarize(&all, t, Some(Duration::from_secs(120)));
    let triangle_free = named_corpus()
        .iter()
        .filter(|(_, g)| is_triangle_free(g))
        .count();
    v.ok &= m.len() == triangle_free;
    let grotzsch = mycielski(&corpus::cycle(5));
    let chi = chromatic_number(&grotzsch, DEFAULT_ORACLE_CAP).unwrap().chi;
    v.ok &= chi == 4 && t_chi_graph(&grotzsch, DEFAULT_ORACLE_CAP).unwrap() == 3;
    v.detail.push_str(&format!(
        "; {triangle_free} triangle-free graphs; chi(mu(C5))={chi}"
    ));
    v
}

/// Criterion 10: 50 random connected subgraphs per corpus graph never exceed its t_χ.
fn criterion_10() -> Verdict {
    let cfg = RunConfig::default();
    let (checks, t) = timed(|| verify::monotone_checks(&cfg, SUBGRAPHS_PER_GRAPH).unwrap());
    summarize(&checks, t, None)
}

/// Criterion 11: Two `verify all` runs with identical config give byte-identical reports.
fn criterion_11() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_chromablend"))
            .args(["verify", "all", "--max-l", "4", "--max-r", "3"])
            .env_remove("CHROMABLEND_ORACLE_CAP")
            .env_remove("CHROMABLEND_MATERIALIZATION_CAP")
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let lib_a = verify::run(verify::Theorem::All, &config(4, 3))
        .unwrap()
        .render();
    let lib_b = verify::run(verify::Theorem::All, &config(4, 3))
        .unwrap()
        .render();
    let ok = a.status.success()
        && b.status.success()
        && a.stdout == b.stdout
        && lib_a == lib_b
        && a.stdout == lib_a.as_bytes();
    Verdict {
        ok,
        detail: format!(
            "cli exit {:?}/{:?}, {} bytes, cli identical={}, library identical={}",
            a.status.code(),
            b.status.code(),
            a.stdout.len(),
            a.stdout == b.stdout,
            lib_a == lib_b
        ),
    }
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("1 eps-plus triple agreement", criterion_1),
        ("2 eps-minus realization", criterion_2),
        ("3 minimal proper tree", criterion_3),
        ("4 eps equality iff unit weights", criterion_4),
        ("5 total blending at l-1", criterion_5),
        ("6 graph-start blending at chi-1", criterion_6),
        ("7 max edges at l-2 equals null order", criterion_7),
        ("8 all-ones null orders", criterion_8),
        ("9 sandwich bounds and Mycielski", criterion_9),
        ("10 subgraph monotonicity", criterion_10),
        ("11 deterministic verify report", criterion_11),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let v = f();
        println!(
            "{} criterion {name}: {}",
            if v.ok { "PASS" } else { "FAIL" },
            v.detail
        );
        if !v.ok {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
