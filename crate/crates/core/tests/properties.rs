use chromablend::config::{RunConfig, SweepBounds};
use chromablend::corpus::{self, random_connected};
use chromablend::oracle::{chromatic_colourings, graph_stats, DEFAULT_ORACLE_CAP};
use chromablend::verify;
use chromablend::{
    build_max_embodiment, chromatic_number, is_proper, run_total_blending_from_graph,
    ColourCluster, ColouredGraph,
};
use proptest::prelude::*;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CAP: usize = DEFAULT_ORACLE_CAP;

/// χ by enumerating every assignment of `k` colours, smallest `k` first.
fn exhaustive_chi(g: &ColouredGraph) -> usize {
    let n = g.vertex_count();
    let edges: Vec<_> = g.edges().collect();
    (1..=n)
        .find(|&k| {
            (0..k.pow(n as u32)).any(|code| {
                let colour: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
                edges.iter().all(|&(u, v)| colour[u] != colour[v])
            })
        })
        .unwrap_or(0)
}

#[test]
fn max_embodiment_has_chromatic_number_l() {
    for w in verify::base_clusters(2, SweepBounds::new(5, 3).unwrap()) {
        let c = ColourCluster::from_weights(w.iter().copied()).unwrap();
        let g = build_max_embodiment(&c, 100).unwrap();
        assert_eq!(chromatic_number(&g, CAP).unwrap().chi, w.len(), "{w:?}");
    }
}

#[test]
fn removing_a_clique_edge_lowers_chi() {
    let checks = verify::clique_edge_deletion_checks(7, &RunConfig::default()).unwrap();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c.passed()), "{checks:?}");
}

#[test]
fn corpus_stats_are_consistent() {
    for (name, g) in corpus::named_corpus() {
        let s = graph_stats(&g, CAP).unwrap();
        assert!(s.omega <= s.chi && s.chi <= s.delta + 1, "{name}: {s:?}");
        assert_eq!(s.t_chi, s.chi - 1, "{name}");
    }
}

#[test]
fn every_partition_gives_the_same_t_chi() {
    for (name, g) in corpus::named_corpus()
        .into_iter()
        .filter(|(_, g)| g.vertex_count() <= 7)
    {
        let chi = chromatic_number(&g, CAP).unwrap().chi;
        for col in chromatic_colourings(&g, CAP, 40).unwrap() {
            let t = run_total_blending_from_graph(&g.with_colouring(&col).unwrap(), CAP).unwrap();
            assert_eq!(t.t_chi, chi - 1, "{name} {col:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_matches_exhaustive_search(n in 2usize..=7, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let found = chromatic_number(&g, CAP).unwrap();
        prop_assert_eq!(found.chi, exhaustive_chi(&g));
        let coloured = g.with_colouring(&found.colouring).unwrap();
        prop_assert!(is_proper(&coloured));
        prop_assert_eq!(coloured.colour_count(), found.chi);
    }

    #[test]
    fn graph_start_blending_takes_chi_minus_one(n in 2usize..=9, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_connected(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let found = chromatic_number(&g, CAP).unwrap();
        let t = run_total_blending_from_graph(&g.with_colouring(&found.colouring).unwrap(), CAP).unwrap();
        prop_assert_eq!(t.t_chi, found.chi - 1);
        prop_assert_eq!(t.steps[1].vertex_count.to_string(), g.edge_count().to_string());
    }
}
