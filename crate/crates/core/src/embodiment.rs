//! Graphs realizing a colour cluster as a proper colouring.
//!
//! Vertex ids are assigned class by class in canonical order, so the `j`-th
//! vertex (0-based) of class `i` is `offset(i) + j`. The first vertex of each
//! class is its representative.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::cluster::ColourCluster;
use crate::error::{Error, Result};
use crate::graph::ColouredGraph;

pub const DEFAULT_MATERIALIZATION_CAP: usize = 2000;

fn choose2(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    n * (n - 1u32) / 2u32
}

/// Edge count of the complete multipartite graph on the cluster's classes.
///
/// Computed both as `C(N,2) - Σ C(r_i,2)` and as `Σ_{i<j} r_i·r_j`; the two
/// must agree.
pub fn epsilon_plus(cluster: &ColourCluster) -> BigUint {
    let by_binomials = epsilon_plus_binomial(cluster);
    let by_products = epsilon_plus_pairwise(cluster);
    assert_eq!(
        by_binomials, by_products,
        "edge-maximal count formulas disagree for {cluster}"
    );
    by_products
}

/// `C(N,2) - Σ C(r_i,2)`.
pub fn epsilon_plus_binomial(cluster: &ColourCluster) -> BigUint {
    let total = choose2(&cluster.total_weight());
    let intra: BigUint = cluster.weights().map(choose2).sum();
    total - intra
}

/// `Σ r_i·r_j` over unordered pairs of distinct classes.
pub fn epsilon_plus_pairwise(cluster: &ColourCluster) -> BigUint {
    let weights: Vec<&BigUint> = cluster.weights().collect();
    let mut sum = BigUint::zero();
    for (i, a) in weights.iter().enumerate() {
        for b in &weights[i + 1..] {
            sum += *a * *b;
        }
    }
    sum
}

/// Minimum edge count of a connected embodiment keeping the base cluster a
/// chromatic colouring: `Σ r_i + ℓ(ℓ-3)/2`.
pub fn epsilon_minus(cluster: &ColourCluster) -> Result<BigUint> {
    cluster.require_base()?;
    let l = cluster.class_count();
    // ℓ(ℓ-3)/2 is -1 at ℓ = 2 and non-negative from ℓ = 3; N ≥ ℓ keeps the sum positive.
    let n = cluster.total_weight();
    Ok(if l == 2 {
        n - 1u32
    } else {
        n + BigUint::from(l * (l - 3) / 2)
    })
}

/// True when the minimum and maximum edge counts coincide.
pub fn eps_equality_holds(cluster: &ColourCluster) -> Result<bool> {
    Ok(epsilon_minus(cluster)? == epsilon_plus(cluster))
}

fn materializable(cluster: &ColourCluster, cap: usize) -> Result<(usize, Vec<usize>)> {
    let n = cluster.total_weight();
    match n.to_usize() {
        Some(n) if n <= cap => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "embodiment",
                actual: n.to_string(),
                cap,
            })
        }
    }
    let sizes: Vec<usize> = cluster
        .weights()
        .map(|w| w.to_usize().expect("bounded by total weight"))
        .collect();
    Ok((sizes.iter().sum(), sizes))
}

/// Vertices of every class, labelled with the class label; no edges yet.
/// Returns the graph and the vertex ids of each class.
fn labelled_parts(cluster: &ColourCluster, cap: usize) -> Result<(ColouredGraph, Vec<Vec<usize>>)> {
    let (_, sizes) = materializable(cluster, cap)?;
    let mut g = ColouredGraph::new(0);
    let parts = cluster
        .classes()
        .iter()
        .zip(&sizes)
        .map(|(class, &size)| {
            (0..size)
                .map(|_| g.add_vertex(Some(class.label().clone())))
                .collect()
        })
        .collect();
    Ok((g, parts))
}

/// Complete multipartite graph with one part per class. A single-class
/// cluster yields the edgeless graph.
pub fn build_max_embodiment(cluster: &ColourCluster, cap: usize) -> Result<ColouredGraph> {
    let (mut g, parts) = labelled_parts(cluster, cap)?;
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            for &u in a {
                for &v in b {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

/// Type-I minimal chromatic embodiment: the class representatives form
/// `K_ℓ`; every other vertex of class `i` is a pendant on the representative
/// of class 1, or on the representative of class 2 when `i = 1`.
pub fn build_min_chromatic_embodiment(
    cluster: &ColourCluster,
    cap: usize,
) -> Result<ColouredGraph> {
    cluster.require_base()?;
    let (mut g, parts) = labelled_parts(cluster, cap)?;
    let reps: Vec<usize> = parts.iter().map(|p| p[0]).collect();
    for (i, &a) in reps.iter().enumerate() {
        for &b in &reps[i + 1..] {
            g.add_edge(a, b)?;
        }
    }
    for (i, part) in parts.iter().enumerate() {
        let anchor = if i == 0 { reps[1] } else { reps[0] };
        for &v in &part[1..] {
            g.add_edge(anchor, v)?;
        }
    }
    Ok(g)
}

/// Spider tree with `N - 1` edges: every vertex outside class 1 hangs off the
/// representative of class 1, the rest of class 1 hangs off the
/// representative of class 2.
pub fn build_min_proper_embodiment(cluster: &ColourCluster, cap: usize) -> Result<ColouredGraph> {
    cluster.require_base()?;
    let (mut g, parts) = labelled_parts(cluster, cap)?;
    let centre = parts[0][0];
    let second = parts[1][0];
    for part in &parts[1..] {
        for &v in part {
            g.add_edge(centre, v)?;
        }
    }
    for &v in &parts[0][1..] {
        g.add_edge(second, v)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::{normalize, ColourClass, ColourLabel};

    fn c(lit: &str) -> ColourCluster {
        lit.parse().unwrap()
    }

    fn big(n: u32) -> BigUint {
        BigUint::from(n)
    }

    /// Counts edges of the complete multipartite graph by testing every
    /// vertex pair for membership in different parts.
    fn brute_multipartite_edges(weights: &[usize]) -> usize {
        let part: Vec<usize> = weights
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| std::iter::repeat_n(i, w))
            .collect();
        let mut m = 0;
        for u in 0..part.len() {
            for v in u + 1..part.len() {
                if part[u] != part[v] {
                    m += 1;
                }
            }
        }
        m
    }

    #[test]
    fn epsilon_plus_examples() {
        assert_eq!(epsilon_plus(&c("1,1")), big(1));
        assert_eq!(epsilon_plus(&c("2,3")), big(6));
        assert_eq!(brute_multipartite_edges(&[2, 3, 4]), 26);
        assert_eq!(epsilon_plus(&c("2,3,4")), big(26));
        assert_eq!(epsilon_plus(&c("1,1,1,1")), big(6));
        assert_eq!(epsilon_plus(&c("7")), big(0));
    }

    #[test]
    fn epsilon_minus_examples() {
        assert_eq!(epsilon_minus(&c("1,1,1")).unwrap(), big(3));
        assert_eq!(epsilon_minus(&c("3,1")).unwrap(), big(3));
        assert_eq!(epsilon_minus(&c("2,2,2")).unwrap(), big(6));
        assert_eq!(epsilon_minus(&c("2,2,3")).unwrap(), big(7));
    }

    #[test]
    fn epsilon_minus_rejects_single_class_and_blends() {
        assert!(matches!(epsilon_minus(&c("4")), Err(Error::Validation(_))));
        let blended = normalize([
            ColourClass::new(ColourLabel::new([1, 2]).unwrap(), 1u32).unwrap(),
            ColourClass::new(ColourLabel::new([3]).unwrap(), 1u32).unwrap(),
        ])
        .unwrap();
        assert!(matches!(epsilon_minus(&blended), Err(Error::Validation(_))));
        assert!(build_min_chromatic_embodiment(&blended, 100).is_err());
        assert!(build_min_proper_embodiment(&blended, 100).is_err());
    }

    #[test]
    fn eps_equality_examples() {
        assert!(eps_equality_holds(&c("1,1,1,1")).unwrap());
        assert!(!eps_equality_holds(&c("2,2,3")).unwrap());
        assert_eq!(epsilon_plus(&c("2,2,3")), big(16));
        // ℓ = 2 with one unit weight: equality holds although r₁ > 1.
        assert!(eps_equality_holds(&c("2,1")).unwrap());
        assert!(!eps_equality_holds(&c("2,2")).unwrap());
    }

    #[test]
    fn max_embodiment_examples() {
        let g = build_max_embodiment(&c("2,3"), 100).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 6));
        let k3 = build_max_embodiment(&c("1,1,1"), 100).unwrap();
        assert_eq!(k3.edge_count(), 3);
        let single =
            normalize([ColourClass::new(ColourLabel::new([1, 2]).unwrap(), 4u32).unwrap()])
                .unwrap();
        let null = build_max_embodiment(&single, 100).unwrap();
        assert_eq!((null.vertex_count(), null.edge_count()), (4, 0));
        assert!(null
            .labels()
            .iter()
            .all(|l| l.as_ref().unwrap().members() == [1, 2]));
    }

    #[test]
    fn builders_respect_cap() {
        let err = build_max_embodiment(&c("10,10"), 19).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 19, .. }));
        assert!(build_max_embodiment(&c("10,10"), 20).is_ok());
        let huge = c("100000000000000000000000,1");
        assert!(matches!(
            build_min_proper_embodiment(&huge, DEFAULT_MATERIALIZATION_CAP),
            Err(Error::CapExceeded { .. })
        ));
        // Symbolic counts still work beyond the cap.
        assert_eq!(epsilon_plus(&huge).to_string(), "100000000000000000000000");
    }

    #[test]
    fn min_chromatic_examples() {
        let k3 = build_min_chromatic_embodiment(&c("1,1,1"), 100).unwrap();
        assert_eq!(k3.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
        let p3 = build_min_chromatic_embodiment(&c("2,1"), 100).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(p3.is_tree());
        let g = build_min_chromatic_embodiment(&c("2,2,2"), 100).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 6));
        assert!(g.is_connected());
    }

    #[test]
    fn min_proper_examples() {
        let e = build_min_proper_embodiment(&c("1,1"), 100).unwrap();
        assert_eq!(e.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let t = build_min_proper_embodiment(&c("2,2"), 100).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.edge_count(), 3);
        let t = build_min_proper_embodiment(&c("3,1,1"), 100).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.edge_count(), 4);
        for (u, v) in t.edges() {
            assert_ne!(t.label(u), t.label(v));
        }
    }
}
