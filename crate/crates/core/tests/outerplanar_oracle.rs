//! Outerplanar characterizations against the brute-force oracles on seeded
//! random outerplanar graphs.

use exlab::determining::{is_determining, minimal_determining_sets};
use exlab::exchange::exchange_property;
use exlab::graph::{generate, Family, FamilySpec};
use exlab::outerplanar::*;
use exlab::trees::is_determining_tree;
use exlab::{Budget, Graph, SetKind, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn corpus(biconnected: bool) -> Vec<Graph> {
    (0..100u64)
        .map(|seed| {
            let n = 3 + seed % 8;
            let params = if biconnected { vec![n, 1] } else { vec![n] };
            generate(&FamilySpec::seeded(Family::RandomOuterplanar, params, seed)).unwrap()
        })
        .collect()
}

#[test]
fn corpus_is_connected_outerplanar() {
    for g in corpus(false).iter().chain(&corpus(true)) {
        assert!(g.is_connected());
        assert!(is_outerplanar(g).unwrap());
    }
    for g in corpus(true) {
        assert_eq!(biconnected_components(&g).len(), 1);
    }
}

#[test]
fn exchange_decision_matches_oracle() {
    for g in corpus(false).iter().chain(&corpus(true)) {
        let evidence = exchange_decision_outerplanar(g).unwrap();
        let oracle = exchange_property(g, SetKind::Determining, &mut Budget::default()).unwrap();
        assert_eq!(evidence.holds, oracle.holds, "{:?} {evidence:?}", g.to_edge_list());
        if !evidence.holds {
            assert!(oracle.sizes.contains_key(&1) && oracle.sizes.contains_key(&2));
        }
    }
}

#[test]
fn two_connected_decision_and_census() {
    for g in corpus(true) {
        let evidence = exchange_decision_2connected(&g).unwrap();
        let oracle = exchange_property(&g, SetKind::Determining, &mut Budget::default()).unwrap();
        assert_eq!(evidence.holds, oracle.holds);
        let census = minimal_determining_sets_2connected(&g).unwrap();
        let brute = minimal_determining_sets(&g, None, &mut Budget::default()).unwrap();
        assert_eq!(census, brute, "{:?}", g.to_edge_list());
    }
}

#[test]
fn reflections_fix_at_most_two_vertices() {
    for g in corpus(true) {
        for a in classify_cycle_action(&g).unwrap().actions {
            if let CycleMotion::Reflection { fixed } = a.motion {
                assert!(fixed.len() <= 2);
            }
        }
    }
}

#[test]
fn determining_test_matches_stabilizers() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in corpus(false).iter().chain(&corpus(true)) {
        let analysis = OuterplanarAnalysis::new(g).unwrap();
        for _ in 0..500 {
            let s = VertexSet::from_bits(rng.random::<u64>() & VertexSet::full(g.n()).bits());
            assert_eq!(analysis.is_determining(s), is_determining(g, s).unwrap(), "{:?} {s}", g.to_edge_list());
        }
    }
}

#[test]
fn trees_agree_with_tree_criterion() {
    for seed in 0..40 {
        let t = generate(&FamilySpec::seeded(Family::RandomTree, vec![3 + seed % 8], seed)).unwrap();
        let analysis = OuterplanarAnalysis::new(&t).unwrap();
        assert!(analysis.exchange_decision(&t).unwrap().holds);
        for bits in 0..1u64 << t.n() {
            let s = VertexSet::from_bits(bits);
            assert_eq!(analysis.is_determining(s), is_determining_tree(&t, s).unwrap());
        }
    }
}

/// `K_4` or `K_{2,3}` minor, found by assigning every vertex to one of the
/// branch sets (or to none) and checking connectivity and adjacency.
fn has_forbidden_minor(g: &Graph) -> bool {
    let patterns: [(usize, &[(usize, usize)]); 2] = [
        (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        (5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
    ];
    let n = g.n();
    patterns.iter().any(|&(k, edges)| {
        let total = (k + 1).pow(n as u32);
        (0..total).any(|mut code| {
            let mut parts = vec![VertexSet::EMPTY; k];
            for v in 0..n {
                let label = code % (k + 1);
                code /= k + 1;
                if label > 0 {
                    parts[label - 1] = parts[label - 1].with(v);
                }
            }
            parts.iter().all(|&p| !p.is_empty() && g.components_within(p).len() == 1)
                && edges.iter().all(|&(a, b)| {
                    parts[a].iter().any(|v| g.neighbors(v).intersects(parts[b]))
                })
        })
    })
}

#[test]
fn recognition_matches_minor_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let n = rng.random_range(4..=7);
        let p = rng.random_range(0.2..0.8);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        assert_eq!(is_outerplanar(&g).unwrap(), !has_forbidden_minor(&g), "{edges:?}");
    }
}
