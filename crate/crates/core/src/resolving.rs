//! Resolving sets: landmark sets whose distance vectors tell every vertex
//! apart. Only defined on connected graphs.

use std::collections::HashSet;

use serde::Serialize;

use crate::automorphism::automorphism_group;
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph, VertexSet};
use crate::system::{Budget, MinimalSetCensus, SetKind, SetSystem};

/// Distances from one vertex to each landmark, landmarks in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DistanceVector(pub Vec<u32>);

pub fn distance_vector(dist: &DistanceMatrix, landmarks: VertexSet, v: usize) -> DistanceVector {
    DistanceVector(landmarks.iter().map(|s| dist.get(s, v)).collect())
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let dist = all_pairs_distances(g);
    if dist.has_infinite() {
        return Err(Error::Domain(
            "resolving sets are only defined for connected graphs".into(),
        ));
    }
    Ok(dist)
}

pub fn is_resolving(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(is_resolving_with(&connected_distances(g)?, s))
}

/// Are all distance vectors pairwise distinct?
pub fn is_resolving_with(dist: &DistanceMatrix, s: VertexSet) -> bool {
    let mut seen = HashSet::with_capacity(dist.n());
    (0..dist.n()).all(|v| seen.insert(distance_vector(dist, s, v)))
}

pub fn is_minimal_resolving(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(is_minimal_resolving_with(&connected_distances(g)?, s))
}

pub fn is_minimal_resolving_with(dist: &DistanceMatrix, s: VertexSet) -> bool {
    is_resolving_with(dist, s) && s.iter().all(|v| !is_resolving_with(dist, s.without(v)))
}

pub fn metric_dimension(g: &Graph, budget: &mut Budget) -> Result<usize> {
    SetSystem::resolving(&connected_distances(g)?)?.minimum_size(budget)
}

/// Every minimal resolving set of size at most `max_size`. Orbit data is
/// attached when the automorphism group fits in memory.
pub fn minimal_resolving_sets(
    g: &Graph,
    max_size: Option<usize>,
    budget: &mut Budget,
) -> Result<MinimalSetCensus> {
    let sys = SetSystem::resolving(&connected_distances(g)?)?;
    let (sets, complete) = sys.minimal_sets(max_size, budget)?;
    let census = MinimalSetCensus::new(SetKind::Resolving, sets, complete);
    Ok(match automorphism_group(g) {
        Ok(group) => census.with_orbits(&group),
        Err(_) => census,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, k_subsets, Family, FamilySpec};

    fn gen(f: Family, p: &[u64]) -> Graph {
        generate(&FamilySpec::new(f, p.to_vec())).unwrap()
    }

    fn set(ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(64, ids).unwrap()
    }

    #[test]
    fn disconnected_is_a_domain_error() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(is_resolving(&g, set(&[0])), Err(Error::Domain(_))));
        assert!(matches!(metric_dimension(&g, &mut Budget::default()), Err(Error::Domain(_))));
    }

    #[test]
    fn path_endpoints() {
        let p5 = gen(Family::Path, &[5]);
        assert!(is_minimal_resolving(&p5, set(&[0])).unwrap());
        assert!(is_minimal_resolving(&p5, set(&[1, 3])).unwrap());
        assert!(!is_resolving(&p5, set(&[2])).unwrap());
        let census = minimal_resolving_sets(&p5, Some(2), &mut Budget::default()).unwrap();
        assert!(census.contains(set(&[0])) && census.contains(set(&[1, 3])));
        assert_eq!(census.sizes, vec![1, 2]);
    }

    /// Brute force over singletons and pairs, independent of the set system.
    #[test]
    fn small_metric_dimensions() {
        let brute = |g: &Graph| {
            let dist = all_pairs_distances(g);
            (0..=g.n())
                .find(|&k| k_subsets(g.n(), k).any(|s| is_resolving_with(&dist, s)))
                .unwrap()
        };
        let mut b = Budget::default();
        for n in 2..=10 {
            let p = gen(Family::Path, &[n]);
            assert_eq!(brute(&p), 1);
            assert_eq!(metric_dimension(&p, &mut b).unwrap(), 1);
        }
        for n in 2..=8 {
            let k = gen(Family::Complete, &[n]);
            assert_eq!(brute(&k), n as usize - 1);
            assert_eq!(metric_dimension(&k, &mut b).unwrap(), n as usize - 1);
        }
    }

    #[test]
    fn c5_full_set_is_not_minimal() {
        let c5 = gen(Family::Cycle, &[5]);
        assert!(is_resolving(&c5, c5.vertices()).unwrap());
        assert!(!is_minimal_resolving(&c5, c5.vertices()).unwrap());
    }

    #[test]
    fn set_system_agrees_with_distance_vectors() {
        for g in [gen(Family::Kneser, &[5, 2]), gen(Family::Wheel, &[8]), gen(Family::Hypercube, &[3])] {
            let dist = all_pairs_distances(&g);
            let sys = SetSystem::resolving(&dist).unwrap();
            for k in 0..=4 {
                for s in k_subsets(g.n(), k) {
                    assert_eq!(sys.accepts(s), is_resolving_with(&dist, s));
                    assert_eq!(sys.is_minimal(s), is_minimal_resolving_with(&dist, s));
                }
            }
        }
    }

    #[test]
    fn distance_vectors_match_matrix() {
        let g = gen(Family::Wheel, &[7]);
        let dist = all_pairs_distances(&g);
        let s = set(&[0, 2, 7]);
        for v in 0..g.n() {
            let dv = distance_vector(&dist, s, v);
            assert_eq!(dv.0, vec![dist.get(0, v), dist.get(2, v), dist.get(7, v)]);
        }
    }
}
