//! Wheels `W_n`: rim `0..n` as the cycle, hub `n`.
//!
//! Resolving sets on the rim are decided by their gaps, the runs of rim
//! vertices strictly between consecutive landmarks. Minimal determining sets
//! are the non-antipodal rim pairs.

use serde::Serialize;

use crate::automorphism::automorphism_group;
use crate::error::{Error, Result};
use crate::graph::{generate, Family, FamilySpec, VertexSet};
use crate::system::{MinimalSetCensus, SetKind};

/// Landmarks on the rim and the runs between them, in cyclic order starting
/// after the first landmark.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapStructure {
    pub n: usize,
    pub landmarks: Vec<usize>,
    pub gaps: Vec<Vec<usize>>,
}

impl GapStructure {
    pub fn sizes(&self) -> Vec<usize> {
        self.gaps.iter().map(Vec::len).collect()
    }
}

fn check_rim_subset(n: usize, s: VertexSet) -> Result<()> {
    if !s.is_subset(VertexSet::full(n)) {
        return Err(Error::Argument(format!(
            "{s} is not a set of rim vertices of W_{n} (hub is {n})"
        )));
    }
    Ok(())
}

pub fn rim_gaps(n: usize, s: VertexSet) -> Result<GapStructure> {
    if n < 3 {
        return Err(Error::Domain(format!("wheel rim needs at least 3 vertices, got {n}")));
    }
    check_rim_subset(n, s)?;
    if s.is_empty() {
        return Err(Error::Argument("gaps need at least one landmark".into()));
    }
    let landmarks = s.to_vec();
    let gaps = landmarks
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let b = landmarks[(i + 1) % landmarks.len()];
            let mut run = Vec::new();
            let mut v = (a + 1) % n;
            while v != b {
                run.push(v);
                v = (v + 1) % n;
            }
            run
        })
        .collect();
    Ok(GapStructure { n, landmarks, gaps })
}

/// Gap test: no gap above three, at most one gap of three, and every gap of
/// two or more flanked by gaps of at most one.
pub fn is_resolving_wheel(n: usize, s: VertexSet) -> Result<bool> {
    if n < 7 {
        return Err(Error::Domain(format!(
            "the gap test covers W_n for n >= 7, got n = {n}"
        )));
    }
    check_rim_subset(n, s)?;
    if s.is_empty() {
        return Ok(false);
    }
    let sizes = rim_gaps(n, s)?.sizes();
    let k = sizes.len();
    if sizes.iter().any(|&g| g > 3) || sizes.iter().filter(|&&g| g == 3).count() > 1 {
        return Ok(false);
    }
    Ok((0..k).all(|i| sizes[i] <= 1 || (sizes[(i + k - 1) % k] <= 1 && sizes[(i + 1) % k] <= 1)))
}

pub fn is_minimal_resolving_wheel(n: usize, s: VertexSet) -> Result<bool> {
    if !is_resolving_wheel(n, s)? {
        return Ok(false);
    }
    for x in s {
        if is_resolving_wheel(n, s.without(x))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn from_labels(n: usize, labels: impl IntoIterator<Item = usize>) -> VertexSet {
    labels
        .into_iter()
        .map(|l| {
            debug_assert!((1..=n).contains(&l));
            l - 1
        })
        .collect()
}

fn paired(upto: usize) -> impl Iterator<Item = usize> {
    (0..=upto).flat_map(|i| [5 * i + 1, 5 * i + 4])
}

fn shifted(k: usize) -> impl Iterator<Item = usize> {
    [1, 5]
        .into_iter()
        .chain((1..k).flat_map(|i| [5 * i + 2, 5 * (i + 1)]))
}

/// A minimum resolving set of `W_n` on the rim, one family per residue of
/// `n` mod 5. Returned as 0-based ids.
///
/// For `n = 5k+1` the pairs `{5i+1, 5i+4}` topped up with `{n-3, n-1}` leave
/// a gap of two beside a gap of three and do not resolve, so that residue
/// uses the `5k+2` pattern without its last landmark.
pub fn canonical_resolving_set(n: usize) -> Result<VertexSet> {
    if n < 7 {
        return Err(Error::Domain(format!("canonical families start at n = 7, got {n}")));
    }
    let k = n / 5;
    // labels below are 1-based rim positions
    let labels: Vec<usize> = match n % 5 {
        0 => paired(k - 1).collect(),
        1 => shifted(k).collect(),
        2 => shifted(k).chain([n]).collect(),
        3 if n == 8 => vec![1, 5, 7],
        3 => paired(k - 2).chain([n - 7, n - 3, n - 1]).collect(),
        _ => paired(k).collect(),
    };
    Ok(from_labels(n, labels))
}

/// `(S, r)` with `S` minimal resolving and no `s` in `S` making
/// `S - {s} + {r}` resolving. `S` is the canonical set except at `n = 9`,
/// where every vertex off the canonical set can be swapped in.
pub fn resolving_exchange_witness(n: usize) -> Result<(VertexSet, usize)> {
    if n < 8 {
        return Err(Error::Domain(format!("no failure witness is known for n = {n} < 8")));
    }
    if n == 9 {
        return Ok((from_labels(9, [1, 3, 5, 7]), 3));
    }
    // r = 3 against the 5k+4 family is undone by swapping out the landmark n
    let r_label = match n % 5 {
        0 | 1 => 2,
        2 => 6,
        3 if n == 8 => 8,
        _ => 7,
    };
    Ok((canonical_resolving_set(n)?, r_label - 1))
}

/// Census of minimal determining sets of `W_n`: all rim pairs that are not
/// antipodal.
pub fn wheel_determining_pairs(n: usize) -> Result<MinimalSetCensus> {
    if n < 4 {
        return Err(Error::Domain(format!("W_{n} is complete; use the generic census")));
    }
    let sets = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| 2 * (v - u) != n)
        .map(|(u, v)| VertexSet::singleton(u).with(v))
        .collect();
    let group = automorphism_group(&generate(&FamilySpec::new(Family::Wheel, vec![n as u64]))?)?;
    Ok(MinimalSetCensus::new(SetKind::Determining, sets, true).with_orbits(&group))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize, l: &[usize]) -> VertexSet {
        from_labels(n, l.iter().copied())
    }

    fn as_labels(g: &[usize]) -> Vec<usize> {
        g.iter().map(|v| v + 1).collect()
    }

    #[test]
    fn gaps() {
        let g = rim_gaps(10, labels(10, &[1, 4, 6, 9])).unwrap();
        let gl: Vec<_> = g.gaps.iter().map(|x| as_labels(x)).collect();
        assert_eq!(gl, vec![vec![2, 3], vec![5], vec![7, 8], vec![10]]);

        let g = rim_gaps(5, VertexSet::full(5)).unwrap();
        assert_eq!(g.sizes(), vec![0; 5]);

        let g = rim_gaps(8, labels(8, &[1, 5, 7])).unwrap();
        let gl: Vec<_> = g.gaps.iter().map(|x| as_labels(x)).collect();
        assert_eq!(gl, vec![vec![2, 3, 4], vec![6], vec![8]]);

        assert!(matches!(rim_gaps(8, VertexSet::singleton(8)), Err(Error::Argument(_))));
        assert!(matches!(rim_gaps(8, VertexSet::EMPTY), Err(Error::Argument(_))));
    }

    #[test]
    fn gap_criterion_examples() {
        assert!(is_resolving_wheel(8, labels(8, &[1, 5, 7])).unwrap());
        assert!(!is_resolving_wheel(10, labels(10, &[2, 4, 6, 9])).unwrap());
        assert!(is_resolving_wheel(12, labels(12, &[1, 5, 7, 10, 12])).unwrap());
        assert!(matches!(is_resolving_wheel(6, labels(6, &[1])), Err(Error::Domain(_))));
        assert!(matches!(
            is_resolving_wheel(8, VertexSet::singleton(8)),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn canonical_sets() {
        let as_l = |s: VertexSet| s.iter().map(|v| v + 1).collect::<Vec<_>>();
        assert_eq!(as_l(canonical_resolving_set(10).unwrap()), vec![1, 4, 6, 9]);
        assert_eq!(as_l(canonical_resolving_set(11).unwrap()), vec![1, 5, 7, 10]);
        assert_eq!(as_l(canonical_resolving_set(9).unwrap()), vec![1, 4, 6, 9]);
        assert_eq!(as_l(canonical_resolving_set(8).unwrap()), vec![1, 5, 7]);
        assert_eq!(as_l(canonical_resolving_set(12).unwrap()), vec![1, 5, 7, 10, 12]);
        for n in 7..=30 {
            let s = canonical_resolving_set(n).unwrap();
            assert_eq!(s.len(), (2 * n + 2) / 5, "n = {n}");
            assert!(is_minimal_resolving_wheel(n, s).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn witnesses() {
        assert_eq!(resolving_exchange_witness(10).unwrap(), (labels(10, &[1, 4, 6, 9]), 1));
        assert_eq!(resolving_exchange_witness(8).unwrap(), (labels(8, &[1, 5, 7]), 7));
        assert_eq!(resolving_exchange_witness(9).unwrap(), (labels(9, &[1, 3, 5, 7]), 3));
        assert_eq!(resolving_exchange_witness(14).unwrap().1, 6);
        assert!(matches!(resolving_exchange_witness(7), Err(Error::Domain(_))));
        // the gap test alone already rules out every swap
        for n in 8..=30 {
            let (s, r) = resolving_exchange_witness(n).unwrap();
            assert!(!s.contains(r));
            assert!(is_minimal_resolving_wheel(n, s).unwrap());
            for x in s {
                assert!(!is_resolving_wheel(n, s.without(x).with(r)).unwrap(), "n = {n}");
            }
        }
    }

    #[test]
    fn determining_pairs() {
        assert_eq!(wheel_determining_pairs(5).unwrap().sets.len(), 10);
        assert_eq!(wheel_determining_pairs(6).unwrap().sets.len(), 12);
        assert_eq!(wheel_determining_pairs(8).unwrap().sets.len(), 24);
        assert!(wheel_determining_pairs(3).is_err());
    }
}
