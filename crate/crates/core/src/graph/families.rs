use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Family {
    /// `[n]`, `n >= 3`.
    Cycle,
    /// `[n]`, `n >= 1` vertices.
    Path,
    /// `[n]`, `n >= 1`.
    Complete,
    /// `[k]`: `K_{1,k}` with centre 0.
    Star,
    /// `[n]`, `n >= 3`: rim `0..n-1` in cycle order, hub `n`.
    Wheel,
    /// `[d]`: the `d`-cube, vertices are `d`-bit words.
    Hypercube,
    /// `[n, k]`, `2k < n`: vertices are the `k`-subsets of `{1..n}` in
    /// lexicographic order, adjacent when disjoint.
    Kneser,
    /// `[n]` plus seed: uniform labelled tree via a Prüfer sequence.
    RandomTree,
    /// `[n]` or `[n, biconnected]` plus seed.
    RandomOuterplanar,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Cycle,
        Family::Path,
        Family::Complete,
        Family::Star,
        Family::Wheel,
        Family::Hypercube,
        Family::Kneser,
        Family::RandomTree,
        Family::RandomOuterplanar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Wheel => "wheel",
            Family::Hypercube => "hypercube",
            Family::Kneser => "kneser",
            Family::RandomTree => "randomTree",
            Family::RandomOuterplanar => "randomOuterplanar",
        }
    }

    pub fn is_random(self) -> bool {
        matches!(self, Family::RandomTree | Family::RandomOuterplanar)
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown family `{s}`")))
    }
}

/// A named graph family plus its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<u64>) -> Self {
        FamilySpec {
            family,
            params,
            seed: None,
        }
    }

    pub fn seeded(family: Family, params: Vec<u64>, seed: u64) -> Self {
        FamilySpec {
            family,
            params,
            seed: Some(seed),
        }
    }
}

fn params<const K: usize>(spec: &FamilySpec, optional: usize) -> Result<[usize; K]> {
    let p = &spec.params;
    if p.len() > K || p.len() + optional < K {
        return Err(Error::Parameter(format!(
            "{} takes {} parameter(s), got {}",
            spec.family.name(),
            K,
            p.len()
        )));
    }
    let mut out = [0usize; K];
    for (slot, &v) in out.iter_mut().zip(p) {
        *slot = usize::try_from(v)
            .ok()
            .filter(|&v| v <= 1 << 20)
            .ok_or_else(|| Error::Parameter(format!("parameter {v} too large")))?;
    }
    Ok(out)
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Parameter(format!(
            "family would have {n} vertices, at most {MAX_VERTICES} supported"
        )));
    }
    Ok(())
}

/// Builds the graph named by `spec`. Deterministic for a fixed spec and seed.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    if spec.family.is_random() && spec.seed.is_none() {
        return Err(Error::Parameter(format!(
            "{} requires a seed",
            spec.family.name()
        )));
    }
    match spec.family {
        Family::Cycle => {
            let [n] = params(spec, 0)?;
            if n < 3 {
                return Err(Error::Parameter("cycle needs n >= 3".into()));
            }
            check_order(n)?;
            Graph::from_edges(n, &cycle_edges(n))
        }
        Family::Path => {
            let [n] = params(spec, 0)?;
            if n < 1 {
                return Err(Error::Parameter("path needs n >= 1".into()));
            }
            check_order(n)?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &edges)
        }
        Family::Complete => {
            let [n] = params(spec, 0)?;
            if n < 1 {
                return Err(Error::Parameter("complete graph needs n >= 1".into()));
            }
            check_order(n)?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges)
        }
        Family::Star => {
            let [k] = params(spec, 0)?;
            if k < 1 {
                return Err(Error::Parameter("star needs k >= 1 leaves".into()));
            }
            check_order(k + 1)?;
            let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        Family::Wheel => {
            let [n] = params(spec, 0)?;
            if n < 3 {
                return Err(Error::Parameter("wheel needs n >= 3".into()));
            }
            check_order(n + 1)?;
            let mut edges = cycle_edges(n);
            edges.extend((0..n).map(|v| (v, n)));
            Graph::from_edges(n + 1, &edges)
        }
        Family::Hypercube => {
            let [d] = params(spec, 0)?;
            if d > 6 {
                return Err(Error::Parameter(format!(
                    "hypercube of dimension {d} exceeds {MAX_VERTICES} vertices"
                )));
            }
            let n = 1usize << d;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (0..d).map(move |b| (u, u ^ 1 << b)))
                .filter(|&(u, v)| u < v)
                .collect();
            Graph::from_edges(n, &edges)
        }
        Family::Kneser => {
            let [n, k] = params(spec, 0)?;
            if k == 0 || 2 * k >= n {
                return Err(Error::Parameter(format!(
                    "kneser needs 0 < k < n/2, got n={n} k={k}"
                )));
            }
            let subsets = kneser_vertices(n, k)?;
            let mut edges = Vec::new();
            for (i, a) in subsets.iter().enumerate() {
                for (j, b) in subsets.iter().enumerate().skip(i + 1) {
                    if a & b == 0 {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(subsets.len(), &edges)
        }
        Family::RandomTree => {
            let [n] = params(spec, 0)?;
            if n < 1 {
                return Err(Error::Parameter("tree needs n >= 1".into()));
            }
            check_order(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.unwrap_or_default());
            Graph::from_edges(n, &random_tree_edges(&mut rng, n))
        }
        Family::RandomOuterplanar => {
            let [n, biconnected] = params(spec, 1)?;
            if n < 1 {
                return Err(Error::Parameter("outerplanar graph needs n >= 1".into()));
            }
            if biconnected > 1 {
                return Err(Error::Parameter("biconnected flag must be 0 or 1".into()));
            }
            check_order(n)?;
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.unwrap_or_default());
            Ok(random_outerplanar(&mut rng, n, biconnected == 1))
        }
    }
}

/// The `k`-subsets of `{1..n}` as bitmasks (bit `i-1` for element `i`), in
/// lexicographic order of their sorted element lists.
pub(crate) fn kneser_vertices(n: usize, k: usize) -> Result<Vec<u64>> {
    fn rec(start: usize, n: usize, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for e in start..=n - k {
            rec(e + 1, n, k - 1, acc | 1 << e, out);
        }
    }
    if n > 63 {
        return Err(Error::Parameter("kneser ground set too large".into()));
    }
    let count = (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    check_order(count as usize)?;
    let mut out = Vec::with_capacity(count as usize);
    rec(0, n, k, 0, &mut out);
    Ok(out)
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn random_tree_edges(rng: &mut ChaCha8Rng, n: usize) -> Vec<(usize, usize)> {
    if n < 3 {
        return (1..n).map(|i| (0, i)).collect();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("Prüfer decoding");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let (a, b) = (a.min(b), a.max(b));
    let (c, d) = (c.min(d), c.max(d));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Edges of an outerplanar block on `m` vertices, in cycle positions `0..m`:
/// the Hamilton cycle plus a random non-crossing chord set, sometimes closed
/// under a rotation or reflection of the polygon so that symmetric blocks
/// show up regularly.
fn random_block(rng: &mut ChaCha8Rng, m: usize) -> Vec<(usize, usize)> {
    if m == 2 {
        return vec![(0, 1)];
    }
    let mut edges = cycle_edges(m);
    if m < 4 {
        return edges;
    }
    let divisors: Vec<usize> = (2..=m).filter(|d| m.is_multiple_of(*d)).collect();
    let rotation = match rng.random_range(0..2) {
        0 => Some(*divisors.choose(rng).unwrap_or(&m)),
        _ => None,
    };
    let reflect = rng.random_bool(0.6);
    let density = rng.random_range(0.2..0.8);

    let mut candidates: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 2..m).map(move |j| (i, j)))
        .filter(|&(i, j)| !(i == 0 && j == m - 1))
        .collect();
    candidates.shuffle(rng);
    let mut chords: Vec<(usize, usize)> = Vec::new();
    let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
    for c in candidates {
        if !rng.random_bool(density) {
            continue;
        }
        let mut orbit = vec![c];
        let mut k = 0;
        while k < orbit.len() {
            let (a, b) = orbit[k];
            let mut images = Vec::new();
            if let Some(d) = rotation {
                let step = m / d;
                images.push(norm(((a + step) % m, (b + step) % m)));
            }
            if reflect {
                images.push(norm(((m - a) % m, (m - b) % m)));
            }
            for im in images {
                if !orbit.contains(&im) {
                    orbit.push(im);
                }
            }
            k += 1;
        }
        let fits = orbit.iter().enumerate().all(|(i, &x)| {
            !chords.contains(&x)
                && chords.iter().all(|&y| !crosses(x, y))
                && orbit[i + 1..].iter().all(|&y| !crosses(x, y))
        });
        if fits {
            chords.extend(orbit);
        }
    }
    edges.extend(chords);
    edges
}

fn random_outerplanar(rng: &mut ChaCha8Rng, n: usize, biconnected: bool) -> Graph {
    if n == 1 {
        return Graph::empty(1).expect("n=1");
    }
    let base = if biconnected { n } else { rng.random_range(2..=n) };
    let mut edges: Vec<(usize, usize)> = random_block(rng, base);
    let mut count = base;
    while count < n {
        let attach = rng.random_range(0..count);
        let room = n - count;
        let k = rng.random_range(2..=(room + 1).min(6));
        let block = random_block(rng, k);
        let copies = if 2 * (k - 1) <= room && rng.random_bool(0.4) { 2 } else { 1 };
        for _ in 0..copies {
            // position 0 of the new block is the attachment vertex
            let ids: Vec<usize> = std::iter::once(attach).chain(count..count + k - 1).collect();
            edges.extend(block.iter().map(|&(a, b)| (ids[a], ids[b])));
            count += k - 1;
        }
    }
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let edges: Vec<_> = edges.into_iter().map(|(a, b)| (labels[a], labels[b])).collect();
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(f: Family, p: &[u64]) -> Graph {
        generate(&FamilySpec::new(f, p.to_vec())).unwrap()
    }

    #[test]
    fn small_family_counts() {
        let w4 = gen(Family::Wheel, &[4]);
        assert_eq!((w4.n(), w4.edge_count()), (5, 8));
        let q3 = gen(Family::Hypercube, &[3]);
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        let k5 = gen(Family::Complete, &[5]);
        assert_eq!(k5.edge_count(), 10);
        let star = gen(Family::Star, &[4]);
        assert_eq!((star.n(), star.degree(0)), (5, 4));
    }

    /// Independent count: disjoint pairs of 2-subsets of {1..5}.
    #[test]
    fn petersen_is_cubic() {
        let mut disjoint_pairs = 0;
        let pairs: Vec<(u32, u32)> = (1..=5)
            .flat_map(|a| (a + 1..=5).map(move |b| (a, b)))
            .collect();
        for (i, p) in pairs.iter().enumerate() {
            for q in &pairs[i + 1..] {
                if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                    disjoint_pairs += 1;
                }
            }
        }
        assert_eq!(disjoint_pairs, 15);
        let p = gen(Family::Kneser, &[5, 2]);
        assert_eq!((p.n(), p.edge_count()), (10, disjoint_pairs));
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn kneser_is_regular() {
        let binom = |n: usize, k: usize| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
        for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (9, 2)] {
            let g = gen(Family::Kneser, &[n as u64, k as u64]);
            assert_eq!(g.n(), binom(n, k));
            assert!((0..g.n()).all(|v| g.degree(v) == binom(n - k, k)), "K({n}:{k})");
        }
    }

    #[test]
    fn kneser_vertex_order() {
        // {1,2},{1,3},{1,4},{1,5},{2,3},...
        let v = kneser_vertices(5, 2).unwrap();
        assert_eq!(v[0], 0b00011);
        assert_eq!(v[3], 0b10001);
        assert_eq!(v[5], 0b01010);
        assert_eq!(v[9], 0b11000);
    }

    #[test]
    fn parameter_errors() {
        let bad = [
            FamilySpec::new(Family::Kneser, vec![4, 2]),
            FamilySpec::new(Family::Wheel, vec![2]),
            FamilySpec::new(Family::Cycle, vec![2]),
            FamilySpec::new(Family::Hypercube, vec![7]),
            FamilySpec::new(Family::RandomTree, vec![5]),
            FamilySpec::new(Family::Path, vec![]),
            FamilySpec::new(Family::Complete, vec![65]),
        ];
        for spec in bad {
            assert!(matches!(generate(&spec), Err(Error::Parameter(_))), "{spec:?}");
        }
    }

    #[test]
    fn seeded_families_are_deterministic_and_valid() {
        for seed in 0..50 {
            for n in 1..=12 {
                let spec = FamilySpec::seeded(Family::RandomTree, vec![n], seed);
                let t = generate(&spec).unwrap();
                assert!(t.is_tree());
                assert_eq!(t, generate(&spec).unwrap());

                let spec = FamilySpec::seeded(Family::RandomOuterplanar, vec![n], seed);
                let g = generate(&spec).unwrap();
                assert!(g.is_connected());
                assert_eq!(g.n(), n as usize);
                assert!(g.edge_count() <= (2 * n as usize).saturating_sub(3).max(n as usize - 1));
                assert_eq!(g, generate(&spec).unwrap());
            }
        }
    }

    #[test]
    fn family_names_roundtrip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
            let json = serde_json::to_string(&f).unwrap();
            assert_eq!(json, format!("\"{}\"", f.name()));
        }
    }
}
