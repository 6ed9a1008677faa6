//! Automorphism groups by exhaustive backtracking.
//!
//! Groups are small enough at the sizes this crate targets that we keep every
//! element. Stabilizers, setwise-invariant subgroups and induced actions are
//! then plain filters over the element list.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph, VertexSet, MAX_VERTICES};

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_VERTICES {
            return Err(Error::Size(format!("permutation of degree {n}")));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &images {
            if v >= n || seen.contains(v) {
                return Err(Error::Argument("image array is not a bijection".into()));
            }
            seen = seen.with(v);
        }
        Ok(Permutation(images.into_iter().map(|v| v as u8).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn fixed_points(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i == v as usize)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn moved_points(&self) -> VertexSet {
        VertexSet::full(self.degree()).difference(self.fixed_points())
    }

    pub fn map_set(&self, s: VertexSet) -> VertexSet {
        s.map(&self.0)
    }

    /// `self` after `other`: `v -> self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// True when edges map to edges and non-edges to non-edges.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.degree() == g.n()
            && (0..g.n()).all(|u| g.neighbors(u).map(&self.0) == g.neighbors(self.apply(u)))
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Search limits.
#[derive(Debug, Clone, Copy)]
pub struct AutConfig {
    pub max_vertices: usize,
    pub max_elements: usize,
}

impl Default for AutConfig {
    fn default() -> Self {
        AutConfig {
            max_vertices: MAX_VERTICES,
            max_elements: 1_000_000,
        }
    }
}

/// A permutation group with its full element list. The identity is always
/// the first element.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl std::fmt::Debug for AutGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AutGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

impl AutGroup {
    /// Wraps an element list that is already known to be closed. Puts the
    /// identity first and derives a generating set.
    pub(crate) fn from_closed_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        if let Some(pos) = elements.iter().position(Permutation::is_identity) {
            elements.swap(0, pos);
        } else {
            elements.insert(0, Permutation::identity(degree));
        }
        let generators = transversal_generators(&elements);
        AutGroup {
            degree,
            generators,
            elements,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_closed_elements(degree, vec![Permutation::identity(degree)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn non_identity(&self) -> &[Permutation] {
        &self.elements[1..]
    }

    /// A generating set: for each base point `i`, one coset representative of
    /// the stabilizer of `0..=i` per image of `i`.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements fixing every vertex of `s`.
    pub fn pointwise_stabilizer(&self, s: VertexSet) -> AutGroup {
        self.filtered(|p| s.is_subset(p.fixed_points()))
    }

    /// Elements mapping `vs` onto itself.
    pub fn invariant_subgroup(&self, vs: VertexSet) -> AutGroup {
        self.filtered(|p| p.map_set(vs) == vs)
    }

    fn filtered(&self, keep: impl Fn(&Permutation) -> bool) -> AutGroup {
        let elements: Vec<_> = self.elements.iter().filter(|p| keep(p)).cloned().collect();
        AutGroup::from_closed_elements(self.degree, elements)
    }

    /// The group of distinct restrictions to `vs`, re-indexed so that local
    /// id `i` is the `i`-th smallest member of `vs`. Applied to the setwise
    /// stabilizer of `vs` this is the quotient by the pointwise stabilizer:
    /// two elements restrict identically exactly when they lie in the same
    /// coset.
    pub fn quotient_action(&self, vs: VertexSet) -> Result<AutGroup> {
        let ids = vs.to_vec();
        let mut local = [u8::MAX; MAX_VERTICES];
        for (i, &v) in ids.iter().enumerate() {
            local[v] = i as u8;
        }
        let mut seen = HashSet::new();
        let mut restricted = Vec::new();
        for p in &self.elements {
            if p.map_set(vs) != vs {
                return Err(Error::Argument(format!(
                    "vertex set {vs} is not invariant under {p:?}"
                )));
            }
            let r = Permutation(ids.iter().map(|&v| local[p.apply(v)]).collect());
            if seen.insert(r.clone()) {
                restricted.push(r);
            }
        }
        Ok(AutGroup::from_closed_elements(ids.len(), restricted))
    }

    /// Orbits of single vertices, each as a set, ordered by smallest member.
    pub fn vertex_orbits(&self) -> Vec<VertexSet> {
        let mut rest = VertexSet::full(self.degree);
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let orbit: VertexSet = self.elements.iter().map(|p| p.apply(v)).collect();
            rest = rest.difference(orbit);
            out.push(orbit);
        }
        out
    }

    /// Lexicographically least image of `s` under the group.
    pub fn orbit_representative(&self, s: VertexSet) -> VertexSet {
        self.elements
            .iter()
            .map(|p| p.map_set(s))
            .min_by(|a, b| a.lex_cmp(*b))
            .unwrap_or(s)
    }
}

fn transversal_generators(elements: &[Permutation]) -> Vec<Permutation> {
    let mut reps: BTreeMap<(usize, u8), &Permutation> = BTreeMap::new();
    for p in elements {
        if let Some(base) = p.0.iter().enumerate().position(|(i, &v)| i != v as usize) {
            reps.entry((base, p.0[base])).or_insert(p);
        }
    }
    reps.into_values().cloned().collect()
}

/// Vertex colours from (degree, distance multiset), refined once by the
/// multiset of (distance, colour) pairs to all other vertices.
fn invariant_colours(g: &Graph, dist: &crate::graph::DistanceMatrix) -> Vec<usize> {
    fn index<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
        let mut sorted: Vec<K> = keys.to_vec();
        sorted.sort();
        sorted.dedup();
        keys.iter()
            .map(|k| sorted.binary_search(k).expect("key present"))
            .collect()
    }
    let n = g.n();
    let first: Vec<(usize, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut row = dist.row(v).to_vec();
            row.sort_unstable();
            (g.degree(v), row)
        })
        .collect();
    let colour = index(&first);
    let second: Vec<(usize, Vec<(u32, usize)>)> = (0..n)
        .map(|v| {
            let mut pairs: Vec<_> = (0..n).map(|w| (dist.get(v, w), colour[w])).collect();
            pairs.sort_unstable();
            (colour[v], pairs)
        })
        .collect();
    index(&second)
}

pub fn automorphism_group(g: &Graph) -> Result<AutGroup> {
    automorphism_group_with(g, &AutConfig::default())
}

/// All automorphisms of `g`, found by mapping vertices `0, 1, ..` in order
/// and trying targets in ascending order. A partial map is extended only to
/// targets with the same invariant colour whose distances to every already
/// mapped vertex agree.
pub fn automorphism_group_with(g: &Graph, config: &AutConfig) -> Result<AutGroup> {
    let n = g.n();
    if n > config.max_vertices {
        return Err(Error::Size(format!(
            "automorphism search capped at {} vertices, got {n}",
            config.max_vertices
        )));
    }
    let dist = all_pairs_distances(g);
    let colour = invariant_colours(g, &dist);

    struct Search<'a> {
        n: usize,
        dist: &'a crate::graph::DistanceMatrix,
        colour: &'a [usize],
        map: Vec<u8>,
        used: u64,
        out: Vec<Permutation>,
        cap: usize,
        overflow: bool,
    }

    impl Search<'_> {
        fn run(&mut self, i: usize) {
            if self.overflow {
                return;
            }
            if i == self.n {
                if self.out.len() == self.cap {
                    self.overflow = true;
                    return;
                }
                self.out.push(Permutation(self.map.clone()));
                return;
            }
            for j in 0..self.n {
                if self.used >> j & 1 == 1 || self.colour[j] != self.colour[i] {
                    continue;
                }
                let consistent = (0..i)
                    .all(|k| self.dist.get(i, k) == self.dist.get(j, self.map[k] as usize));
                if !consistent {
                    continue;
                }
                self.map[i] = j as u8;
                self.used |= 1 << j;
                self.run(i + 1);
                self.used &= !(1 << j);
                if self.overflow {
                    return;
                }
            }
        }
    }

    let mut search = Search {
        n,
        dist: &dist,
        colour: &colour,
        map: vec![0; n],
        used: 0,
        out: Vec::new(),
        cap: config.max_elements,
        overflow: false,
    };
    search.run(0);
    if search.overflow {
        return Err(Error::Size(format!(
            "automorphism group has more than {} elements",
            config.max_elements
        )));
    }
    Ok(AutGroup::from_closed_elements(n, search.out))
}
