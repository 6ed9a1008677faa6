//! Shared search machinery for determining and resolving sets.
//!
//! Both notions are "hitting" conditions. `S` is determining exactly when it
//! meets the moved-point set of every non-identity automorphism, and
//! resolving exactly when it meets, for every pair `u != v`, the set of
//! landmarks that see `u` and `v` at different distances. A [`SetSystem`]
//! keeps the inclusion-minimal members of that family, which turns every
//! membership test into a handful of word operations.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::automorphism::{automorphism_group, AutGroup};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, k_subsets, DistanceMatrix, Graph, VertexSet};

/// Default cap on subset checks per search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SetKind {
    Determining,
    Resolving,
}

impl SetKind {
    pub fn name(self) -> &'static str {
        match self {
            SetKind::Determining => "determining",
            SetKind::Resolving => "resolving",
        }
    }
}

impl std::str::FromStr for SetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SetKind> {
        match s {
            "det" | "determining" => Ok(SetKind::Determining),
            "res" | "resolving" => Ok(SetKind::Resolving),
            _ => Err(Error::Argument(format!("unknown set kind `{s}`"))),
        }
    }
}

/// Counts subset checks and fails once the limit is passed.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn charge(&mut self, checks: u64) -> Result<()> {
        self.used += checks;
        if self.used > self.limit {
            Err(Error::Budget { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// The minimal hitting family of one set kind on one graph.
#[derive(Debug, Clone)]
pub struct SetSystem {
    kind: SetKind,
    n: usize,
    family: Vec<u64>,
}

impl SetSystem {
    /// From the moved-point sets of the non-identity elements of `group`.
    pub fn determining(group: &AutGroup) -> SetSystem {
        let masks = group.non_identity().iter().map(|p| p.moved_points().bits());
        SetSystem::from_masks(SetKind::Determining, group.degree(), masks)
    }

    /// From the separating-landmark sets of every vertex pair. Requires a
    /// connected graph.
    pub fn resolving(dist: &DistanceMatrix) -> Result<SetSystem> {
        if dist.has_infinite() {
            return Err(Error::Domain(
                "resolving sets are only defined for connected graphs".into(),
            ));
        }
        let n = dist.n();
        let mut masks = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                let sep: VertexSet = (0..n).filter(|&s| dist.get(s, u) != dist.get(s, v)).collect();
                masks.push(sep.bits());
            }
        }
        Ok(SetSystem::from_masks(SetKind::Resolving, n, masks.into_iter()))
    }

    fn from_masks(kind: SetKind, n: usize, masks: impl Iterator<Item = u64>) -> SetSystem {
        let mut all: Vec<u64> = masks.collect();
        all.sort_unstable_by_key(|m| (m.count_ones(), *m));
        all.dedup();
        let mut family: Vec<u64> = Vec::new();
        for m in all {
            if !family.iter().any(|&f| f & !m == 0) {
                family.push(m);
            }
        }
        SetSystem { kind, n, family }
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Is `s` a determining (resp. resolving) set?
    pub fn accepts(&self, s: VertexSet) -> bool {
        let s = s.bits();
        self.family.iter().all(|&m| m & s != 0)
    }

    /// No single deletion leaves an accepted set: every member of `s` is the
    /// only member hitting some constraint.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        let mut private = 0u64;
        let bits = s.bits();
        for &m in &self.family {
            let hit = m & bits;
            if hit.count_ones() == 1 {
                private |= hit;
            }
        }
        private == bits
    }

    pub fn is_minimal(&self, s: VertexSet) -> bool {
        self.accepts(s) && self.is_independent(s)
    }

    /// Smallest size of an accepted set, by ascending-size enumeration.
    pub fn minimum_size(&self, budget: &mut Budget) -> Result<usize> {
        for k in 0..=self.n {
            for s in k_subsets(self.n, k) {
                budget.charge(1)?;
                if self.accepts(s) {
                    return Ok(k);
                }
            }
        }
        Err(Error::Internal("the full vertex set is never rejected".into()))
    }

    /// All minimal accepted sets of size at most `max_size` (all of them when
    /// `None`), sorted lexicographically.
    ///
    /// Independent sets form a hereditary family, so they are grown one level
    /// at a time by appending a vertex above the current maximum. A minimal
    /// set is an independent set that is accepted. Once a level is empty no
    /// larger independent set exists, which is what makes the census
    /// complete.
    pub fn minimal_sets(
        &self,
        max_size: Option<usize>,
        budget: &mut Budget,
    ) -> Result<(Vec<VertexSet>, bool)> {
        let mut found = Vec::new();
        let mut level = vec![VertexSet::EMPTY];
        let mut k = 0;
        loop {
            let mut next = Vec::new();
            for &s in &level {
                if self.accepts(s) {
                    if max_size.is_none_or(|m| k <= m) {
                        found.push(s);
                    }
                    continue;
                }
                let start = s.last().map_or(0, |v| v + 1);
                for x in start..self.n {
                    let cand = s.with(x);
                    budget.charge(1)?;
                    if self.is_independent(cand) {
                        next.push(cand);
                    }
                }
            }
            k += 1;
            if next.is_empty() {
                found.sort_by(|a, b| a.lex_cmp(*b));
                return Ok((found, true));
            }
            if max_size.is_some_and(|m| k > m) {
                // independent sets survive above the cap, so larger minimal
                // sets cannot be ruled out
                found.sort_by(|a, b| a.lex_cmp(*b));
                return Ok((found, false));
            }
            level = next;
        }
    }
}

/// All minimal determining or resolving sets up to some size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MinimalSetCensus {
    pub kind: SetKind,
    /// Distinct set sizes, ascending.
    pub sizes: Vec<usize>,
    pub size_histogram: BTreeMap<usize, usize>,
    pub sets: Vec<VertexSet>,
    /// Number of orbits of the listed sets under the automorphism group.
    pub orbit_count: Option<usize>,
    /// Lexicographically least member of each orbit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_representatives: Option<Vec<VertexSet>>,
    /// True when no minimal set was left out by the size cap.
    pub complete: bool,
}

impl MinimalSetCensus {
    pub fn new(kind: SetKind, mut sets: Vec<VertexSet>, complete: bool) -> Self {
        sets.sort_by(|a, b| a.lex_cmp(*b));
        sets.dedup();
        let mut size_histogram = BTreeMap::new();
        for s in &sets {
            *size_histogram.entry(s.len()).or_insert(0) += 1;
        }
        MinimalSetCensus {
            kind,
            sizes: size_histogram.keys().copied().collect(),
            size_histogram,
            sets,
            orbit_count: None,
            orbit_representatives: None,
            complete,
        }
    }

    /// Fills in the orbit data under `group`.
    pub fn with_orbits(mut self, group: &AutGroup) -> Self {
        let mut reps: Vec<VertexSet> = self
            .sets
            .iter()
            .map(|&s| group.orbit_representative(s))
            .collect();
        reps.sort_by(|a, b| a.lex_cmp(*b));
        reps.dedup();
        self.orbit_count = Some(reps.len());
        self.orbit_representatives = Some(reps);
        self
    }

    pub fn min_size(&self) -> Option<usize> {
        self.sizes.first().copied()
    }

    pub fn equal_cardinality(&self) -> bool {
        self.sizes.len() <= 1
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.contains(&s)
    }
}

/// The set system for `kind` on `g`, computing whatever it needs.
pub fn set_system(g: &Graph, kind: SetKind) -> Result<SetSystem> {
    match kind {
        SetKind::Determining => Ok(SetSystem::determining(&automorphism_group(g)?)),
        SetKind::Resolving => SetSystem::resolving(&all_pairs_distances(g)),
    }
}
