//! Determining sets: vertex sets whose pointwise stabilizer is trivial.

use crate::automorphism::{automorphism_group, AutGroup};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::system::{Budget, MinimalSetCensus, SetKind, SetSystem};

/// Does only the identity fix `s` pointwise?
pub fn is_determining(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(is_determining_in(&automorphism_group(g)?, s))
}

/// Same as [`is_determining`] against a precomputed group.
pub fn is_determining_in(group: &AutGroup, s: VertexSet) -> bool {
    group.non_identity().iter().all(|p| !s.is_subset(p.fixed_points()))
}

pub fn is_minimal_determining(g: &Graph, s: VertexSet) -> Result<bool> {
    Ok(is_minimal_determining_in(&automorphism_group(g)?, s))
}

/// Determining, and no single deletion is. Single deletions suffice since
/// supersets of determining sets are determining.
pub fn is_minimal_determining_in(group: &AutGroup, s: VertexSet) -> bool {
    is_determining_in(group, s) && s.iter().all(|v| !is_determining_in(group, s.without(v)))
}

/// `Det(G)`.
pub fn determining_number(g: &Graph, budget: &mut Budget) -> Result<usize> {
    SetSystem::determining(&automorphism_group(g)?).minimum_size(budget)
}

/// Every minimal determining set of size at most `max_size`, with orbit data.
pub fn minimal_determining_sets(
    g: &Graph,
    max_size: Option<usize>,
    budget: &mut Budget,
) -> Result<MinimalSetCensus> {
    let group = automorphism_group(g)?;
    let (sets, complete) = SetSystem::determining(&group).minimal_sets(max_size, budget)?;
    Ok(MinimalSetCensus::new(SetKind::Determining, sets, complete).with_orbits(&group))
}
