//! Automorphisms of a 2-connected outerplanar graph act on its Hamilton
//! cycle as rotations or reflections.

use serde::Serialize;

use crate::automorphism::{automorphism_group, AutGroup, Permutation};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::recognition::hamilton_cycle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "camelCase")]
pub enum CycleMotion {
    Identity,
    /// Shift by `steps` positions along the cycle order.
    Rotation { steps: usize },
    Reflection { fixed: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedAutomorphism {
    pub permutation: Permutation,
    pub motion: CycleMotion,
}

impl ClassifiedAutomorphism {
    pub fn is_reflection(&self) -> bool {
        matches!(self.motion, CycleMotion::Reflection { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CycleAction {
    pub cycle_order: Vec<usize>,
    pub actions: Vec<ClassifiedAutomorphism>,
}

impl CycleAction {
    pub fn reflections(&self) -> impl Iterator<Item = &Permutation> {
        self.actions
            .iter()
            .filter(|a| a.is_reflection())
            .map(|a| &a.permutation)
    }

    pub fn has_reflection(&self) -> bool {
        self.reflections().next().is_some()
    }

    /// Vertices moved by every reflection (all vertices when there is none).
    pub fn moved_by_every_reflection(&self) -> VertexSet {
        self.reflections().fold(
            self.cycle_order.iter().copied().collect(),
            |acc, p| acc.intersection(p.moved_points()),
        )
    }

    /// Pairs `u < v` such that one reflection fixes `u` and a different one
    /// fixes `v`, in lexicographic order.
    pub fn pairs_fixed_by_different_reflections(&self) -> Vec<(usize, usize)> {
        let fixed: Vec<VertexSet> = self.reflections().map(|p| p.fixed_points()).collect();
        let n = self.cycle_order.len();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let hit = (0..fixed.len()).any(|i| {
                    fixed[i].contains(u) && (0..fixed.len()).any(|j| j != i && fixed[j].contains(v))
                });
                if hit {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Tags each element of `group` against `cycle`. A group on two points is
/// read as `K_2`, whose swap counts as a reflection.
pub fn classify_with(cycle: &[usize], group: &AutGroup) -> Result<CycleAction> {
    let n = cycle.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let actions = group
        .elements()
        .iter()
        .map(|p| {
            let motion = if p.is_identity() {
                CycleMotion::Identity
            } else if n == 2 {
                CycleMotion::Reflection { fixed: Vec::new() }
            } else {
                let start = pos[p.apply(cycle[0])];
                let forward = (0..n).all(|i| p.apply(cycle[i]) == cycle[(start + i) % n]);
                let backward = (0..n).all(|i| p.apply(cycle[i]) == cycle[(start + n - i) % n]);
                if forward {
                    CycleMotion::Rotation { steps: start }
                } else if backward {
                    CycleMotion::Reflection {
                        fixed: p.fixed_points().to_vec(),
                    }
                } else {
                    return Err(Error::Internal(format!(
                        "automorphism {p:?} does not preserve the Hamilton cycle"
                    )));
                }
            };
            Ok(ClassifiedAutomorphism {
                permutation: p.clone(),
                motion,
            })
        })
        .collect::<Result<_>>()?;
    Ok(CycleAction {
        cycle_order: cycle.to_vec(),
        actions,
    })
}

pub fn classify_cycle_action(g: &Graph) -> Result<CycleAction> {
    let cycle = if g.n() == 2 && g.has_edge(0, 1) {
        vec![0, 1]
    } else {
        hamilton_cycle(g)?
    };
    classify_with(&cycle, &automorphism_group(g)?)
}
