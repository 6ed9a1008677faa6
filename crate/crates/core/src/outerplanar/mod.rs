//! Outerplanar graphs: recognition, the dihedral action on the Hamilton
//! cycle of a block, the block-cutvertex tree, a determining-set test built
//! from blocks and blockbranches, and the exchange decision.
//!
//! `Aut_G(B)` below is the action on block `B` of the automorphisms that map
//! `B` onto itself, i.e. the setwise stabilizer modulo the pointwise one.

mod blocks;
mod dihedral;
mod recognition;

pub use blocks::{
    biconnected_components, block_cut_tree, blockbranches_at, blockbranches_of_block,
    rooted_isomorphic, BlockCutTree, Blockbranch, BlockbranchClasses, Center,
};
pub use dihedral::{classify_cycle_action, classify_with, ClassifiedAutomorphism, CycleAction, CycleMotion};
pub use recognition::{hamilton_cycle, is_outerplanar, OUTERPLANAR_MAX_VERTICES};

use serde::Serialize;

use crate::automorphism::{automorphism_group, AutGroup};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::system::{MinimalSetCensus, SetKind};

fn require_connected_outerplanar(g: &Graph) -> Result<()> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Domain("expected a connected graph".into()));
    }
    if !is_outerplanar(g)? {
        return Err(Error::Domain("graph is not outerplanar".into()));
    }
    Ok(())
}

fn require_block(g: &Graph) -> Result<()> {
    require_connected_outerplanar(g)?;
    if g.n() < 2 || biconnected_components(g).len() != 1 {
        return Err(Error::Domain("expected a 2-connected outerplanar graph or K_2".into()));
    }
    Ok(())
}

/// `Aut_G(B)` on local ids: local `i` is the `i`-th smallest vertex of `block`.
pub fn block_quotient(g: &Graph, block: VertexSet) -> Result<AutGroup> {
    let bct = block_cut_tree(g)?;
    if bct.block_index(block).is_none() {
        return Err(Error::Argument(format!("{block} is not a block")));
    }
    quotient_of(&automorphism_group(g)?, block)
}

fn quotient_of(group: &AutGroup, block: VertexSet) -> Result<AutGroup> {
    group.invariant_subgroup(block).quotient_action(block)
}

fn to_local(block: VertexSet, u: VertexSet) -> VertexSet {
    block
        .iter()
        .enumerate()
        .filter(|&(_, v)| u.contains(v))
        .map(|(i, _)| i)
        .collect()
}

/// Does only the identity of `Aut_G(B)` fix `u` pointwise?
pub fn is_block_determining(g: &Graph, block: VertexSet, u: VertexSet) -> Result<bool> {
    if !u.is_subset(block) {
        return Err(Error::Argument(format!("{u} is not inside block {block}")));
    }
    let quotient = block_quotient(g, block)?;
    Ok(quotient.pointwise_stabilizer(to_local(block, u)).is_trivial())
}

/// The cycle action of `Aut_G(B)` on `B`, reported in global vertex ids.
fn block_action(g: &Graph, block: VertexSet, quotient: &AutGroup) -> Result<CycleAction> {
    let (h, ids) = g.induced_subgraph(block);
    let cycle = match h.n() {
        1 => vec![0],
        2 => vec![0, 1],
        _ => hamilton_cycle(&h)?,
    };
    let local = classify_with(&cycle, quotient)?;
    let global = |v: usize| ids[v];
    Ok(CycleAction {
        cycle_order: local.cycle_order.iter().map(|&v| global(v)).collect(),
        actions: local
            .actions
            .into_iter()
            .map(|a| {
                let motion = match a.motion {
                    CycleMotion::Reflection { fixed } => CycleMotion::Reflection {
                        fixed: fixed.into_iter().map(global).collect(),
                    },
                    other => other,
                };
                ClassifiedAutomorphism {
                    permutation: a.permutation,
                    motion,
                }
            })
            .collect(),
    })
}

/// Block features deciding the exchange property, in global ids.
struct ReflectionFeatures {
    moved_by_all: Option<usize>,
    fixed_pair: Option<[usize; 2]>,
}

fn reflection_features(block: VertexSet, action: &CycleAction) -> ReflectionFeatures {
    let ids = block.to_vec();
    let moved_by_all = if action.has_reflection() {
        action.moved_by_every_reflection().first().map(|i| ids[i])
    } else {
        None
    };
    let fixed_pair = action
        .pairs_fixed_by_different_reflections()
        .first()
        .map(|&(u, v)| [ids[u], ids[v]]);
    ReflectionFeatures {
        moved_by_all,
        fixed_pair,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CenterType {
    Block,
    Cutvertex,
}

/// Why the exchange property holds or fails. Features that were not
/// reached are `None`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExchangeEvidence {
    pub center_type: CenterType,
    pub block: Option<VertexSet>,
    pub stab_trivial: Option<bool>,
    pub moved_by_all: Option<usize>,
    pub fixed_pair: Option<[usize; 2]>,
    pub holds: bool,
}

/// Precomputed group, block-cutvertex tree, block quotients and blockbranch
/// classes for repeated queries on one graph.
#[derive(Debug, Clone)]
pub struct OuterplanarAnalysis {
    group: AutGroup,
    bct: BlockCutTree,
    quotients: Vec<AutGroup>,
    /// Per block, per block vertex in ascending order: everything hanging
    /// off the block there, the vertex included.
    hanging: Vec<Vec<VertexSet>>,
    cut_classes: Vec<BlockbranchClasses>,
}

impl OuterplanarAnalysis {
    pub fn new(g: &Graph) -> Result<Self> {
        require_connected_outerplanar(g)?;
        let group = automorphism_group(g)?;
        let bct = block_cut_tree(g)?;
        let quotients = bct
            .blocks
            .iter()
            .map(|&b| quotient_of(&group, b))
            .collect::<Result<_>>()?;
        let hanging = bct
            .blocks
            .iter()
            .map(|&b| {
                b.iter()
                    .map(|v| {
                        blockbranches_of_block(g, b, v)
                            .iter()
                            .fold(VertexSet::EMPTY, |acc, bb| acc.union(bb.vertices))
                    })
                    .collect()
            })
            .collect();
        let cut_classes = bct.cutvertices.iter().map(|&v| blocks::classes_at(g, v)).collect();
        Ok(OuterplanarAnalysis {
            group,
            bct,
            quotients,
            hanging,
            cut_classes,
        })
    }

    pub fn group(&self) -> &AutGroup {
        &self.group
    }

    pub fn block_cut_tree(&self) -> &BlockCutTree {
        &self.bct
    }

    /// Every block sees a block determining set through its blockbranches,
    /// and at every cutvertex each isomorphism class of blockbranches has at
    /// most one member without a vertex of `s` besides the cutvertex.
    pub fn is_determining(&self, s: VertexSet) -> bool {
        let blocks_ok = self.quotients.iter().zip(&self.hanging).all(|(q, hang)| {
            let seen: VertexSet = hang
                .iter()
                .enumerate()
                .filter(|(_, h)| h.intersects(s))
                .map(|(i, _)| i)
                .collect();
            q.pointwise_stabilizer(seen).is_trivial()
        });
        blocks_ok
            && self.cut_classes.iter().all(|c| {
                c.iso_classes.iter().all(|class| {
                    class
                        .iter()
                        .filter(|&&i| !c.branches[i].vertices.without(c.cutvertex).intersects(s))
                        .count()
                        <= 1
                })
            })
    }

    /// Fails exactly when the centre is a block with trivial pointwise
    /// stabilizer whose `Aut_G(B)` has a vertex moved by every reflection
    /// and two vertices fixed by different reflections.
    pub fn exchange_decision(&self, g: &Graph) -> Result<ExchangeEvidence> {
        let Center::Block { index } = self.bct.center else {
            return Ok(ExchangeEvidence {
                center_type: CenterType::Cutvertex,
                block: None,
                stab_trivial: None,
                moved_by_all: None,
                fixed_pair: None,
                holds: true,
            });
        };
        let block = self.bct.blocks[index];
        let stab_trivial = self.group.pointwise_stabilizer(block).is_trivial();
        let mut evidence = ExchangeEvidence {
            center_type: CenterType::Block,
            block: Some(block),
            stab_trivial: Some(stab_trivial),
            moved_by_all: None,
            fixed_pair: None,
            holds: true,
        };
        if stab_trivial {
            let action = block_action(g, block, &self.quotients[index])?;
            let features = reflection_features(block, &action);
            evidence.moved_by_all = features.moved_by_all;
            evidence.fixed_pair = features.fixed_pair;
            evidence.holds = features.moved_by_all.is_none() || features.fixed_pair.is_none();
        }
        Ok(evidence)
    }
}

pub fn is_determining_outerplanar(g: &Graph, s: VertexSet) -> Result<bool> {
    if !s.is_subset(g.vertices()) {
        return Err(Error::Argument(format!("{s} is not a vertex subset")));
    }
    Ok(OuterplanarAnalysis::new(g)?.is_determining(s))
}

pub fn exchange_decision_outerplanar(g: &Graph) -> Result<ExchangeEvidence> {
    OuterplanarAnalysis::new(g)?.exchange_decision(g)
}

/// The exchange decision for a single block, where the pointwise
/// stabilizer of the whole vertex set is always trivial.
pub fn exchange_decision_2connected(g: &Graph) -> Result<ExchangeEvidence> {
    require_block(g)?;
    let features = reflection_features(g.vertices(), &classify_cycle_action(g)?);
    Ok(ExchangeEvidence {
        center_type: CenterType::Block,
        block: Some(g.vertices()),
        stab_trivial: Some(true),
        moved_by_all: features.moved_by_all,
        fixed_pair: features.fixed_pair,
        holds: features.moved_by_all.is_none() || features.fixed_pair.is_none(),
    })
}

/// Minimal determining sets of a single block, read off the reflections:
/// singletons moved by every reflection and pairs fixed by different ones.
pub fn minimal_determining_sets_2connected(g: &Graph) -> Result<MinimalSetCensus> {
    require_block(g)?;
    let action = classify_cycle_action(g)?;
    let group = automorphism_group(g)?;
    if group.is_trivial() {
        return Ok(MinimalSetCensus::new(SetKind::Determining, vec![VertexSet::EMPTY], true)
            .with_orbits(&group));
    }
    let singles = action.moved_by_every_reflection().iter().map(VertexSet::singleton);
    let pairs = action
        .pairs_fixed_by_different_reflections()
        .into_iter()
        .map(|(u, v)| VertexSet::singleton(u).with(v));
    Ok(MinimalSetCensus::new(SetKind::Determining, singles.chain(pairs).collect(), true)
        .with_orbits(&group))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::determining::{is_determining, minimal_determining_sets};
    use crate::exchange::exchange_property;
    use crate::graph::{generate, Family, FamilySpec};
    use crate::system::Budget;

    /// 9-cycle with the triangle 0-3-6 as chords.
    pub(crate) fn nine_cycle_with_triangle() -> Graph {
        let c9 = generate(&FamilySpec::new(Family::Cycle, vec![9])).unwrap();
        c9.add_edge(0, 3).unwrap().add_edge(3, 6).unwrap().add_edge(6, 0).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    fn set(ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(64, ids).unwrap()
    }

    #[test]
    fn triangle_chords_action() {
        let g = nine_cycle_with_triangle();
        let action = classify_cycle_action(&g).unwrap();
        let rotations = action
            .actions
            .iter()
            .filter(|a| matches!(a.motion, CycleMotion::Rotation { .. }))
            .count();
        assert_eq!(rotations, 2);
        let fixed: Vec<Vec<usize>> = action
            .actions
            .iter()
            .filter_map(|a| match &a.motion {
                CycleMotion::Reflection { fixed } => Some(fixed.clone()),
                _ => None,
            })
            .collect();
        assert_eq!(fixed.len(), 3);
        let mut all: Vec<usize> = fixed.concat();
        all.sort();
        assert_eq!(all, vec![0, 3, 6]);
    }

    #[test]
    fn triangle_chords_exchange_fails() {
        let g = nine_cycle_with_triangle();
        let ev = exchange_decision_2connected(&g).unwrap();
        assert!(!ev.holds);
        assert_eq!(ev.moved_by_all, Some(1));
        assert_eq!(ev.fixed_pair, Some([0, 3]));
        assert_eq!(exchange_decision_outerplanar(&g).unwrap(), ev);
        let oracle = exchange_property(&g, SetKind::Determining, &mut Budget::default()).unwrap();
        assert!(!oracle.holds);
        let census = minimal_determining_sets_2connected(&g).unwrap();
        assert_eq!(census.sizes, vec![1, 2]);
        let brute = minimal_determining_sets(&g, None, &mut Budget::default()).unwrap();
        assert_eq!(census, brute);
    }

    #[test]
    fn cycles_hold() {
        for n in 3..=8 {
            let c = generate(&FamilySpec::new(Family::Cycle, vec![n])).unwrap();
            assert!(exchange_decision_2connected(&c).unwrap().holds);
            let census = minimal_determining_sets_2connected(&c).unwrap();
            let brute = minimal_determining_sets(&c, None, &mut Budget::default()).unwrap();
            assert_eq!(census, brute, "C_{n}");
        }
    }

    #[test]
    fn asymmetric_block() {
        // hexagon with chords 0-2 and 0-3 has no symmetry
        let g = generate(&FamilySpec::new(Family::Cycle, vec![6]))
            .unwrap()
            .add_edge(0, 2)
            .unwrap()
            .add_edge(0, 3)
            .unwrap()
            .add_edge(3, 5)
            .unwrap();
        let census = minimal_determining_sets_2connected(&g).unwrap();
        let brute = minimal_determining_sets(&g, None, &mut Budget::default()).unwrap();
        assert_eq!(census, brute);
        assert!(exchange_decision_2connected(&g).unwrap().holds);
    }

    #[test]
    fn bowtie_quotients() {
        let g = bowtie();
        assert_eq!(block_quotient(&g, set(&[0, 1, 2])).unwrap().order(), 2);
        assert!(block_quotient(&g, set(&[0, 1])).is_err());
        assert!(is_block_determining(&g, set(&[0, 1, 2]), set(&[0])).unwrap());
        assert!(!is_block_determining(&g, set(&[0, 1, 2]), VertexSet::EMPTY).unwrap());
        assert!(is_block_determining(&g, set(&[0, 1, 2]), set(&[0, 1, 2])).unwrap());
        assert!(is_block_determining(&g, set(&[0, 1, 2]), set(&[3])).is_err());
        let ev = exchange_decision_outerplanar(&g).unwrap();
        assert_eq!(ev.center_type, CenterType::Cutvertex);
        assert!(ev.holds);
        assert!(exchange_property(&g, SetKind::Determining, &mut Budget::default()).unwrap().holds);
    }

    #[test]
    fn distinct_pendants_kill_the_quotient() {
        // triangle 0-1-2 with a path of length 1 at 1 and length 2 at 2
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (1, 3), (2, 4), (4, 5)]).unwrap();
        assert!(block_quotient(&g, set(&[0, 1, 2])).unwrap().is_trivial());
    }

    #[test]
    fn determining_test_matches_oracle_on_fixtures() {
        for g in [bowtie(), nine_cycle_with_triangle(), generate(&FamilySpec::new(Family::Wheel, vec![8])).unwrap().delete_edge(0, 7).unwrap()] {
            let analysis = OuterplanarAnalysis::new(&g).unwrap();
            for bits in 0..1u64 << g.n() {
                let s = VertexSet::from_bits(bits);
                assert_eq!(analysis.is_determining(s), is_determining(&g, s).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn evidence_json_keys() {
        let json = serde_json::to_value(exchange_decision_outerplanar(&bowtie()).unwrap()).unwrap();
        for key in ["centerType", "block", "stabTrivial", "movedByAll", "fixedPair", "holds"] {
            assert!(json.get(key).is_some(), "{key}");
        }
        assert_eq!(json["centerType"], "cutvertex");
    }
}
