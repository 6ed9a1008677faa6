//! The exchange property, decided by exhausting the minimal-set census.
//!
//! The property holds when for all minimal `S`, all minimal `R` and every
//! `r` in `R` some `s` in `S` makes `S - {s} + {r}` minimal again. Only the
//! union of all minimal sets matters for `r`, so the check runs over
//! (census set, vertex of the union) pairs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::system::{set_system, Budget, MinimalSetCensus, SetKind, SetSystem};

/// A minimal set `S` and a vertex `r` of some minimal set such that no swap
/// `S - {s} + {r}` is minimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "S")]
    pub set: VertexSet,
    pub r: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExchangeReport {
    pub kind: SetKind,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Size histogram of the complete minimal-set census.
    pub sizes: BTreeMap<usize, usize>,
    pub equal_cardinality: bool,
}

/// Computes the full census for `kind` on `g` and checks every exchange.
pub fn exchange_property(g: &Graph, kind: SetKind, budget: &mut Budget) -> Result<ExchangeReport> {
    let sys = set_system(g, kind)?;
    exchange_in(&sys, budget)
}

pub fn exchange_in(sys: &SetSystem, budget: &mut Budget) -> Result<ExchangeReport> {
    let (sets, complete) = sys.minimal_sets(None, budget)?;
    if !complete {
        return Err(Error::Internal("uncapped census reported incomplete".into()));
    }
    let census = MinimalSetCensus::new(sys.kind(), sets, complete);
    exchange_over_census(sys, &census, budget)
}

/// Exchange check over an already computed census, which must be complete.
pub fn exchange_over_census(
    sys: &SetSystem,
    census: &MinimalSetCensus,
    budget: &mut Budget,
) -> Result<ExchangeReport> {
    if !census.complete {
        return Err(Error::Budget {
            limit: budget.limit(),
        });
    }
    let union = census
        .sets
        .iter()
        .fold(VertexSet::EMPTY, |acc, &s| acc.union(s));
    let mut witness = None;
    'outer: for &s in &census.sets {
        for r in union.difference(s) {
            budget.charge(s.len() as u64)?;
            let swappable = s.iter().any(|x| sys.is_minimal(s.without(x).with(r)));
            if !swappable {
                witness = Some(Witness { set: s, r });
                break 'outer;
            }
        }
    }
    Ok(ExchangeReport {
        kind: sys.kind(),
        holds: witness.is_none(),
        witness,
        sizes: census.size_histogram.clone(),
        equal_cardinality: census.equal_cardinality(),
    })
}

/// Every `x` in `s` for which `s - {x} + {r}` is minimal of the kind. An
/// empty list certifies `(s, r)` as a failing pair.
pub fn swap_candidates(g: &Graph, kind: SetKind, s: VertexSet, r: usize) -> Result<Vec<usize>> {
    swap_candidates_in(&set_system(g, kind)?, s, r)
}

pub fn swap_candidates_in(sys: &SetSystem, s: VertexSet, r: usize) -> Result<Vec<usize>> {
    if r >= sys.n() {
        return Err(Error::Argument(format!("vertex {r} out of range")));
    }
    if !s.is_subset(VertexSet::full(sys.n())) || !sys.is_minimal(s) {
        return Err(Error::Argument(format!(
            "{s} is not a minimal {} set",
            sys.kind().name()
        )));
    }
    Ok(s.iter()
        .filter(|&x| sys.is_minimal(s.without(x).with(r)))
        .collect())
}
