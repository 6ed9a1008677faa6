//! Characterization-versus-oracle sweeps behind the report commands.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::determining::is_determining_in;
use crate::automorphism::automorphism_group;
use crate::error::Result;
use crate::exchange::{exchange_in, swap_candidates_in};
use crate::graph::{all_pairs_distances, generate, Family, FamilySpec, Graph, VertexSet};
use crate::outerplanar::{ExchangeEvidence, OuterplanarAnalysis};
use crate::resolving::{is_minimal_resolving_with, is_resolving_with};
use crate::system::{Budget, SetSystem};
use crate::trees::{is_determining_tree, is_minimal_resolving_tree};
use crate::wheels::{canonical_resolving_set, is_resolving_wheel, resolving_exchange_witness};

/// Every subset when `n <= exhaustive_up_to`, else `samples` random ones.
fn subsets(n: usize, exhaustive_up_to: usize, samples: usize, rng: &mut ChaCha8Rng) -> (Vec<VertexSet>, bool) {
    if n <= exhaustive_up_to {
        ((0..1u64 << n).map(VertexSet::from_bits).collect(), true)
    } else {
        let mask = VertexSet::full(n).bits();
        ((0..samples).map(|_| VertexSet::from_bits(rng.random::<u64>() & mask)).collect(), false)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Comparison {
    pub checked: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<VertexSet>,
}

impl Comparison {
    fn record(&mut self, s: VertexSet, agree: bool) {
        self.checked += 1;
        if !agree {
            self.mismatches += 1;
            self.first_mismatch.get_or_insert(s);
        }
    }

    fn absorb(&mut self, other: &Comparison) {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        if self.first_mismatch.is_none() {
            self.first_mismatch = other.first_mismatch;
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TreeComparison {
    pub exhaustive: bool,
    pub determining: Comparison,
    /// `None` on paths, where the leg rule does not apply.
    pub minimal_resolving: Option<Comparison>,
    pub determining_exchange_holds: Option<bool>,
    pub resolving_exchange_holds: Option<bool>,
}

/// Exchange verdicts are computed only up to this many vertices.
pub const EXCHANGE_ORACLE_MAX: usize = 12;

pub fn compare_tree(t: &Graph, seed: u64, budget: &mut Budget) -> Result<TreeComparison> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (sets, exhaustive) = subsets(t.n(), 10, 500, &mut rng);
    let group = automorphism_group(t)?;
    let dist = all_pairs_distances(t);
    let is_path = (0..t.n()).all(|v| t.degree(v) <= 2);
    let mut determining = Comparison::default();
    let mut resolving = Comparison::default();
    for &s in &sets {
        determining.record(s, is_determining_tree(t, s)? == is_determining_in(&group, s));
        if !is_path {
            resolving.record(s, is_minimal_resolving_tree(t, s)? == is_minimal_resolving_with(&dist, s));
        }
    }
    let small = t.n() <= EXCHANGE_ORACLE_MAX;
    let det_holds = if small {
        Some(exchange_in(&SetSystem::determining(&group), budget)?.holds)
    } else {
        None
    };
    let res_holds = if small && !is_path {
        Some(exchange_in(&SetSystem::resolving(&dist)?, budget)?.holds)
    } else {
        None
    };
    Ok(TreeComparison {
        exhaustive,
        determining,
        minimal_resolving: (!is_path).then_some(resolving),
        determining_exchange_holds: det_holds,
        resolving_exchange_holds: res_holds,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct OuterplanarComparison {
    pub evidence: ExchangeEvidence,
    pub oracle_holds: Option<bool>,
    pub agrees: Option<bool>,
    pub exhaustive: bool,
    pub determining: Comparison,
}

pub fn compare_outerplanar(g: &Graph, seed: u64, budget: &mut Budget) -> Result<OuterplanarComparison> {
    let analysis = OuterplanarAnalysis::new(g)?;
    let evidence = analysis.exchange_decision(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (sets, exhaustive) = subsets(g.n(), 10, 500, &mut rng);
    let mut determining = Comparison::default();
    for &s in &sets {
        determining.record(s, analysis.is_determining(s) == is_determining_in(analysis.group(), s));
    }
    let oracle_holds = if g.n() <= EXCHANGE_ORACLE_MAX {
        Some(exchange_in(&SetSystem::determining(analysis.group()), budget)?.holds)
    } else {
        None
    };
    Ok(OuterplanarComparison {
        agrees: oracle_holds.map(|h| h == evidence.holds),
        evidence,
        oracle_holds,
        exhaustive,
        determining,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WheelRow {
    pub n: usize,
    pub canonical_set: VertexSet,
    pub expected_size: usize,
    pub gap_sizes: Vec<usize>,
    pub gap_test_resolving: bool,
    pub witness: Option<crate::exchange::Witness>,
    /// No member of the witness set can be traded for its vertex.
    pub witness_certified: Option<bool>,
    /// Gap test against distance vectors over every rim subset.
    pub gap_test_vs_oracle: Option<Comparison>,
}

/// Every rim subset is compared against the oracle up to this rim size.
pub const WHEEL_SWEEP_MAX: usize = 14;

pub fn wheel_row(n: usize) -> Result<WheelRow> {
    let g = generate(&FamilySpec::new(Family::Wheel, vec![n as u64]))?;
    let s = canonical_resolving_set(n)?;
    let dist = all_pairs_distances(&g);
    let sys = SetSystem::resolving(&dist)?;
    let (witness, certified) = match resolving_exchange_witness(n) {
        Ok((ws, r)) => (
            Some(crate::exchange::Witness { set: ws, r }),
            Some(swap_candidates_in(&sys, ws, r)?.is_empty()),
        ),
        Err(_) => (None, None),
    };
    let sweep = if n <= WHEEL_SWEEP_MAX {
        let mut c = Comparison::default();
        for bits in 0..1u64 << n {
            let s = VertexSet::from_bits(bits);
            c.record(s, is_resolving_wheel(n, s)? == is_resolving_with(&dist, s));
        }
        Some(c)
    } else {
        None
    };
    Ok(WheelRow {
        n,
        canonical_set: s,
        expected_size: (2 * n + 2) / 5,
        gap_sizes: crate::wheels::rim_gaps(n, s)?.sizes(),
        gap_test_resolving: is_resolving_wheel(n, s)?,
        witness,
        witness_certified: certified,
        gap_test_vs_oracle: sweep,
    })
}

#[derive(Debug, Clone, Default, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteSummary {
    pub instances: u64,
    pub subset_checks: Comparison,
    pub exchange_checks: u64,
    pub exchange_mismatches: u64,
}

/// Seeded random trees, `5 <= n <= 12`: both tree criteria against the
/// oracles, and both exchange verdicts expected to hold off paths.
pub fn tree_suite(count: u64, seed: u64, budget: &mut Budget) -> Result<SuiteSummary> {
    let mut summary = SuiteSummary::default();
    for i in 0..count {
        let n = 5 + (seed.wrapping_add(i) % 8);
        let t = generate(&FamilySpec::seeded(Family::RandomTree, vec![n], seed.wrapping_add(i)))?;
        let c = compare_tree(&t, seed.wrapping_add(i), budget)?;
        summary.instances += 1;
        summary.subset_checks.absorb(&c.determining);
        if let Some(r) = &c.minimal_resolving {
            summary.subset_checks.absorb(r);
        }
        for verdict in [c.determining_exchange_holds, c.resolving_exchange_holds].into_iter().flatten() {
            summary.exchange_checks += 1;
            if !verdict {
                summary.exchange_mismatches += 1;
            }
        }
    }
    Ok(summary)
}

/// Seeded connected outerplanar graphs, `3 <= n <= 10`, alternating between
/// general and 2-connected ones.
pub fn outerplanar_suite(count: u64, seed: u64, budget: &mut Budget) -> Result<SuiteSummary> {
    let mut summary = SuiteSummary::default();
    for i in 0..count {
        let s = seed.wrapping_add(i);
        let n = 3 + s % 8;
        let params = if i % 2 == 0 { vec![n] } else { vec![n, 1] };
        let g = generate(&FamilySpec::seeded(Family::RandomOuterplanar, params, s))?;
        let c = compare_outerplanar(&g, s, budget)?;
        summary.instances += 1;
        summary.subset_checks.absorb(&c.determining);
        if let Some(agrees) = c.agrees {
            summary.exchange_checks += 1;
            if !agrees {
                summary.exchange_mismatches += 1;
            }
        }
    }
    Ok(summary)
}

/// Wheels `7 <= n <= 12`: gap test over every rim subset, plus certified
/// failure witnesses from `n = 8`.
pub fn wheel_suite() -> Result<SuiteSummary> {
    let mut summary = SuiteSummary::default();
    for n in 7..=12 {
        let row = wheel_row(n)?;
        summary.instances += 1;
        if let Some(c) = &row.gap_test_vs_oracle {
            summary.subset_checks.absorb(c);
        }
        if let Some(certified) = row.witness_certified {
            summary.exchange_checks += 1;
            if !certified {
                summary.exchange_mismatches += 1;
            }
        }
    }
    Ok(summary)
}
