//! Exact distinguishing number by exhaustive search. Deliberately the slow
//! trusted oracle: no orbit counting, no algebraic shortcuts; every candidate
//! labeling is verified by the automorphism search.

use serde::Serialize;

use crate::autgroup::find_color_preserving_automorphism;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::RootedGraph;
use crate::perm::Permutation;

/// Hard ceiling on the labelings examined per label count. Documented in the
/// CLI help; exceeding it yields an explicit result, never silent truncation.
pub const CANDIDATE_GUARD: u128 = 10_000_000;

#[derive(Clone, Debug)]
pub enum DistnumOutcome {
    /// Least d <= max_d with a distinguishing d-labeling, the
    /// lexicographically least witness, and the number of candidates
    /// examined across all levels.
    Found {
        d: u32,
        witness: Coloring,
        candidates: u64,
    },
    /// No distinguishing labeling with up to max_d labels.
    ExceededMaxD { candidates: u64 },
}

/// Least d <= max_d admitting a distinguishing d-labeling.
///
/// Labelings are enumerated in mixed-radix order (first vertex most
/// significant). With `reduce` set, the first vertex's label is pinned to 0;
/// distinguishing status is invariant under label permutation, so the
/// reduction is sound and the witness stays lexicographically least.
pub fn distinguishing_number(g: &RootedGraph, max_d: u32, reduce: bool) -> Result<DistnumOutcome> {
    if max_d < 1 {
        return Err(Error::BadLabelCount(max_d));
    }
    let n = g.len();
    let mut candidates = 0u64;
    for d in 1..=max_d {
        let raw = (d as u128)
            .checked_pow(n as u32)
            .ok_or(Error::GuardExceeded {
                d,
                required: u128::MAX,
                guard: CANDIDATE_GUARD,
            })?;
        if raw > CANDIDATE_GUARD {
            return Err(Error::GuardExceeded {
                d,
                required: raw,
                guard: CANDIDATE_GUARD,
            });
        }
        let mut labels = vec![0u32; n];
        loop {
            candidates += 1;
            let coloring = Coloring::total(labels.clone());
            if find_color_preserving_automorphism(g, &coloring)?.is_none() {
                return Ok(DistnumOutcome::Found {
                    d,
                    witness: coloring,
                    candidates,
                });
            }
            // advance the mixed-radix counter, least significant last; the
            // first digit stays pinned to 0 under the reduction flag
            let stop = if reduce { 1 } else { 0 };
            let mut pos = n;
            while pos > stop {
                pos -= 1;
                labels[pos] += 1;
                if labels[pos] < d {
                    break;
                }
                labels[pos] = 0;
            }
            // a successful advance leaves a nonzero digit; all zeros means
            // the counter wrapped and the level is exhausted
            if labels.iter().all(|&l| l == 0) {
                break;
            }
        }
    }
    Ok(DistnumOutcome::ExceededMaxD { candidates })
}

#[derive(Clone, Debug, Serialize)]
pub struct DistinguishingVerdict {
    pub distinguishing: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<std::collections::BTreeMap<String, String>>,
}

/// True iff no nontrivial automorphism preserves the total coloring; a
/// failing verdict carries a witness.
pub fn is_distinguishing(
    g: &RootedGraph,
    coloring: &Coloring,
) -> Result<(bool, Option<Permutation>)> {
    let witness = find_color_preserving_automorphism(g, coloring)?;
    Ok((witness.is_none(), witness))
}
