use serde::Serialize;

use crate::autgroup::{find_color_preserving_automorphism, GroupSummary};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::RootedGraph;
use crate::rng::SplitMix64;

/// Verdict of the motion/cycle-norm bound checks for a given label count d.
///
/// `cycle_norm_holds` is cn(G) * log2(d) >= log2|Aut(G)| and `motion_holds`
/// is m(G) >= 2 * log2|Aut(G)|; both comparisons are non-strict, so exact
/// equality counts as satisfied. Margins are left-hand side minus right-hand
/// side in log2 units, `None` for the trivial group where both bounds hold
/// vacuously.
#[derive(Clone, Debug, Serialize)]
pub struct MotionVerdict {
    pub d: u32,
    pub order: u64,
    pub motion: Option<usize>,
    pub cycle_norm: Option<usize>,
    pub cycle_norm_holds: bool,
    pub cycle_norm_margin: Option<f64>,
    pub motion_holds: bool,
    pub motion_margin: Option<f64>,
}

pub fn check_motion_bound(summary: &GroupSummary, d: u32) -> Result<MotionVerdict> {
    if summary.truncated {
        return Err(Error::ElementsRequired);
    }
    if d < 2 {
        return Err(Error::BadLabelCount(d));
    }
    let log_order = (summary.order as f64).log2();
    let (cycle_norm_holds, cycle_norm_margin, motion_holds, motion_margin) =
        match (summary.cycle_norm, summary.motion) {
            (Some(cn), Some(m)) => {
                let cn_margin = cn as f64 * (d as f64).log2() - log_order;
                let m_margin = m as f64 - 2.0 * log_order;
                (
                    cn_margin >= 0.0,
                    Some(cn_margin),
                    m_margin >= 0.0,
                    Some(m_margin),
                )
            }
            // trivial group: log2(1) = 0, both bounds hold vacuously
            _ => (true, None, true, None),
        };
    Ok(MotionVerdict {
        d,
        order: summary.order,
        motion: summary.motion,
        cycle_norm: summary.cycle_norm,
        cycle_norm_holds,
        cycle_norm_margin,
        motion_holds,
        motion_margin,
    })
}

/// The union bound on the probability that a uniform d-coloring is preserved
/// by some nontrivial automorphism, plus the exact first-moment sum when the
/// element list is available.
#[derive(Clone, Debug, Serialize)]
pub struct SurvivorBound {
    /// (|Aut(G)| - 1) * d^(-cn(G))
    pub union_bound: f64,
    /// sum over nontrivial phi of d^(-cn(phi))
    pub exact_sum: Option<f64>,
}

pub fn expected_survivors(summary: &GroupSummary, d: u32) -> Result<SurvivorBound> {
    if summary.truncated {
        return Err(Error::ElementsRequired);
    }
    if d < 2 {
        return Err(Error::BadLabelCount(d));
    }
    let union_bound = match summary.cycle_norm {
        Some(cn) => (summary.order - 1) as f64 * (d as f64).powi(-(cn as i32)),
        None => 0.0,
    };
    let exact_sum = summary.elements.as_ref().map(|elements| {
        elements
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| (d as f64).powi(-(p.cycle_norm() as i32)))
            .sum()
    });
    Ok(SurvivorBound {
        union_bound,
        exact_sum,
    })
}

#[derive(Clone, Debug)]
pub struct RandomSearchResult {
    pub coloring: Option<Coloring>,
    pub trials: u64,
    /// 1 / (1 - exact_sum) when the summary makes the sum available and it
    /// is below one: an upper bound on the expected number of trials
    pub expected_trials_bound: Option<f64>,
}

/// Sample uniform d-colorings from a seeded SplitMix64 stream and return the
/// first one the automorphism search verifies as distinguishing.
///
/// Stream contract: trial t colors the vertices in index order, drawing one
/// 64-bit value per vertex and reducing it modulo d, so a fixed seed yields
/// the same coloring sequence on every platform.
pub fn find_distinguishing_coloring(
    g: &RootedGraph,
    summary: Option<&GroupSummary>,
    d: u32,
    budget: u64,
    seed: u64,
) -> Result<RandomSearchResult> {
    if d < 2 {
        return Err(Error::BadLabelCount(d));
    }
    let expected_trials_bound = summary
        .and_then(|s| expected_survivors(s, d).ok())
        .and_then(|b| b.exact_sum)
        .filter(|&sum| sum < 1.0)
        .map(|sum| 1.0 / (1.0 - sum));
    let mut rng = SplitMix64::new(seed);
    for trial in 1..=budget {
        let labels: Vec<u32> = (0..g.len()).map(|_| rng.below(d as u64) as u32).collect();
        let coloring = Coloring::total(labels);
        if find_color_preserving_automorphism(g, &coloring)?.is_none() {
            return Ok(RandomSearchResult {
                coloring: Some(coloring),
                trials: trial,
                expected_trials_bound,
            });
        }
    }
    Ok(RandomSearchResult {
        coloring: None,
        trials: budget,
        expected_trials_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::enumerate_automorphisms;
    use crate::corpus;

    #[test]
    fn motion_bound_examples() {
        // P_4: cn = 2, |Aut| = 2, d = 2: 2 * 1 >= 1
        let summary = enumerate_automorphisms(&corpus::path(4), 100);
        let verdict = check_motion_bound(&summary, 2).unwrap();
        assert!(verdict.cycle_norm_holds);
        assert!(verdict.motion_holds); // 4 >= 2

        // C_6: |Aut| = 12, m = 4 < 2 log2 12
        let summary = enumerate_automorphisms(&corpus::cycle(6), 100);
        let verdict = check_motion_bound(&summary, 2).unwrap();
        assert_eq!(verdict.motion, Some(4));
        assert!(!verdict.motion_holds);

        // rigid graph: vacuous
        let summary = enumerate_automorphisms(&corpus::rigid6(), 100);
        let verdict = check_motion_bound(&summary, 2).unwrap();
        assert!(verdict.cycle_norm_holds && verdict.motion_holds);
        assert!(verdict.motion_margin.is_none());

        // truncated summaries are rejected
        let truncated = enumerate_automorphisms(&corpus::cycle(6), 3);
        assert!(check_motion_bound(&truncated, 2).is_err());
    }

    #[test]
    fn expected_survivors_examples() {
        let summary = enumerate_automorphisms(&corpus::path(4), 100);
        let b = expected_survivors(&summary, 2).unwrap();
        assert_eq!(b.union_bound, 0.25);
        assert_eq!(b.exact_sum, Some(0.25));

        // K_3: two 3-cycles (cn 2) and three transpositions (cn 1)
        let summary = enumerate_automorphisms(&corpus::complete(3), 100);
        let b = expected_survivors(&summary, 2).unwrap();
        assert_eq!(b.exact_sum, Some(2.0));
        assert_eq!(b.union_bound, 2.5);

        let summary = enumerate_automorphisms(&corpus::rigid6(), 100);
        let b = expected_survivors(&summary, 2).unwrap();
        assert_eq!(b.union_bound, 0.0);
        assert_eq!(b.exact_sum, Some(0.0));
    }

    #[test]
    fn random_search_on_p4() {
        let g = corpus::path(4);
        let summary = enumerate_automorphisms(&g, 100);
        let result = find_distinguishing_coloring(&g, Some(&summary), 2, 100, 7).unwrap();
        let coloring = result.coloring.expect("P_4 has distinguishing 2-colorings");
        assert!(find_color_preserving_automorphism(&g, &coloring)
            .unwrap()
            .is_none());
        // 12 of the 16 colorings distinguish, so this lands fast
        assert!(result.trials <= 5, "took {} trials", result.trials);
    }

    #[test]
    fn random_search_exhausts_on_k3_with_two_labels() {
        let g = corpus::complete(3);
        let result = find_distinguishing_coloring(&g, None, 2, 50, 1).unwrap();
        assert!(result.coloring.is_none());
        assert_eq!(result.trials, 50);
        // three labels succeed via the rainbow coloring
        let result = find_distinguishing_coloring(&g, None, 3, 200, 1).unwrap();
        assert!(result.coloring.is_some());
    }

    #[test]
    fn same_seed_same_trace() {
        let g = corpus::cycle(6);
        let a = find_distinguishing_coloring(&g, None, 2, 500, 99).unwrap();
        let b = find_distinguishing_coloring(&g, None, 2, 500, 99).unwrap();
        assert_eq!(a.trials, b.trials);
        assert_eq!(a.coloring, b.coloring);
    }
}
