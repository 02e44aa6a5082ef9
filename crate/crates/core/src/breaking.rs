use serde::Serialize;

use crate::autgroup::{
    ball_graph, enumerate_stabilizer, find_root_moving_preserver, restriction_set, GroupSummary,
};
use crate::coloring::{Coloring, BLACK, WHITE};
use crate::error::{Error, Result};
use crate::graph::{bfs_decompose_at, RootedGraph, SphereDecomposition};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum BreakOutcome {
    Distinguishing,
    Partial,
    Failed,
}

#[derive(Clone, Debug, Serialize)]
pub struct BreakStage {
    pub site: String,
    pub newly_broken: usize,
    pub survivors: usize,
}

/// Per-call numbers for one sphere-halving pass.
#[derive(Clone, Debug, Serialize)]
pub struct IterationStat {
    pub m: usize,
    pub n: usize,
    /// whether some n <= R satisfied both the sphere-size bound and the
    /// sphere-count inequality; when false the pass degraded gracefully and
    /// consumed every available sphere up to the truncation radius
    pub qualifying: bool,
    pub targets: usize,
    pub pre_broken: usize,
    pub rounds_used: usize,
    pub halving_bound: usize,
    pub final_survivors: usize,
}

/// Outcome log of a breaking procedure. Survivor counts are non-increasing
/// along the stages of a single pass; in a pipeline report each iteration
/// starts its own count (sites carry an `m=<radius>` prefix).
#[derive(Clone, Debug, Serialize)]
pub struct BreakReport {
    pub outcome: BreakOutcome,
    pub stages: Vec<BreakStage>,
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
    pub excluded_targets: usize,
    pub iterations: Vec<IterationStat>,
}

impl BreakReport {
    fn new(outcome: BreakOutcome) -> BreakReport {
        BreakReport {
            outcome,
            stages: Vec::new(),
            assumptions: Vec::new(),
            notes: Vec::new(),
            excluded_targets: 0,
            iterations: Vec::new(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

const SURROGATE_ASSUMPTION: &str = "surrogate group: the root stabilizer of the finite \
     truncation stands in for the stabilizer of the underlying infinite graph; restrictions \
     are taken at the truncation radius";

/// Greedy per-vertex half-breaking.
///
/// Processes the free vertices in index order (lexicographic by name),
/// keeping for each k the set of targets whose free support lies within the
/// first k vertices, and colors each vertex with whichever of the two colors
/// breaks at least half of the targets newly completed at that vertex. The
/// final coloring breaks at least ceil(eligible/2) of the eligible targets.
///
/// A target is eligible when its support meets `free` and every image of a
/// free support vertex is itself free or already colored in `base`; other
/// targets cannot be decided by recoloring `free` and are excluded from the
/// guarantee (and counted in the report).
pub fn greedy_half_break(
    g: &RootedGraph,
    targets: &[Permutation],
    free: &[usize],
    base: &Coloring,
) -> Result<(Coloring, BreakReport)> {
    for (i, t) in targets.iter().enumerate() {
        if t.size() != g.len() || !t.is_automorphism(g) {
            return Err(Error::NotAutomorphism(i));
        }
        if t.is_identity() {
            return Err(Error::TrivialTarget(i));
        }
    }
    let mut in_free = vec![false; g.len()];
    for &v in free {
        if base.is_frozen(v) {
            return Err(Error::FrozenInFree(g.vertex_name(v).to_string()));
        }
        in_free[v] = true;
    }
    let mut order: Vec<usize> = free.to_vec();
    order.sort_unstable();
    order.dedup();
    let position: Vec<Option<usize>> = {
        let mut pos = vec![None; g.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = Some(i);
        }
        pos
    };

    let mut coloring = base.clone();
    let mut report = BreakReport::new(BreakOutcome::Distinguishing);

    // bucket targets by the last free support vertex in processing order
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    let mut eligible = 0usize;
    for (i, t) in targets.iter().enumerate() {
        let mut last = None;
        let mut decidable = true;
        for v in t.support() {
            if !in_free[v] {
                continue;
            }
            last = Some(last.map_or(position[v].unwrap(), |l: usize| l.max(position[v].unwrap())));
            let img = t.apply(v);
            if !in_free[img] && coloring.label(img).is_none() {
                decidable = false;
            }
        }
        match (last, decidable) {
            (Some(k), true) => {
                buckets[k].push(i);
                eligible += 1;
            }
            _ => report.excluded_targets += 1,
        }
    }
    if report.excluded_targets > 0 {
        report.notes.push(format!(
            "{} target(s) outside the free set's reach were excluded from the guarantee",
            report.excluded_targets
        ));
    }

    let broken_under = |coloring: &Coloring, t: &Permutation| coloring.breaks(t);

    let mut broken = vec![false; targets.len()];
    // targets already broken by the base coloring keep their witnesses:
    // assigned labels are never reassigned below
    for (i, t) in targets.iter().enumerate() {
        if broken_under(&coloring, t) {
            broken[i] = true;
        }
    }

    for (k, &v) in order.iter().enumerate() {
        let keep = coloring.label(v).unwrap_or(WHITE);
        let flip = if keep == WHITE { BLACK } else { WHITE };
        let mut count = [0usize; 2];
        for (choice, color) in [keep, flip].into_iter().enumerate() {
            coloring.set(v, color);
            count[choice] = buckets[k]
                .iter()
                .filter(|&&i| broken_under(&coloring, &targets[i]))
                .count();
        }
        // ties keep the existing color
        let color = if count[1] > count[0] { flip } else { keep };
        coloring.set(v, color);
        if !buckets[k].is_empty() {
            let mut newly = 0;
            for &i in &buckets[k] {
                if !broken[i] && broken_under(&coloring, &targets[i]) {
                    broken[i] = true;
                    newly += 1;
                }
            }
            report.stages.push(BreakStage {
                site: format!("vertex {}", g.vertex_name(v)),
                newly_broken: newly,
                survivors: eligible.saturating_sub(
                    buckets
                        .iter()
                        .take(k + 1)
                        .flatten()
                        .filter(|&&i| broken[i])
                        .count(),
                ),
            });
        }
    }
    for &v in &order {
        coloring.freeze(v);
    }

    // counts pre-broken eligible targets too: they stay broken under both
    // choices at their bucket vertex, so the halving argument covers them
    let broken_count = buckets.iter().flatten().filter(|&&i| broken[i]).count();
    debug_assert!(broken_count >= eligible.div_ceil(2), "halving guarantee");
    let survivors = eligible - broken_count;
    report.outcome = if survivors == 0 && report.excluded_targets == 0 {
        BreakOutcome::Distinguishing
    } else if broken_count > 0 || eligible == 0 {
        BreakOutcome::Partial
    } else {
        BreakOutcome::Failed
    };
    Ok((coloring, report))
}

/// Smallest k admissible for the sphere-halving pass at this eps, i.e. the
/// least integer with (k-1)/k > 1/(1+eps).
pub fn minimal_k(eps: f64) -> Result<usize> {
    if eps <= 0.0 || !eps.is_finite() {
        return Err(Error::BadEps(eps));
    }
    let mut k = 2usize;
    while (k as f64) <= 1.0 + 1.0 / eps {
        k += 1;
        if k > 1_000_000 {
            return Err(Error::BadEps(eps));
        }
    }
    Ok(k)
}

fn check_k_eps(k: usize, eps: f64) -> Result<()> {
    if eps <= 0.0 || !eps.is_finite() {
        return Err(Error::BadEps(eps));
    }
    if k < 1 {
        return Err(Error::BadK);
    }
    if ((k - 1) as f64) / (k as f64) <= 1.0 / (1.0 + eps) {
        return Err(Error::KTooSmall {
            k,
            eps,
            bound: 1.0 + 1.0 / eps,
        });
    }
    Ok(())
}

/// Black spheres of the root-fixing pattern: S(0), S(1), S(k+2) and every
/// S(lambda*k + 4) for lambda >= 1, deduplicated (for k = 2 the sphere S(4)
/// appears on both lists).
fn fixroot_black_spheres(k: usize, r_max: usize) -> Vec<usize> {
    let mut black = vec![0, 1, k + 2];
    let mut lambda = 1;
    while lambda * k + 4 <= r_max {
        black.push(lambda * k + 4);
        lambda += 1;
    }
    black.sort_unstable();
    black.dedup();
    black
}

fn is_skip_sphere(j: usize, k: usize) -> bool {
    j >= k + 4 && (j - 4).is_multiple_of(k)
}

/// Root-fixing pattern. For k = 1 the whole graph is colored: root black,
/// everything else white. For k >= 2 the spheres S(0), S(1), S(k+2) and
/// S(lambda*k+4) turn black, the rest of B(k+3) white, and everything else
/// stays uncolored; all colored vertices are frozen.
pub fn fixroot_pattern(g: &RootedGraph, k: usize) -> Result<Coloring> {
    let root = g.require_root()?;
    if k < 1 {
        return Err(Error::BadK);
    }
    let dec = bfs_decompose_at(g, root);
    let r_max = dec.eccentricity();
    let mut coloring = Coloring::new(g.len());
    if k == 1 {
        for v in 0..g.len() {
            coloring.set_frozen(v, if v == root { BLACK } else { WHITE });
        }
        return Ok(coloring);
    }
    if r_max < k + 3 {
        return Err(Error::FixrootRadius {
            needed: k + 3,
            have: r_max,
        });
    }
    let black = fixroot_black_spheres(k, r_max);
    for &r in &black {
        for &v in dec.sphere(r) {
            coloring.set_frozen(v, BLACK);
        }
    }
    for r in 0..=k + 3 {
        if black.binary_search(&r).is_err() {
            for &v in dec.sphere(r) {
                coloring.set_frozen(v, WHITE);
            }
        }
    }
    Ok(coloring)
}

/// Verdict of the adversarial root-signature check.
#[derive(Clone, Debug, Serialize)]
pub struct RootVerdict {
    /// every non-root vertex is ruled out as a root mimic
    pub unique: bool,
    /// vertices that could still mimic the root under some completion of the
    /// unfrozen vertices
    pub mimics: Vec<String>,
    pub assumptions: Vec<String>,
}

/// Check that the root is the only vertex that can be black with only black
/// neighbors and only white vertices at distances 2..=k+1, no matter how the
/// unfrozen vertices get colored.
///
/// A vertex is ruled out only by frozen witnesses: its own frozen white
/// label, a frozen white neighbor, a frozen black vertex at distance in
/// 2..=k+1, or the structural rule for S(1) vertices adjacent to all of
/// B(1) minus themselves and to nothing in S(2) (on the infinite graph such
/// a transposition with the root would have finite support, which the
/// motion hypothesis forbids; applying it to a truncation is an assumption
/// and is recorded).
pub fn verify_root_signature(
    g: &RootedGraph,
    coloring: &Coloring,
    k: usize,
) -> Result<RootVerdict> {
    let root = g.require_root()?;
    let expected = fixroot_pattern(g, k)?;
    for v in 0..g.len() {
        if let Some(label) = expected.label(v) {
            if coloring.label(v) != Some(label) || !coloring.is_frozen(v) {
                return Err(Error::PatternAbsent(k));
            }
        }
    }
    let dec = bfs_decompose_at(g, root);
    let frozen_white = |v: usize| coloring.is_frozen(v) && coloring.label(v) == Some(WHITE);
    let frozen_black = |v: usize| coloring.is_frozen(v) && coloring.label(v) == Some(BLACK);

    let mut mimics = Vec::new();
    let mut used_structural = false;
    // reused visited buffer with a generation stamp, one bounded BFS per
    // candidate vertex
    let mut stamp = vec![0u32; g.len()];
    let mut generation = 0u32;
    'vertices: for v in 0..g.len() {
        if v == root {
            continue;
        }
        if frozen_white(v) {
            continue;
        }
        if g.neighbors(v).iter().any(|&w| frozen_white(w)) {
            continue;
        }
        // bounded BFS to depth k+1 looking for a frozen black witness
        generation += 1;
        stamp[v] = generation;
        let mut frontier = vec![v];
        for d in 1..=k + 1 {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in g.neighbors(u) {
                    if stamp[w] != generation {
                        stamp[w] = generation;
                        next.push(w);
                    }
                }
            }
            if d >= 2 && next.iter().any(|&w| frozen_black(w)) {
                continue 'vertices;
            }
            frontier = next;
        }
        if dec.dist(v) == Some(1) {
            let ball1: Vec<usize> = dec.ball_vertices(1);
            let adjacent_to_all = ball1.iter().all(|&w| w == v || g.are_adjacent(v, w));
            let touches_s2 = g.neighbors(v).iter().any(|&w| dec.dist(w) == Some(2));
            if adjacent_to_all && !touches_s2 {
                used_structural = true;
                continue;
            }
        }
        mimics.push(g.vertex_name(v).to_string());
    }
    let mut assumptions = Vec::new();
    if used_structural {
        assumptions.push(
            "structural rule applied: a finite-support transposition with the root was \
             excluded by the motion hypothesis, which is an assumption on a truncation"
                .to_string(),
        );
    }
    Ok(RootVerdict {
        unique: mimics.is_empty(),
        mimics,
        assumptions,
    })
}

fn eq1_holds(dec: &SphereDecomposition, n: usize, eps: f64) -> bool {
    n >= 2 && (dec.sphere_size(n) as f64) * (1.0 + eps) * (n as f64).log2() <= n as f64
}

/// Least n > m with (n - m)(k-1)/k >= n/(1+eps) + 1. The left side gains on
/// the right with positive slope once k exceeds 1 + 1/eps, so the first hit
/// is the threshold. Capped defensively; a capped scan just means no radius
/// qualifies and the caller degrades gracefully.
fn sphere_count_threshold(m: usize, k: usize, eps: f64) -> usize {
    let cap = m.saturating_add(100_000_000);
    let mut n = m + 1;
    loop {
        if ((n - m) as f64) * ((k - 1) as f64) / (k as f64) >= (n as f64) / (1.0 + eps) + 1.0
            || n >= cap
        {
            return n;
        }
        n += 1;
    }
}

struct BallBreak {
    coloring: Coloring,
    report: BreakReport,
    final_survivors: usize,
    n_eff: usize,
}

#[allow(clippy::too_many_arguments)]
fn break_ball_actors_impl(
    g: &RootedGraph,
    dec: &SphereDecomposition,
    stabilizer: &GroupSummary,
    k: usize,
    m: usize,
    eps: f64,
    base: &Coloring,
    site_prefix: &str,
) -> Result<BallBreak> {
    check_k_eps(k, eps)?;
    let r_max = dec.eccentricity();
    if m < 1 || m >= r_max {
        return Err(Error::RadiusOutOfRange {
            radius: m,
            min: 1,
            max: r_max.saturating_sub(1),
        });
    }
    // the fixroot spheres must already be frozen so the pass never recolors
    // them
    let expected = fixroot_pattern(g, k)?;
    for v in 0..g.len() {
        if expected.label(v).is_some() && (base.label(v) != expected.label(v) || !base.is_frozen(v))
        {
            return Err(Error::PatternAbsent(k));
        }
    }

    let mut report = BreakReport::new(BreakOutcome::Distinguishing);
    report.assumptions.push(SURROGATE_ASSUMPTION.to_string());

    let n0 = sphere_count_threshold(m, k, eps);
    let chosen = (n0.max(m + 1)..=r_max).find(|&n| eq1_holds(dec, n, eps));
    let (n_eff, qualifying) = match chosen {
        Some(n) => (n, true),
        None => (r_max, false),
    };
    if qualifying {
        report.notes.push(format!(
            "n = {n_eff} is the smallest radius >= {n0} whose sphere satisfies the size bound"
        ));
    } else {
        report.notes.push(format!(
            "no radius <= {r_max} satisfies both the sphere-count threshold (n0 = {n0}) and \
             the sphere-size bound; degrading to the halving loop over every available sphere"
        ));
    }

    let (ball, ball_map) = ball_graph(g, dec, n_eff);
    let elements = stabilizer.require_elements()?;
    let restrictions = restriction_set(g, elements, dec, n_eff)?;
    let total_restrictions = restrictions.len();
    let acting: Vec<Permutation> = restrictions
        .into_iter()
        .filter(|sigma| {
            sigma
                .support()
                .iter()
                .any(|&p| dec.dist(ball_map[p]).unwrap() <= m)
        })
        .collect();
    report.notes.push(format!(
        "surrogate group: {} distinct restrictions to B({}), {} acting nontrivially on B({}); \
         |S({})| = {}",
        total_restrictions,
        n_eff,
        acting.len(),
        m,
        n_eff,
        dec.sphere_size(n_eff),
    ));

    // project the master coloring onto the ball
    let mut ball_coloring = Coloring::new(ball.len());
    for (p, &v) in ball_map.iter().enumerate() {
        if let Some(l) = base.label(v) {
            ball_coloring.set(p, l);
            if base.is_frozen(v) {
                ball_coloring.freeze(p);
            }
        }
    }

    let mut survivors: Vec<Permutation> = acting
        .iter()
        .filter(|sigma| !ball_coloring.breaks(sigma))
        .cloned()
        .collect();
    let pre_broken = acting.len() - survivors.len();
    let targets = acting.len();
    let halving_bound = if survivors.is_empty() {
        0
    } else {
        (usize::BITS - (survivors.len() - 1).leading_zeros()) as usize + 1
    };

    let ball_pos: std::collections::HashMap<usize, usize> =
        ball_map.iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let mut master = base.clone();
    let mut rounds_used = 0usize;
    for j in m + 1..=n_eff {
        if survivors.is_empty() {
            break;
        }
        if is_skip_sphere(j, k) {
            continue;
        }
        let sphere: Vec<usize> = dec.sphere(j).iter().map(|&v| ball_pos[&v]).collect();
        if sphere.iter().any(|&p| ball_coloring.is_frozen(p)) {
            report
                .notes
                .push(format!("sphere {j} already frozen; skipped"));
            continue;
        }
        let (next, _sub) = greedy_half_break(&ball, &survivors, &sphere, &ball_coloring)?;
        ball_coloring = next;
        let before = survivors.len();
        survivors.retain(|sigma| !ball_coloring.breaks(sigma));
        rounds_used += 1;
        report.stages.push(BreakStage {
            site: format!("{site_prefix}sphere {j}"),
            newly_broken: before - survivors.len(),
            survivors: survivors.len(),
        });
        for &p in &sphere {
            master.set_frozen(ball_map[p], ball_coloring.label(p).unwrap());
        }
    }

    if rounds_used > halving_bound {
        report.notes.push(format!(
            "halving bound exceeded: {rounds_used} rounds > ceil(log2 |S|) + 1 = {halving_bound}"
        ));
    }
    report.iterations.push(IterationStat {
        m,
        n: n_eff,
        qualifying,
        targets,
        pre_broken,
        rounds_used,
        halving_bound,
        final_survivors: survivors.len(),
    });
    report.outcome = if survivors.is_empty() {
        BreakOutcome::Distinguishing
    } else if !qualifying {
        BreakOutcome::Failed
    } else {
        BreakOutcome::Partial
    };
    if !survivors.is_empty() {
        report.notes.push(format!(
            "{} surrogate element(s) survived the available spheres",
            survivors.len()
        ));
    }
    Ok(BallBreak {
        coloring: master,
        report,
        final_survivors: survivors.len(),
        n_eff,
    })
}

/// One sphere-halving pass: break every automorphism that fixes the root and
/// acts nontrivially on B(m), by 2-coloring spheres S(m+1), S(m+2), ...
/// while skipping the frozen pattern spheres S(lambda*k+4).
///
/// The surrogate group is the set of restrictions to B(n) of the root
/// stabilizer of the truncation, with n the smallest admissible radius; when
/// no radius up to the truncation radius qualifies, the pass still runs the
/// halving loop over the available spheres and reports partial progress
/// instead of failing with an exception.
pub fn break_ball_actors(
    g: &RootedGraph,
    k: usize,
    m: usize,
    eps: f64,
    base: &Coloring,
    cap: u64,
) -> Result<(Coloring, BreakReport)> {
    let root = g.require_root()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = bfs_decompose_at(g, root);
    let stab = enumerate_stabilizer(g, root, cap)?;
    let result = break_ball_actors_impl(g, &dec, &stab, k, m, eps, base, "")?;
    Ok((result.coloring, result.report))
}

/// The full constructive pipeline: fixroot pattern, then iterated
/// sphere-halving passes with m_1 = k+3 and m_{j+1} = n_j until the radius
/// budget of the truncation is consumed; remaining vertices are filled
/// white. The report claims `distinguishing` only when every nontrivial
/// stabilizer element is broken by the final coloring and a search confirms
/// that no root-moving automorphism preserves it.
pub fn full_pipeline(
    g: &RootedGraph,
    k: usize,
    eps: f64,
    cap: u64,
) -> Result<(Coloring, BreakReport)> {
    check_k_eps(k, eps)?;
    let root = g.require_root()?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dec = bfs_decompose_at(g, root);
    let r_max = dec.eccentricity();
    let mut coloring = fixroot_pattern(g, k)?;
    let verdict = verify_root_signature(g, &coloring, k)?;

    let mut report = BreakReport::new(BreakOutcome::Distinguishing);
    report.assumptions.push(SURROGATE_ASSUMPTION.to_string());
    report.assumptions.extend(verdict.assumptions.clone());
    report.stages.push(BreakStage {
        site: format!("fixroot pattern k={k}"),
        newly_broken: 0,
        survivors: 0,
    });
    if !verdict.unique {
        report.notes.push(format!(
            "root signature not unique; possible mimics: {}",
            verdict.mimics.join(", ")
        ));
    }

    let stab = enumerate_stabilizer(g, root, cap)?;
    let mut m = k + 3;
    while m < r_max {
        let pass =
            break_ball_actors_impl(g, &dec, &stab, k, m, eps, &coloring, &format!("m={m} "))?;
        coloring = pass.coloring;
        report.stages.extend(pass.report.stages);
        report.notes.extend(pass.report.notes);
        report.iterations.extend(pass.report.iterations);
        if pass.final_survivors > 0 && pass.n_eff >= r_max {
            break;
        }
        m = pass.n_eff;
    }
    coloring.fill(WHITE);

    let unbroken: Vec<&Permutation> = stab
        .require_elements()?
        .iter()
        .filter(|phi| !phi.is_identity() && !coloring.breaks(phi))
        .collect();
    let root_mover = find_root_moving_preserver(g, &coloring)?;
    report.outcome = if unbroken.is_empty() && root_mover.is_none() && verdict.unique {
        BreakOutcome::Distinguishing
    } else {
        if !unbroken.is_empty() {
            report.notes.push(format!(
                "{} stabilizer element(s) remain unbroken",
                unbroken.len()
            ));
        }
        if let Some(phi) = &root_mover {
            report.notes.push(format!(
                "a root-moving automorphism survives: {}",
                phi.cycle_string(g)
            ));
        }
        BreakOutcome::Partial
    };
    Ok((coloring, report))
}

/// Sequential pair picking: walk the nontrivial automorphisms in enumeration
/// order and break each with a fresh pair (v, phi(v)), coloring v black and
/// leaving phi(v) white. Pairs never reuse vertices; if no fresh pair exists
/// the run stops and reports exhaustion at the offending automorphism rather
/// than returning a wrong coloring.
pub fn sequential_pair_break(
    g: &RootedGraph,
    summary: &GroupSummary,
) -> Result<(Coloring, BreakReport)> {
    let nontrivial = summary.nontrivial()?;
    let mut report = BreakReport::new(BreakOutcome::Distinguishing);
    if nontrivial.is_empty() {
        report.notes.push("trivial group; empty coloring".into());
        return Ok((Coloring::new(g.len()), report));
    }
    let mut coloring = Coloring::total(vec![WHITE; g.len()]);
    let mut used = vec![false; g.len()];
    let total = nontrivial.len();
    for (idx, phi) in nontrivial.iter().enumerate() {
        let pair = phi
            .support()
            .into_iter()
            .find(|&v| !used[v] && !used[phi.apply(v)]);
        match pair {
            Some(v) => {
                let w = phi.apply(v);
                coloring.set(v, BLACK);
                used[v] = true;
                used[w] = true;
                report.stages.push(BreakStage {
                    site: format!("pair ({}, {})", g.vertex_name(v), g.vertex_name(w)),
                    newly_broken: 1,
                    survivors: total - idx - 1,
                });
            }
            None => {
                report.outcome = BreakOutcome::Failed;
                report.notes.push(format!(
                    "pair exhaustion at automorphism {}",
                    phi.cycle_string(g)
                ));
                return Ok((coloring, report));
            }
        }
    }
    Ok((coloring, report))
}
