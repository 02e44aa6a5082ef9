use std::collections::HashMap;
use std::collections::VecDeque;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bfs_decompose_at, RootedGraph};

/// Subdivision lengths for the stretched-tree construction: `lengths[i]` is
/// the least positive integer N such that 3 * 2^i * n + 1 <= n^(1+eps) for
/// every n >= N. Edges of the base degree-3 tree between levels i and i+1
/// are replaced by paths of length `lengths[i+1]`.
#[derive(Clone, Debug, Serialize)]
pub struct StretchedTreePlan {
    pub eps: f64,
    pub lengths: Vec<u64>,
}

impl StretchedTreePlan {
    pub fn n(&self, i: usize) -> u64 {
        self.lengths[i]
    }

    /// Distance from the root to a level-l tree vertex: n_1 + ... + n_l.
    pub fn level_distance(&self, level: usize) -> u64 {
        self.lengths[1..=level].iter().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let table: std::collections::BTreeMap<String, u64> = self
            .lengths
            .iter()
            .enumerate()
            .map(|(i, &n)| (i.to_string(), n))
            .collect();
        serde_json::json!({ "eps": self.eps, "subdivision_lengths": table })
    }
}

const SCAN_CAP: u64 = 10_000_000;
const GUARD_RUN: u64 = 64;

/// Compare h_i(n) = 3 * 2^i * n + 1 against n^(1+eps). Rejects comparisons
/// that land within 1e-9 relative distance of equality so boundary behavior
/// never depends on platform rounding.
fn h_holds(i: usize, n: u64, eps: f64) -> Result<bool> {
    let coeff = 3u64
        .checked_mul(1u64.checked_shl(i as u32).ok_or(Error::PlanOverflow(i))?)
        .ok_or(Error::PlanOverflow(i))?;
    let lhs = coeff
        .checked_mul(n)
        .and_then(|x| x.checked_add(1))
        .ok_or(Error::PlanOverflow(i))? as f64;
    let rhs = (n as f64).powf(1.0 + eps);
    if !rhs.is_finite() {
        return Err(Error::PlanOverflow(i));
    }
    if (lhs - rhs).abs() <= 1e-9 * lhs.max(rhs.abs()) {
        return Err(Error::BoundaryAmbiguity {
            i,
            n,
            lhs,
            rhs,
            eps,
        });
    }
    Ok(lhs <= rhs)
}

/// Least N with h_i(n) <= n^(1+eps) for all n >= N, found by upward scan.
/// Since h_i(n) - n^(1+eps) has a single sign change for eps > 0, the first
/// satisfying n is the answer; the next 64 values are checked as a guard
/// against float artifacts, and the scan resumes past any violation.
fn scan_level(i: usize, eps: f64) -> Result<u64> {
    let mut n = 1u64;
    let mut iterations = 0u64;
    loop {
        n += 1;
        iterations += 1;
        if iterations > SCAN_CAP {
            return Err(Error::PlanScanExceeded(i, SCAN_CAP));
        }
        if !h_holds(i, n, eps)? {
            continue;
        }
        let mut guard_ok = true;
        for m in n + 1..=n + GUARD_RUN {
            if !h_holds(i, m, eps)? {
                n = m; // resume past the violation
                guard_ok = false;
                break;
            }
        }
        if guard_ok {
            return Ok(n);
        }
    }
}

/// Subdivision lengths n_0 .. n_depth for the stretched tree at `eps`.
pub fn plan_stretched_tree(eps: f64, depth: usize) -> Result<StretchedTreePlan> {
    if eps <= 0.0 || !eps.is_finite() {
        return Err(Error::BadEps(eps));
    }
    let mut lengths = Vec::with_capacity(depth + 1);
    for i in 0..=depth {
        lengths.push(scan_level(i, eps)?);
    }
    Ok(StretchedTreePlan { eps, lengths })
}

/// Lazy descriptions of the infinite graph families. Each family exposes a
/// canonical root and a pure, symmetric neighbor oracle; `truncate` builds
/// the explicit ball of a given radius.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    TwoSidedPath,
    HomogeneousTree { degree: usize },
    Grid2d,
    StretchedTree { eps: f64 },
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        if s == "path" {
            return Ok(Family::TwoSidedPath);
        }
        if s == "grid" {
            return Ok(Family::Grid2d);
        }
        if let Some(d) = s.strip_prefix("tree:") {
            let degree: usize = d.parse().map_err(|_| Error::UnknownFamily(s.into()))?;
            if !(3..=10).contains(&degree) {
                return Err(Error::BadDegree(degree));
            }
            return Ok(Family::HomogeneousTree { degree });
        }
        if let Some(e) = s.strip_prefix("stretched:") {
            let eps: f64 = e.parse().map_err(|_| Error::UnknownFamily(s.into()))?;
            if eps <= 0.0 || !eps.is_finite() {
                return Err(Error::BadEps(eps));
            }
            return Ok(Family::StretchedTree { eps });
        }
        Err(Error::UnknownFamily(s.to_string()))
    }
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::TwoSidedPath => "path".into(),
            Family::HomogeneousTree { degree } => format!("tree:{degree}"),
            Family::Grid2d => "grid".into(),
            Family::StretchedTree { eps } => format!("stretched:{eps}"),
        }
    }

    pub fn root_name(&self) -> String {
        match self {
            Family::TwoSidedPath => "0".into(),
            Family::Grid2d => "0,0".into(),
            // tree vertices are named by their root path; the root is the
            // empty path
            Family::HomogeneousTree { .. } | Family::StretchedTree { .. } => String::new(),
        }
    }

    /// Materialize whatever plan data the oracle needs to answer queries for
    /// vertices within distance `radius` of the root (plus their neighbors).
    fn oracle(&self, radius: usize) -> Result<Oracle> {
        match self {
            Family::StretchedTree { eps } => {
                let mut depth = 1;
                loop {
                    let plan = plan_stretched_tree(*eps, depth)?;
                    if plan.level_distance(depth - 1) >= radius as u64 {
                        return Ok(Oracle::Stretched(plan));
                    }
                    depth += 1;
                }
            }
            Family::TwoSidedPath => Ok(Oracle::Path),
            Family::Grid2d => Ok(Oracle::Grid),
            Family::HomogeneousTree { degree } => Ok(Oracle::Tree(*degree)),
        }
    }

    /// Neighbor oracle materialized for the given radius, mainly for tests
    /// and ad-hoc queries; `truncate` calls it internally.
    pub fn neighbors_within(&self, radius: usize, vertex: &str) -> Result<Vec<String>> {
        self.oracle(radius)?.neighbors(vertex)
    }

    /// The explicit ball of radius r around the family's canonical root,
    /// with induced adjacency and the root set.
    pub fn truncate(&self, radius: usize) -> Result<RootedGraph> {
        let oracle = self.oracle(radius)?;
        let root = self.root_name();
        let mut dist: HashMap<String, usize> = HashMap::from([(root.clone(), 0)]);
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            if d == radius {
                continue;
            }
            for w in oracle.neighbors(&v)? {
                if !dist.contains_key(&w) {
                    dist.insert(w.clone(), d + 1);
                    queue.push_back(w);
                }
            }
        }
        let vertices: Vec<String> = dist.keys().cloned().collect();
        let mut edges = Vec::new();
        for v in &vertices {
            for w in oracle.neighbors(v)? {
                if dist.contains_key(&w) && v.as_str() < w.as_str() {
                    edges.push((v.clone(), w.clone()));
                }
            }
        }
        RootedGraph::from_parts(vertices, edges, Some(root))
    }

    /// Per-radius (r, |B(r)|, |S(r)|) rows, consistent with a BFS
    /// decomposition of the truncation at `limit`.
    pub fn growth_profile(&self, limit: usize) -> Result<Vec<GrowthRow>> {
        let g = self.truncate(limit)?;
        let dec = bfs_decompose_at(&g, g.require_root()?);
        let mut ball = 0;
        Ok((0..=limit)
            .map(|r| {
                let sphere = dec.sphere_size(r);
                ball += sphere;
                GrowthRow { r, ball, sphere }
            })
            .collect())
    }

    /// The subdivision plan backing a truncation at `radius`; `None` for
    /// families other than the stretched tree.
    pub fn plan_for_radius(&self, radius: usize) -> Option<Result<StretchedTreePlan>> {
        match self {
            Family::StretchedTree { .. } => Some(self.oracle(radius).map(|o| match o {
                Oracle::Stretched(plan) => plan,
                _ => unreachable!(),
            })),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct GrowthRow {
    pub r: usize,
    pub ball: usize,
    pub sphere: usize,
}

enum Oracle {
    Path,
    Grid,
    Tree(usize),
    Stretched(StretchedTreePlan),
}

impl Oracle {
    fn neighbors(&self, v: &str) -> Result<Vec<String>> {
        match self {
            Oracle::Path => {
                let i: i64 = v
                    .parse()
                    .map_err(|_| Error::BadFamilyVertex(v.to_string()))?;
                Ok(vec![(i - 1).to_string(), (i + 1).to_string()])
            }
            Oracle::Grid => {
                let (x, y) = v
                    .split_once(',')
                    .ok_or_else(|| Error::BadFamilyVertex(v.to_string()))?;
                let x: i64 = x
                    .parse()
                    .map_err(|_| Error::BadFamilyVertex(v.to_string()))?;
                let y: i64 = y
                    .parse()
                    .map_err(|_| Error::BadFamilyVertex(v.to_string()))?;
                Ok(vec![
                    format!("{},{}", x - 1, y),
                    format!("{},{}", x + 1, y),
                    format!("{},{}", x, y - 1),
                    format!("{},{}", x, y + 1),
                ])
            }
            Oracle::Tree(degree) => {
                let path = parse_tree_path(v, *degree)?;
                let mut out = Vec::new();
                if !path.is_empty() {
                    out.push(v[..v.len() - 1].to_string());
                }
                let branch = if path.is_empty() {
                    *degree
                } else {
                    *degree - 1
                };
                for c in 0..branch {
                    out.push(format!("{v}{c}"));
                }
                Ok(out)
            }
            Oracle::Stretched(plan) => stretched_neighbors(plan, v),
        }
    }
}

fn parse_tree_path(v: &str, degree: usize) -> Result<Vec<usize>> {
    let mut path = Vec::with_capacity(v.len());
    for (pos, ch) in v.chars().enumerate() {
        let d = ch
            .to_digit(10)
            .ok_or_else(|| Error::BadFamilyVertex(v.to_string()))? as usize;
        let branch = if pos == 0 { degree } else { degree - 1 };
        if d >= branch {
            return Err(Error::BadFamilyVertex(v.to_string()));
        }
        path.push(d);
    }
    Ok(path)
}

/// Stretched-tree oracle. Original tree vertices keep their root-path names
/// over {0,1,2}; the j-th interior vertex of the subdivided edge ending at
/// tree vertex `q` (level l) is named `q~j` for 1 <= j <= n_l - 1 and sits
/// at distance j from q's parent.
fn stretched_neighbors(plan: &StretchedTreePlan, v: &str) -> Result<Vec<String>> {
    let need_level = |level: usize| -> Result<u64> {
        plan.lengths
            .get(level)
            .copied()
            .ok_or_else(|| Error::BadFamilyVertex(v.to_string()))
    };
    if let Some((child, j)) = v.rsplit_once('~') {
        let path = parse_tree_path(child, 3)?;
        if path.is_empty() {
            return Err(Error::BadFamilyVertex(v.to_string()));
        }
        let j: u64 = j
            .parse()
            .map_err(|_| Error::BadFamilyVertex(v.to_string()))?;
        let n = need_level(path.len())?;
        if j == 0 || j >= n {
            return Err(Error::BadFamilyVertex(v.to_string()));
        }
        let parent = child[..child.len() - 1].to_string();
        let down = if j == 1 {
            parent
        } else {
            format!("{child}~{}", j - 1)
        };
        let up = if j == n - 1 {
            child.to_string()
        } else {
            format!("{child}~{}", j + 1)
        };
        return Ok(vec![down, up]);
    }
    let path = parse_tree_path(v, 3)?;
    let mut out = Vec::new();
    if !path.is_empty() {
        let n = need_level(path.len())?;
        // q~(n-1) is the subdivision vertex next to q on the parent side
        out.push(format!("{v}~{}", n - 1));
    }
    let branch = if path.is_empty() { 3 } else { 2 };
    let n_child = need_level(path.len() + 1)?;
    for c in 0..branch {
        debug_assert!(n_child >= 2);
        out.push(format!("{v}{c}~1"));
    }
    Ok(out)
}
