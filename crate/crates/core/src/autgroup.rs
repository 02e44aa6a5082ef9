use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{RootedGraph, SphereDecomposition};
use crate::perm::Permutation;

/// Default cap on explicit group enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// Result of enumerating (part of) an automorphism group.
///
/// When `truncated` is false, `order` is exact and `elements` holds the full
/// group sorted lexicographically by image tuple (the identity first).
/// When enumeration hits the cap, `truncated` is set, `order` is a lower
/// bound and `elements` is absent.
#[derive(Clone, Debug)]
pub struct GroupSummary {
    pub order: u64,
    pub truncated: bool,
    pub elements: Option<Vec<Permutation>>,
    /// m(G): least motion over nontrivial elements; `None` for the trivial
    /// group or when enumeration was truncated.
    pub motion: Option<usize>,
    /// cn(G): least cycle norm over nontrivial elements.
    pub cycle_norm: Option<usize>,
}

impl GroupSummary {
    fn from_elements(mut elements: Vec<Permutation>) -> GroupSummary {
        elements.sort();
        let motion = elements
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| p.motion())
            .min();
        let cycle_norm = elements
            .iter()
            .filter(|p| !p.is_identity())
            .map(|p| p.cycle_norm())
            .min();
        GroupSummary {
            order: elements.len() as u64,
            truncated: false,
            elements: Some(elements),
            motion,
            cycle_norm,
        }
    }

    pub fn require_elements(&self) -> Result<&[Permutation]> {
        self.elements
            .as_deref()
            .filter(|_| !self.truncated)
            .ok_or(Error::ElementsRequired)
    }

    /// Nontrivial elements in enumeration order.
    pub fn nontrivial(&self) -> Result<Vec<&Permutation>> {
        Ok(self
            .require_elements()?
            .iter()
            .filter(|p| !p.is_identity())
            .collect())
    }

    pub fn to_json(&self, g: &RootedGraph, include_elements: bool) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "order": self.order,
            "truncated": self.truncated,
            "motion": self.motion,
            "cycle_norm": self.cycle_norm,
        });
        if include_elements {
            if let Some(elements) = &self.elements {
                obj["elements"] = serde_json::json!(elements
                    .iter()
                    .map(|p| p.to_name_map(g))
                    .collect::<Vec<_>>());
            }
        }
        obj
    }
}

enum SearchGoal {
    /// Collect every automorphism up to the cap.
    Collect { cap: u64 },
    /// Stop at the first nontrivial automorphism.
    FirstNontrivial,
    /// Stop at the first automorphism (used with constrained pivot images,
    /// where any hit is already nontrivial).
    First,
}

/// Backtracking automorphism search over a fixed assignment order (BFS from
/// the pivot). Prunes by degree, by distance to the pivot against distance
/// to the pivot's image, and by label compatibility when a coloring is
/// given: vertices may only map to vertices whose assigned label agrees.
struct Search<'a> {
    g: &'a RootedGraph,
    coloring: Option<&'a Coloring>,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    dist_from_pivot: Vec<Option<usize>>,
    dist_cache: HashMap<usize, Vec<Option<usize>>>,
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Permutation>,
    goal: SearchGoal,
    done: bool,
    hit_cap: bool,
}

const UNSET: usize = usize::MAX;

fn bfs_dist(g: &RootedGraph, start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.len()];
    dist[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(dist[v].unwrap() + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

impl<'a> Search<'a> {
    fn new(
        g: &'a RootedGraph,
        pivot: usize,
        coloring: Option<&'a Coloring>,
        goal: SearchGoal,
    ) -> Search<'a> {
        // assignment order: BFS from the pivot, then any remaining
        // components in index order
        let mut order = Vec::with_capacity(g.len());
        let mut parent = vec![None; g.len()];
        let mut seen = vec![false; g.len()];
        let mut queue = VecDeque::new();
        let mut starts: Vec<usize> = vec![pivot];
        starts.extend((0..g.len()).filter(|&v| v != pivot));
        for s in starts {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in g.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        queue.push_back(w);
                    }
                }
            }
        }
        Search {
            g,
            coloring,
            order,
            parent,
            dist_from_pivot: bfs_dist(g, pivot),
            dist_cache: HashMap::new(),
            image: vec![UNSET; g.len()],
            used: vec![false; g.len()],
            found: Vec::new(),
            goal,
            done: false,
            hit_cap: false,
        }
    }

    fn labels_agree(&self, u: usize, w: usize) -> bool {
        match self.coloring {
            None => true,
            Some(c) => match (c.label(u), c.label(w)) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            },
        }
    }

    /// Adjacency consistency of mapping u -> w against everything assigned:
    /// every mapped neighbor of u must land in N(w), and the number of
    /// already-used images inside N(w) must match the number of mapped
    /// neighbors of u (so no mapped non-neighbor landed there either).
    fn consistent(&self, u: usize, w: usize) -> bool {
        if self.g.degree(u) != self.g.degree(w) || !self.labels_agree(u, w) {
            return false;
        }
        let mut mapped_nbrs = 0;
        for &x in self.g.neighbors(u) {
            if self.image[x] != UNSET {
                mapped_nbrs += 1;
                if !self.g.are_adjacent(self.image[x], w) {
                    return false;
                }
            }
        }
        let used_in_nw = self
            .g
            .neighbors(w)
            .iter()
            .filter(|&&y| self.used[y])
            .count();
        mapped_nbrs == used_in_nw
    }

    fn dist_ok(&mut self, pos: usize, u: usize, w: usize) -> bool {
        // distance pruning pays for its BFS only when the whole group gets
        // collected; find-first searches die fast on adjacency and labels
        if !matches!(self.goal, SearchGoal::Collect { .. }) {
            return true;
        }
        // the pivot's own candidate is the pivot image
        let pivot_image = if pos == 0 {
            w
        } else {
            self.image[self.order[0]]
        };
        let du = self.dist_from_pivot[u];
        let dist_img = self
            .dist_cache
            .entry(pivot_image)
            .or_insert_with(|| bfs_dist(self.g, pivot_image));
        du == dist_img[w]
    }

    fn emit(&mut self) {
        let perm = Permutation::from_images(self.image.clone()).expect("search yields bijections");
        match self.goal {
            SearchGoal::Collect { cap } => {
                if (self.found.len() as u64) < cap {
                    self.found.push(perm);
                } else {
                    self.hit_cap = true;
                    self.done = true;
                }
            }
            SearchGoal::FirstNontrivial => {
                if !perm.is_identity() {
                    self.found.push(perm);
                    self.done = true;
                }
            }
            SearchGoal::First => {
                self.found.push(perm);
                self.done = true;
            }
        }
    }

    fn assign(&mut self, pos: usize, pivot_candidates: Option<&[usize]>) {
        if self.done {
            return;
        }
        if pos == self.order.len() {
            self.emit();
            return;
        }
        let u = self.order[pos];
        let candidates: Vec<usize> = if pos == 0 {
            pivot_candidates
                .expect("pivot candidates required at position 0")
                .to_vec()
        } else if let Some(p) = self.parent[u] {
            // u's BFS parent is already mapped; candidates sit among the
            // image's neighbors
            self.g.neighbors(self.image[p]).to_vec()
        } else {
            (0..self.g.len()).collect()
        };
        for w in candidates {
            if self.done {
                return;
            }
            if self.used[w] || !self.consistent(u, w) || !self.dist_ok(pos, u, w) {
                continue;
            }
            self.image[u] = w;
            self.used[w] = true;
            self.assign(pos + 1, None);
            self.image[u] = UNSET;
            self.used[w] = false;
        }
    }
}

fn pivot_for(g: &RootedGraph) -> usize {
    g.root().unwrap_or(0)
}

/// Enumerate Aut(g) by backtracking, pruning with degree and pivot-distance
/// invariants. With at most `cap` elements the list is complete and sorted
/// lexicographically by image tuple; past the cap the summary is flagged
/// truncated and carries only the lower bound on the order.
pub fn enumerate_automorphisms(g: &RootedGraph, cap: u64) -> GroupSummary {
    let pivot = pivot_for(g);
    let all: Vec<usize> = (0..g.len()).collect();
    let mut search = Search::new(g, pivot, None, SearchGoal::Collect { cap });
    search.assign(0, Some(&all));
    if search.hit_cap {
        GroupSummary {
            order: search.found.len() as u64,
            truncated: true,
            elements: None,
            motion: None,
            cycle_norm: None,
        }
    } else {
        GroupSummary::from_elements(search.found)
    }
}

/// Enumerate only the automorphisms fixing `v` (the stabilizer), without
/// touching the rest of the group.
pub fn enumerate_stabilizer(g: &RootedGraph, v: usize, cap: u64) -> Result<GroupSummary> {
    let pivot_candidates = [v];
    let mut search = Search::new(g, v, None, SearchGoal::Collect { cap });
    search.assign(0, Some(&pivot_candidates));
    if search.hit_cap {
        return Err(Error::StabilizerTooLarge(cap));
    }
    Ok(GroupSummary::from_elements(search.found))
}

/// Sub-summary of the elements of `summary` fixing `v`. Requires an explicit
/// element list.
pub fn stabilizer(g: &RootedGraph, v: &str, summary: &GroupSummary) -> Result<GroupSummary> {
    let idx = g.vertex_index(v)?;
    let elements: Vec<Permutation> = summary
        .require_elements()?
        .iter()
        .filter(|p| p.apply(idx) == idx)
        .cloned()
        .collect();
    Ok(GroupSummary::from_elements(elements))
}

/// The vertices of B(n) around the decomposition's center, as an induced
/// subgraph rooted at the center. Index order matches name order, so the
/// permutations produced by [`restrict_to_ball`] act on it directly.
pub fn ball_graph(
    g: &RootedGraph,
    dec: &SphereDecomposition,
    n: usize,
) -> (RootedGraph, Vec<usize>) {
    let vertices = dec.ball_vertices(n);
    let (mut ball, map) = g.induced_subgraph(&vertices);
    let center_name = g.vertex_name(dec.center()).to_string();
    ball = ball
        .with_root(&center_name)
        .expect("center is in its own ball");
    (ball, map)
}

/// Restriction of a center-fixing automorphism to B(n). Center-fixing
/// automorphisms preserve distance to the center, hence map each sphere to
/// itself; the restriction is a permutation (indeed an automorphism) of the
/// induced ball graph.
pub fn restrict_to_ball(
    g: &RootedGraph,
    phi: &Permutation,
    dec: &SphereDecomposition,
    n: usize,
) -> Result<Permutation> {
    if phi.size() != g.len() {
        return Err(Error::SizeMismatch {
            got: phi.size(),
            want: g.len(),
        });
    }
    if phi.apply(dec.center()) != dec.center() {
        return Err(Error::MovesCenter(g.vertex_name(dec.center()).to_string()));
    }
    if n > dec.eccentricity() {
        return Err(Error::RadiusOutOfRange {
            radius: n,
            min: 0,
            max: dec.eccentricity(),
        });
    }
    let vertices = dec.ball_vertices(n);
    let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let images = vertices
        .iter()
        .map(|&v| {
            pos.get(&phi.apply(v)).copied().ok_or_else(|| {
                // impossible for distance-preserving maps; defend anyway
                Error::MovesCenter(g.vertex_name(dec.center()).to_string())
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    Permutation::from_images(images)
}

/// Distinct restrictions of the given center-fixing automorphisms to B(n).
pub fn restriction_set(
    g: &RootedGraph,
    elements: &[Permutation],
    dec: &SphereDecomposition,
    n: usize,
) -> Result<Vec<Permutation>> {
    let mut set = BTreeSet::new();
    for phi in elements {
        set.insert(restrict_to_ball(g, phi, dec, n)?);
    }
    Ok(set.into_iter().collect())
}

/// The distinguishing test as a search: find a nontrivial automorphism
/// preserving a total coloring, or report that none exists. Backtracking is
/// restricted to label-and-degree-compatible candidates, so this never
/// requires enumerating the group.
pub fn find_color_preserving_automorphism(
    g: &RootedGraph,
    coloring: &Coloring,
) -> Result<Option<Permutation>> {
    if coloring.len() != g.len() {
        return Err(Error::SizeMismatch {
            got: coloring.len(),
            want: g.len(),
        });
    }
    if !coloring.is_total() {
        return Err(Error::PartialColoring);
    }
    let pivot = pivot_for(g);
    let all: Vec<usize> = (0..g.len()).collect();
    let mut search = Search::new(g, pivot, Some(coloring), SearchGoal::FirstNontrivial);
    search.assign(0, Some(&all));
    Ok(search.found.into_iter().next())
}

/// Search for an automorphism that moves the root while respecting every
/// assigned label of a (possibly partial) coloring: a mapping u -> w is
/// allowed only when the labels of u and w, where both assigned, agree.
/// `None` means every root-moving automorphism is broken by the assigned
/// labels alone, under any completion.
pub fn find_root_moving_preserver(
    g: &RootedGraph,
    coloring: &Coloring,
) -> Result<Option<Permutation>> {
    let root = g.require_root()?;
    if coloring.len() != g.len() {
        return Err(Error::SizeMismatch {
            got: coloring.len(),
            want: g.len(),
        });
    }
    let candidates: Vec<usize> = (0..g.len()).filter(|&v| v != root).collect();
    let mut search = Search::new(g, root, Some(coloring), SearchGoal::First);
    search.assign(0, Some(&candidates));
    Ok(search.found.into_iter().next())
}
