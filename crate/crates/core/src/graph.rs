use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph with an optional distinguished root.
///
/// Vertex identifiers are opaque strings. Internally vertices are numbered
/// by the lexicographic order of their names, so index order and name order
/// agree everywhere.
#[derive(Clone, Debug)]
pub struct RootedGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    root: Option<usize>,
}

impl RootedGraph {
    /// Build a graph from vertex names, edges over names, and an optional
    /// root name. Rejects duplicate vertices, self-loops, unknown endpoints
    /// and an unknown root. Parallel edges collapse.
    pub fn from_parts(
        vertices: Vec<String>,
        edges: Vec<(String, String)>,
        root: Option<String>,
    ) -> Result<RootedGraph> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut names = vertices;
        names.sort();
        for pair in names.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0].clone()));
            }
        }
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut adj = vec![Vec::new(); names.len()];
        for (a, b) in &edges {
            let u = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.clone()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.clone()))?;
            if u == v {
                return Err(Error::SelfLoop(a.clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let root = match root {
            Some(r) => Some(
                *index
                    .get(&r)
                    .ok_or_else(|| Error::UnknownVertex(r.clone()))?,
            ),
            None => None,
        };
        Ok(RootedGraph {
            names,
            index,
            adj,
            root,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn require_root(&self) -> Result<usize> {
        self.root.ok_or(Error::MissingRoot)
    }

    pub fn with_root(mut self, name: &str) -> Result<RootedGraph> {
        self.root = Some(self.vertex_index(name)?);
        Ok(self)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.len() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let dec = bfs_decompose_index(self, 0);
        dec.dist.iter().all(|d| d.is_some())
    }

    /// Induced subgraph on the given vertex indices. Names carry over, so a
    /// coloring of the subgraph transfers back by name. Returns the subgraph
    /// together with the map from subgraph index to original index.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (RootedGraph, Vec<usize>) {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let names: Vec<String> = keep.iter().map(|&v| self.names[v].clone()).collect();
        let index: HashMap<String, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if let Some(&j) = pos.get(&w) {
                    adj[i].push(j);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let root = self.root.and_then(|r| pos.get(&r).copied());
        (
            RootedGraph {
                names,
                index,
                adj,
                root,
            },
            keep,
        )
    }

    pub fn to_json(&self) -> GraphJson {
        let mut edges: Vec<[String; 2]> = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (self.names[u].clone(), self.names[v].clone());
                if a <= b {
                    [a, b]
                } else {
                    [b, a]
                }
            })
            .collect();
        edges.sort();
        GraphJson {
            vertices: self.names.clone(),
            edges,
            root: self.root.map(|r| self.names[r].clone()),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<RootedGraph> {
        RootedGraph::from_parts(
            json.vertices.clone(),
            json.edges
                .iter()
                .map(|e| (e[0].clone(), e[1].clone()))
                .collect(),
            json.root.clone(),
        )
    }

    /// Canonical interchange form: vertices sorted, edges endpoint-sorted and
    /// list-sorted. Byte-identical across runs.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<RootedGraph> {
        let json: GraphJson =
            serde_json::from_str(s).map_err(|e| Error::GraphJson(e.to_string()))?;
        RootedGraph::from_json(&json)
    }
}

/// Graph JSON interchange format shared by every CLI command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub root: Option<String>,
}

/// Vertices of the center's component grouped by distance from the center.
#[derive(Clone, Debug)]
pub struct SphereDecomposition {
    center: usize,
    layers: Vec<Vec<usize>>,
    dist: Vec<Option<usize>>,
}

impl SphereDecomposition {
    pub fn center(&self) -> usize {
        self.center
    }

    /// Maximum realized radius.
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// The sphere S(r); empty for r beyond the eccentricity.
    pub fn sphere(&self, r: usize) -> &[usize] {
        if r < self.layers.len() {
            &self.layers[r]
        } else {
            &[]
        }
    }

    pub fn sphere_size(&self, r: usize) -> usize {
        self.sphere(r).len()
    }

    /// |B(r)| = sum of |S(i)| for i <= r.
    pub fn ball_size(&self, r: usize) -> usize {
        self.layers
            .iter()
            .take(r + 1)
            .map(|layer| layer.len())
            .sum()
    }

    /// Vertices at distance <= r, in index order.
    pub fn ball_vertices(&self, r: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .layers
            .iter()
            .take(r + 1)
            .flat_map(|layer| layer.iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Distance from the center; `None` when unreachable.
    pub fn dist(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }
}

fn bfs_decompose_index(g: &RootedGraph, center: usize) -> SphereDecomposition {
    let mut dist: Vec<Option<usize>> = vec![None; g.len()];
    let mut layers: Vec<Vec<usize>> = vec![vec![center]];
    dist[center] = Some(0);
    let mut queue = VecDeque::from([center]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                if layers.len() == d + 1 {
                    layers.push(Vec::new());
                }
                layers[d + 1].push(w);
                queue.push_back(w);
            }
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    SphereDecomposition {
        center,
        layers,
        dist,
    }
}

/// Distance layering from `center`. Covers only the center's connected
/// component; layer r holds exactly the vertices at distance r.
pub fn bfs_decompose(g: &RootedGraph, center: &str) -> Result<SphereDecomposition> {
    let c = g.vertex_index(center)?;
    Ok(bfs_decompose_index(g, c))
}

/// Same as [`bfs_decompose`] for a vertex already resolved to an index.
pub fn bfs_decompose_at(g: &RootedGraph, center: usize) -> SphereDecomposition {
    bfs_decompose_index(g, center)
}

/// The sphere S(n) partitioned by connected component of G minus B(n-1):
/// two vertices share a group iff some path avoiding B(n-1) joins them.
#[derive(Clone, Debug)]
pub struct SphereComponents {
    pub radius: usize,
    /// Disjoint nonempty groups, each sorted, ordered by least vertex.
    pub groups: Vec<Vec<usize>>,
}

fn component_labels_outside_ball(
    g: &RootedGraph,
    dec: &SphereDecomposition,
    n: usize,
) -> Vec<Option<usize>> {
    // Label every vertex outside B(n-1) with a component id of G \ B(n-1).
    let removed = |v: usize| matches!(dec.dist(v), Some(d) if d < n);
    let mut comp: Vec<Option<usize>> = vec![None; g.len()];
    let mut next = 0;
    for start in 0..g.len() {
        if removed(start) || comp[start].is_some() {
            continue;
        }
        comp[start] = Some(next);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !removed(w) && comp[w].is_none() {
                    comp[w] = Some(next);
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    comp
}

pub fn sphere_components(g: &RootedGraph, center: &str, n: usize) -> Result<SphereComponents> {
    let dec = bfs_decompose(g, center)?;
    sphere_components_at(g, &dec, n)
}

pub fn sphere_components_at(
    g: &RootedGraph,
    dec: &SphereDecomposition,
    n: usize,
) -> Result<SphereComponents> {
    if n < 1 || n > dec.eccentricity() {
        return Err(Error::RadiusOutOfRange {
            radius: n,
            min: 1,
            max: dec.eccentricity(),
        });
    }
    let comp = component_labels_outside_ball(g, dec, n);
    let mut by_comp: HashMap<usize, Vec<usize>> = HashMap::new();
    for &v in dec.sphere(n) {
        by_comp.entry(comp[v].unwrap()).or_default().push(v);
    }
    let mut groups: Vec<Vec<usize>> = by_comp.into_values().collect();
    for group in &mut groups {
        group.sort_unstable();
    }
    groups.sort();
    Ok(SphereComponents { radius: n, groups })
}

/// One node of the sphere-component containment tree.
#[derive(Clone, Debug)]
pub struct ComponentNode {
    /// Distance of the node's sphere from the center; 0 for the root node.
    pub radius: usize,
    /// The group's vertices; just the center for the root node.
    pub vertices: Vec<usize>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ComponentTree {
    pub center: usize,
    /// Node 0 is the root; children order follows group order per radius.
    pub nodes: Vec<ComponentNode>,
}

/// Containment tree over sphere components at the given radii: the parent of
/// a group at radius r_{j+1} is the group at radius r_j whose component of
/// G \ B(r_j - 1) contains it; first-radius groups hang off the center.
pub fn component_tree(g: &RootedGraph, center: &str, radii: &[usize]) -> Result<ComponentTree> {
    let dec = bfs_decompose(g, center)?;
    if radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonMonotoneRadii);
    }
    let mut nodes = vec![ComponentNode {
        radius: 0,
        vertices: vec![dec.center()],
        parent: None,
        children: Vec::new(),
    }];
    // component id -> node id, for the previous radius in the list
    let mut prev_comp_of: Vec<Option<usize>> = Vec::new();
    let mut prev_node_of_comp: HashMap<usize, usize> = HashMap::new();
    let mut first = true;
    for &r in radii {
        let groups = sphere_components_at(g, &dec, r)?.groups;
        let comp = component_labels_outside_ball(g, &dec, r);
        let mut node_of_comp: HashMap<usize, usize> = HashMap::new();
        for group in groups {
            let parent = if first {
                0
            } else {
                // all group members lie in one component at the previous
                // radius (containment refines outward)
                let pid = prev_comp_of[group[0]].expect("vertex outside previous ball");
                debug_assert!(group.iter().all(|&v| prev_comp_of[v] == Some(pid)));
                prev_node_of_comp[&pid]
            };
            let cid = comp[group[0]].unwrap();
            let id = nodes.len();
            nodes.push(ComponentNode {
                radius: r,
                vertices: group,
                parent: Some(parent),
                children: Vec::new(),
            });
            nodes[parent].children.push(id);
            node_of_comp.insert(cid, id);
        }
        prev_comp_of = comp;
        prev_node_of_comp = node_of_comp;
        first = false;
    }
    Ok(ComponentTree {
        center: dec.center(),
        nodes,
    })
}

fn check_eps(eps: f64) -> Result<()> {
    if eps <= 0.0 || !eps.is_finite() {
        return Err(Error::BadEps(eps));
    }
    Ok(())
}

/// Radii n in [2, limit] whose sphere satisfies
/// |S(n)| * (1 + eps) * log2(n) <= n, evaluated in double precision with a
/// strict non-strict comparison: exact ties qualify, no tolerance slack.
/// Radii beyond the eccentricity are ignored; n = 1 is excluded because
/// log2(1) = 0.
pub fn sphere_bound_radii(dec: &SphereDecomposition, eps: f64, limit: usize) -> Result<Vec<usize>> {
    check_eps(eps)?;
    let sizes: Vec<usize> = dec.layers().iter().map(|l| l.len()).collect();
    Ok(sphere_bound_radii_from_sizes(&sizes, eps, limit))
}

pub fn sphere_bound_radii_from_sizes(sizes: &[usize], eps: f64, limit: usize) -> Vec<usize> {
    let max = limit.min(sizes.len().saturating_sub(1));
    (2..=max)
        .filter(|&n| (sizes[n] as f64) * (1.0 + eps) * (n as f64).log2() <= n as f64)
        .collect()
}

/// Ball analogue: radii n in [2, limit] with
/// |B(n)| * (2 + eps) * log2(n) <= n^2.
pub fn ball_bound_radii(dec: &SphereDecomposition, eps: f64, limit: usize) -> Result<Vec<usize>> {
    check_eps(eps)?;
    let sizes: Vec<usize> = dec.layers().iter().map(|l| l.len()).collect();
    Ok(ball_bound_radii_from_sizes(&sizes, eps, limit))
}

pub fn ball_bound_radii_from_sizes(sizes: &[usize], eps: f64, limit: usize) -> Vec<usize> {
    let max = limit.min(sizes.len().saturating_sub(1));
    let mut ball = 0usize;
    let mut out = Vec::new();
    for (n, &s) in sizes.iter().enumerate().take(max + 1) {
        ball += s;
        if n >= 2 && (ball as f64) * (2.0 + eps) * (n as f64).log2() <= (n as f64) * (n as f64) {
            out.push(n);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(vertices: &[&str], edges: &[(&str, &str)]) -> RootedGraph {
        RootedGraph::from_parts(
            vertices.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
            None,
        )
        .unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            RootedGraph::from_parts(vec![], vec![], None),
            Err(Error::EmptyGraph)
        ));
        assert!(matches!(
            RootedGraph::from_parts(vec!["a".into(), "a".into()], vec![], None),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            RootedGraph::from_parts(vec!["a".into()], vec![("a".into(), "a".into())], None),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            RootedGraph::from_parts(vec!["a".into()], vec![("a".into(), "b".into())], None),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(
            RootedGraph::from_parts(vec!["a".into()], vec![], Some("b".into())),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn bfs_path_and_singleton() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let dec = bfs_decompose(&g, "b").unwrap();
        assert_eq!(dec.layers().len(), 2);
        assert_eq!(dec.sphere(0), &[g.vertex_index("b").unwrap()]);
        assert_eq!(dec.sphere_size(1), 2);

        let single = graph(&["v"], &[]);
        let dec = bfs_decompose(&single, "v").unwrap();
        assert_eq!(dec.layers().len(), 1);
        assert_eq!(dec.eccentricity(), 0);
    }

    #[test]
    fn bfs_unknown_vertex_names_identifier() {
        let g = graph(&["a"], &[]);
        match bfs_decompose(&g, "zz") {
            Err(Error::UnknownVertex(name)) => assert_eq!(name, "zz"),
            other => panic!("expected UnknownVertex, got {other:?}"),
        }
    }

    #[test]
    fn sphere_components_k4_and_two_rays() {
        // K_4: after removing B(0) the other three vertices stay mutually
        // adjacent: one group of size 3.
        let g = graph(
            &["a", "b", "c", "d"],
            &[
                ("a", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "d"),
            ],
        );
        let sc = sphere_components(&g, "a", 1).unwrap();
        assert_eq!(sc.groups.len(), 1);
        assert_eq!(sc.groups[0].len(), 3);

        // Two-sided path truncated at radius 5: two rays give 2 singleton
        // groups at n = 3.
        let verts: Vec<String> = (-5i32..=5).map(|i| format!("{i:+03}")).collect();
        let edges: Vec<(String, String)> = (-5i32..5)
            .map(|i| (format!("{i:+03}"), format!("{:+03}", i + 1)))
            .collect();
        let g = RootedGraph::from_parts(verts, edges, None).unwrap();
        let sc = sphere_components(&g, "+00", 3).unwrap();
        assert_eq!(sc.groups.len(), 2);
        assert!(sc.groups.iter().all(|gr| gr.len() == 1));
    }

    #[test]
    fn sphere_components_rejects_out_of_range() {
        let g = graph(&["a", "b"], &[("a", "b")]);
        assert!(sphere_components(&g, "a", 0).is_err());
        assert!(sphere_components(&g, "a", 2).is_err());
    }

    #[test]
    fn component_tree_path_and_empty() {
        let verts: Vec<String> = (-4i32..=4).map(|i| format!("{i:+03}")).collect();
        let edges: Vec<(String, String)> = (-4i32..4)
            .map(|i| (format!("{i:+03}"), format!("{:+03}", i + 1)))
            .collect();
        let g = RootedGraph::from_parts(verts, edges, None).unwrap();
        let tree = component_tree(&g, "+00", &[1, 2, 3]).unwrap();
        // root plus two chains of length 3
        assert_eq!(tree.nodes.len(), 1 + 6);
        assert_eq!(tree.nodes[0].children.len(), 2);
        for &c in &tree.nodes[0].children {
            let mut node = c;
            let mut depth = 1;
            while let Some(&child) = tree.nodes[node].children.first() {
                node = child;
                depth += 1;
            }
            assert_eq!(depth, 3);
        }

        let empty = component_tree(&g, "+00", &[]).unwrap();
        assert_eq!(empty.nodes.len(), 1);

        assert!(matches!(
            component_tree(&g, "+00", &[2, 2]),
            Err(Error::NonMonotoneRadii)
        ));
    }

    #[test]
    fn sphere_bound_examples() {
        // Synthetic layering with |S(1024)| = 51: 51 * 2 * 10 = 1020 <= 1024.
        let mut sizes = vec![1usize; 1025];
        sizes[1024] = 51;
        let radii = sphere_bound_radii_from_sizes(&sizes, 1.0, 1024);
        assert!(radii.contains(&1024));

        // Grid-like |S(n)| = n never qualifies at eps = 1.
        let sizes: Vec<usize> = (0..=64).collect::<Vec<_>>();
        let sizes = {
            let mut s = sizes;
            s[0] = 1;
            s
        };
        assert!(sphere_bound_radii_from_sizes(&sizes, 1.0, 64).is_empty());

        // Two-sided path |S(n)| = 2: n = 16 qualifies exactly at eps = 1,
        // n = 15 does not.
        let mut sizes = vec![2usize; 65];
        sizes[0] = 1;
        let radii = sphere_bound_radii_from_sizes(&sizes, 1.0, 64);
        assert!(radii.contains(&16));
        assert!(!radii.contains(&15));
    }

    #[test]
    fn ball_bound_examples() {
        // |B(64)| = 113: 113 * 3 * 6 = 2034 <= 4096.
        let mut sizes = vec![0usize; 65];
        sizes[0] = 1;
        sizes[64] = 112; // ball at 64 = 113
        let radii = ball_bound_radii_from_sizes(&sizes, 1.0, 64);
        assert!(radii.contains(&64));

        // limit 1 -> empty (n >= 2 required)
        let radii = ball_bound_radii_from_sizes(&[1, 2, 2], 1.0, 1);
        assert!(radii.is_empty());
    }

    #[test]
    fn bounds_monotone_in_eps() {
        let sizes = vec![1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2];
        let strict = sphere_bound_radii_from_sizes(&sizes, 1.0, 16);
        let loose = sphere_bound_radii_from_sizes(&sizes, 0.5, 16);
        for n in strict {
            assert!(loose.contains(&n));
        }
    }

    #[test]
    fn json_round_trip_is_canonical() {
        let g = RootedGraph::from_parts(
            vec!["b".into(), "a".into(), "c".into()],
            vec![("c".into(), "a".into()), ("b".into(), "a".into())],
            Some("a".into()),
        )
        .unwrap();
        let s = g.to_json_string();
        let g2 = RootedGraph::from_json_str(&s).unwrap();
        assert_eq!(s, g2.to_json_string());
        assert_eq!(g2.vertex_names(), &["a", "b", "c"]);
    }
}
