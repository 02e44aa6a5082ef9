//! Named small graphs used as the fixed test corpus.

use crate::graph::RootedGraph;

fn build(vertices: Vec<String>, edges: Vec<(String, String)>) -> RootedGraph {
    RootedGraph::from_parts(vertices, edges, None).expect("corpus graph is well-formed")
}

fn verts(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn e(a: usize, b: usize) -> (String, String) {
    (format!("v{a}"), format!("v{b}"))
}

pub fn single_vertex() -> RootedGraph {
    build(verts(1), vec![])
}

pub fn path(n: usize) -> RootedGraph {
    build(verts(n), (0..n - 1).map(|i| e(i, i + 1)).collect())
}

pub fn cycle(n: usize) -> RootedGraph {
    build(verts(n), (0..n).map(|i| e(i, (i + 1) % n)).collect())
}

pub fn complete(n: usize) -> RootedGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push(e(i, j));
        }
    }
    build(verts(n), edges)
}

/// K_{1,leaves}, center v0.
pub fn star(leaves: usize) -> RootedGraph {
    build(verts(leaves + 1), (1..=leaves).map(|i| e(0, i)).collect())
}

pub fn complete_bipartite(a: usize, b: usize) -> RootedGraph {
    let mut edges = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            edges.push(e(i, j));
        }
    }
    build(verts(a + b), edges)
}

/// Tree with a center v0 and one path leg per entry of `legs`.
pub fn spider(legs: &[usize]) -> RootedGraph {
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push(e(prev, next));
            prev = next;
            next += 1;
        }
    }
    build(verts(n), edges)
}

/// K_4 minus an edge.
pub fn diamond() -> RootedGraph {
    build(verts(4), vec![e(0, 1), e(0, 2), e(0, 3), e(1, 2), e(1, 3)])
}

/// Triangle with one pendant vertex.
pub fn paw() -> RootedGraph {
    build(verts(4), vec![e(0, 1), e(1, 2), e(2, 0), e(0, 3)])
}

/// Triangle v0 v1 v2 with horns v3 on v1 and v4 on v2.
pub fn bull() -> RootedGraph {
    build(verts(5), vec![e(0, 1), e(1, 2), e(2, 0), e(1, 3), e(2, 4)])
}

/// C_5 plus one chord: square v1 v2 v3 v4 with apex v0.
pub fn house() -> RootedGraph {
    build(
        verts(5),
        vec![e(0, 1), e(0, 4), e(1, 2), e(2, 3), e(3, 4), e(1, 4)],
    )
}

/// Two triangles sharing vertex v0.
pub fn butterfly() -> RootedGraph {
    build(
        verts(5),
        vec![e(0, 1), e(0, 2), e(1, 2), e(0, 3), e(0, 4), e(3, 4)],
    )
}

/// Triangle with one pendant on each vertex.
pub fn net() -> RootedGraph {
    build(
        verts(6),
        vec![e(0, 1), e(1, 2), e(2, 0), e(0, 3), e(1, 4), e(2, 5)],
    )
}

/// Triangle with two pendants on one vertex.
pub fn cricket() -> RootedGraph {
    build(verts(5), vec![e(0, 1), e(1, 2), e(2, 0), e(0, 3), e(0, 4)])
}

/// Diamond with a pendant on a degree-3 vertex.
pub fn dart() -> RootedGraph {
    build(
        verts(5),
        vec![e(0, 1), e(0, 2), e(0, 3), e(1, 2), e(1, 3), e(0, 4)],
    )
}

/// P_4 plus a dominating vertex.
pub fn gem() -> RootedGraph {
    build(
        verts(5),
        vec![
            e(0, 1),
            e(1, 2),
            e(2, 3),
            e(4, 0),
            e(4, 1),
            e(4, 2),
            e(4, 3),
        ],
    )
}

/// Two adjacent centers, each with two leaves.
pub fn double_star() -> RootedGraph {
    build(verts(6), vec![e(0, 1), e(0, 2), e(0, 3), e(1, 4), e(1, 5)])
}

/// Triangular prism C_3 x K_2.
pub fn prism() -> RootedGraph {
    build(
        verts(6),
        vec![
            e(0, 1),
            e(1, 2),
            e(2, 0),
            e(3, 4),
            e(4, 5),
            e(5, 3),
            e(0, 3),
            e(1, 4),
            e(2, 5),
        ],
    )
}

/// Octahedron K_{2,2,2}.
pub fn octahedron() -> RootedGraph {
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            // antipodal pairs (0,1), (2,3), (4,5) stay non-adjacent
            if !(i / 2 == j / 2) {
                edges.push(e(i, j));
            }
        }
    }
    build(verts(6), edges)
}

/// Smallest-size rigid graph in the corpus: triangle v0 v1 v2 with a pendant
/// v3 on v0 and a path v4-v5 hanging from v1. Trivial automorphism group.
pub fn rigid6() -> RootedGraph {
    build(
        verts(6),
        vec![e(0, 1), e(1, 2), e(2, 0), e(0, 3), e(1, 4), e(4, 5)],
    )
}

/// 3-cube.
pub fn cube() -> RootedGraph {
    let mut edges = Vec::new();
    for i in 0..8usize {
        for bit in 0..3 {
            let j = i ^ (1 << bit);
            if i < j {
                edges.push(e(i, j));
            }
        }
    }
    build(verts(8), edges)
}

pub fn petersen() -> RootedGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(e(i, (i + 1) % 5)); // outer cycle
        edges.push(e(i, i + 5)); // spokes
        edges.push(e(5 + i, 5 + (i + 2) % 5)); // inner pentagram
    }
    build(verts(10), edges)
}

/// The fixed corpus of 30 connected graphs on at most 6 vertices.
pub fn small_corpus() -> Vec<(&'static str, RootedGraph)> {
    vec![
        ("K1", single_vertex()),
        ("K2", complete(2)),
        ("P3", path(3)),
        ("P4", path(4)),
        ("P5", path(5)),
        ("P6", path(6)),
        ("C3", cycle(3)),
        ("C4", cycle(4)),
        ("C5", cycle(5)),
        ("C6", cycle(6)),
        ("K1_3", star(3)),
        ("K1_4", star(4)),
        ("K1_5", star(5)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K6", complete(6)),
        ("K3_3", complete_bipartite(3, 3)),
        ("diamond", diamond()),
        ("paw", paw()),
        ("bull", bull()),
        ("house", house()),
        ("butterfly", butterfly()),
        ("net", net()),
        ("cricket", cricket()),
        ("dart", dart()),
        ("gem", gem()),
        ("spider112", spider(&[1, 1, 2])),
        ("spider113", spider(&[1, 1, 3])),
        ("spider122", spider(&[1, 2, 2])),
        ("rigid6", rigid6()),
    ]
}

/// The small corpus plus larger members (up to 12 vertices) for the
/// preservation-count and motion-bound suites.
pub fn extended_corpus() -> Vec<(&'static str, RootedGraph)> {
    let mut corpus = small_corpus();
    corpus.extend([
        ("spider222", spider(&[2, 2, 2])),
        ("double_star", double_star()),
        ("prism", prism()),
        ("octahedron", octahedron()),
        ("cube", cube()),
        ("petersen", petersen()),
        ("C12", cycle(12)),
    ]);
    corpus
}
