use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::RootedGraph;

/// A permutation of the vertex indices of a fixed graph, stored in one-line
/// notation: `images[v]` is the image of vertex `v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from one-line images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &w in &images {
            if w >= n || seen[w] {
                return Err(Error::NotBijection);
            }
            seen[w] = true;
        }
        Ok(Permutation { images })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: other.images.iter().map(|&w| self.images[w]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w] = v;
        }
        Permutation { images }
    }

    /// Cycle decomposition covering the whole vertex set; fixed points appear
    /// as 1-cycles. Each cycle starts at its least element and cycles are
    /// ordered by first element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.images[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.images[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Vertices moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(v, &w)| v != w)
            .map(|(v, _)| v)
            .collect()
    }

    /// Number of moved vertices.
    pub fn motion(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(v, &w)| v != w)
            .count()
    }

    /// Sum over cycles of (length - 1); equals |V| minus the number of
    /// cycles, counting fixed points as 1-cycles.
    pub fn cycle_norm(&self) -> usize {
        self.size() - self.cycles().len()
    }

    /// True when the mapping preserves adjacency on `g`. A bijection that
    /// maps edges to edges also maps non-edges to non-edges (edge counts
    /// match), so checking edges suffices.
    pub fn is_automorphism(&self, g: &RootedGraph) -> bool {
        if self.size() != g.len() {
            return false;
        }
        for v in 0..g.len() {
            for &w in g.neighbors(v) {
                if w > v {
                    continue;
                }
                if !g.are_adjacent(self.images[v], self.images[w]) {
                    return false;
                }
            }
        }
        true
    }

    /// Serialize as a vertex-name -> vertex-name map.
    pub fn to_name_map(&self, g: &RootedGraph) -> BTreeMap<String, String> {
        self.images
            .iter()
            .enumerate()
            .map(|(v, &w)| (g.vertex_name(v).to_string(), g.vertex_name(w).to_string()))
            .collect()
    }

    pub fn from_name_map(g: &RootedGraph, map: &BTreeMap<String, String>) -> Result<Permutation> {
        let mut images = vec![usize::MAX; g.len()];
        for (from, to) in map {
            let v = g.vertex_index(from)?;
            let w = g.vertex_index(to)?;
            images[v] = w;
        }
        if images.contains(&usize::MAX) {
            return Err(Error::NotBijection);
        }
        Permutation::from_images(images)
    }

    /// Cycle notation over vertex names, fixed points omitted; "()" for the
    /// identity.
    pub fn cycle_string(&self, g: &RootedGraph) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            if cycle.len() < 2 {
                continue;
            }
            s.push('(');
            for (i, &v) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(g.vertex_name(v));
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }
}
