use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::RootedGraph;
use crate::perm::Permutation;

pub const WHITE: u32 = 0;
pub const BLACK: u32 = 1;

/// Partial assignment of labels to the vertices of a fixed graph, with a
/// frozen mask: frozen vertices may not be recolored by later stages.
/// 2-colorings use labels 0 (white) and 1 (black).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    labels: Vec<Option<u32>>,
    frozen: Vec<bool>,
}

impl Coloring {
    pub fn new(n: usize) -> Coloring {
        Coloring {
            labels: vec![None; n],
            frozen: vec![false; n],
        }
    }

    /// Total coloring from explicit labels, nothing frozen.
    pub fn total(labels: Vec<u32>) -> Coloring {
        Coloring {
            frozen: vec![false; labels.len()],
            labels: labels.into_iter().map(Some).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> Option<u32> {
        self.labels[v]
    }

    pub fn is_frozen(&self, v: usize) -> bool {
        self.frozen[v]
    }

    pub fn set(&mut self, v: usize, label: u32) {
        debug_assert!(!self.frozen[v], "recoloring frozen vertex");
        self.labels[v] = Some(label);
    }

    pub fn set_frozen(&mut self, v: usize, label: u32) {
        debug_assert!(!self.frozen[v], "recoloring frozen vertex");
        self.labels[v] = Some(label);
        self.frozen[v] = true;
    }

    pub fn freeze(&mut self, v: usize) {
        debug_assert!(self.labels[v].is_some(), "freezing unlabeled vertex");
        self.frozen[v] = true;
    }

    pub fn try_set(&mut self, g: &RootedGraph, v: usize, label: u32) -> Result<()> {
        if self.frozen[v] {
            return Err(Error::FrozenVertex(g.vertex_name(v).to_string()));
        }
        self.labels[v] = Some(label);
        Ok(())
    }

    pub fn is_total(&self) -> bool {
        self.labels.iter().all(|l| l.is_some())
    }

    pub fn assigned(&self) -> usize {
        self.labels.iter().filter(|l| l.is_some()).count()
    }

    /// Fill every unlabeled vertex with `label`, leaving it unfrozen.
    pub fn fill(&mut self, label: u32) {
        for l in &mut self.labels {
            if l.is_none() {
                *l = Some(label);
            }
        }
    }

    /// True when some vertex and its image both carry labels that differ.
    /// For total colorings this is exactly "phi does not preserve the
    /// coloring"; for partial ones it is breaking witnessed by assigned
    /// labels alone.
    pub fn breaks(&self, phi: &Permutation) -> bool {
        (0..self.len()).any(|v| {
            let w = phi.apply(v);
            v != w
                && matches!(
                    (self.labels[v], self.labels[w]),
                    (Some(a), Some(b)) if a != b
                )
        })
    }

    pub fn labels_json(&self, g: &RootedGraph) -> BTreeMap<String, u32> {
        self.labels
            .iter()
            .enumerate()
            .filter_map(|(v, l)| l.map(|l| (g.vertex_name(v).to_string(), l)))
            .collect()
    }

    pub fn to_json(&self, g: &RootedGraph) -> serde_json::Value {
        let frozen: Vec<String> = (0..self.len())
            .filter(|&v| self.frozen[v])
            .map(|v| g.vertex_name(v).to_string())
            .collect();
        serde_json::json!({
            "labels": self.labels_json(g),
            "frozen": frozen,
        })
    }

    pub fn from_json(g: &RootedGraph, value: &serde_json::Value) -> Result<Coloring> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::ColoringJson("expected an object".into()))?;
        let labels = obj
            .get("labels")
            .and_then(|v| v.as_object())
            .ok_or_else(|| Error::ColoringJson("missing `labels` object".into()))?;
        let mut coloring = Coloring::new(g.len());
        for (name, label) in labels {
            let v = g.vertex_index(name)?;
            let l = label
                .as_u64()
                .ok_or_else(|| Error::ColoringJson(format!("label of `{name}` not an integer")))?;
            coloring.labels[v] = Some(l as u32);
        }
        if let Some(frozen) = obj.get("frozen") {
            let list = frozen
                .as_array()
                .ok_or_else(|| Error::ColoringJson("`frozen` must be an array".into()))?;
            for name in list {
                let name = name
                    .as_str()
                    .ok_or_else(|| Error::ColoringJson("frozen entry not a string".into()))?;
                let v = g.vertex_index(name)?;
                if coloring.labels[v].is_none() {
                    return Err(Error::ColoringJson(format!(
                        "frozen vertex `{name}` has no label"
                    )));
                }
                coloring.frozen[v] = true;
            }
        }
        Ok(coloring)
    }
}
