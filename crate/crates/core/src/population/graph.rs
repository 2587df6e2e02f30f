//! Population graphs and their exports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::Field;
use crate::model::BetheNode;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    Bosonic,
    Fermionic,
}

/// A reproduction `from → to` in a direction; `from == to` for a bosonic move inside a family.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub direction: usize,
    pub kind: MoveKind,
    /// Rendered parameter of a sampled bosonic move.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PopulationGraph<F: Field> {
    pub nodes: Vec<BetheNode<F>>,
    pub generic: Vec<bool>,
    pub edges: Vec<Edge>,
    pub seed: usize,
    /// Names for rendering scalars; the last one is the family parameter in symbolic mode.
    pub names: Vec<String>,
}

impl<F: Field> PopulationGraph<F> {
    /// Number of distinct parity sequences among the nodes.
    pub fn parity_count(&self) -> usize {
        let mut v: Vec<_> = self.nodes.iter().map(|n| n.parity.clone()).collect();
        v.sort();
        v.dedup();
        v.len()
    }

    /// Reorders nodes by `(parity, rendering)` and edges lexicographically.
    pub fn canonicalize(&mut self) {
        let keys: Vec<(crate::model::ParitySeq, String)> =
            self.nodes.iter().map(|n| (n.parity.clone(), n.render(&self.names))).collect();
        let mut order: Vec<usize> = (0..self.nodes.len()).collect();
        order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        let mut pos = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        self.nodes = order.iter().map(|&i| self.nodes[i].clone()).collect();
        self.generic = order.iter().map(|&i| self.generic[i]).collect();
        self.seed = pos[self.seed];
        for e in &mut self.edges {
            e.from = pos[e.from];
            e.to = pos[e.to];
        }
        self.edges.sort();
        self.edges.dedup();
    }

    pub fn to_doc(&self) -> GraphDoc {
        GraphDoc {
            params: self.names.clone(),
            seed: self.seed,
            nodes: self
                .nodes
                .iter()
                .zip(&self.generic)
                .enumerate()
                .map(|(id, (n, &generic))| NodeDoc {
                    id,
                    parity: n.parity.signs().to_vec(),
                    y: n.y.iter().map(|p| p.render_in("x", &self.names)).collect(),
                    twist: n.twist.as_ref().map(|t| t.iter().map(|v| v.render(&self.names)).collect()),
                    generic,
                })
                .collect(),
            edges: self.edges.clone(),
        }
    }

    /// GraphViz text with one cluster per parity sequence.
    pub fn to_graphviz(&self) -> String {
        self.to_doc().to_graphviz()
    }
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeDoc {
    pub id: usize,
    pub parity: Vec<i8>,
    pub y: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twist: Option<Vec<String>>,
    pub generic: bool,
}

/// Serializable form of a population graph.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub params: Vec<String>,
    pub seed: usize,
    pub nodes: Vec<NodeDoc>,
    pub edges: Vec<Edge>,
}

impl GraphDoc {
    /// GraphViz text with one cluster per parity sequence.
    pub fn to_graphviz(&self) -> String {
        let mut by_parity: BTreeMap<&[i8], Vec<&NodeDoc>> = BTreeMap::new();
        for n in &self.nodes {
            by_parity.entry(&n.parity).or_default().push(n);
        }
        let mut out = String::from("digraph population {\n  node [shape=box];\n");
        for (k, (par, nodes)) in by_parity.iter().enumerate() {
            let signs: Vec<String> = par.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "  subgraph cluster_{k} {{\n    label=\"s = ({})\";", signs.join(","));
            for n in nodes {
                let _ = writeln!(out, "    n{} [label=\"{}\"];", n.id, escape(&n.y.join(", ")));
            }
            out.push_str("  }\n");
        }
        for e in &self.edges {
            let style = match e.kind {
                MoveKind::Bosonic => "solid",
                MoveKind::Fermionic => "dashed",
            };
            let _ = writeln!(out, "  n{} -> n{} [label=\"{}\", style={style}];", e.from, e.to, e.direction);
        }
        out.push_str("}\n");
        out
    }
}
