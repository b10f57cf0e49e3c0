//! The crystal graph of `B_l` as DOT or as a serializable document.

use std::fmt::Write;

use serde::Serialize;

use crate::crystal::Crystal;
use crate::element::CrystalElement;
use crate::error::Result;
use crate::letter::Letter;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub id: usize,
    pub coords: String,
    /// Letter name at level 1.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub letter: Option<Letter>,
}

/// `source --color--> target` means `f̃_color(source) = target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub color: u8,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Graph {
    pub level: u32,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

const COLORS: [&str; 3] = ["red", "blue", "darkgreen"];

impl Graph {
    pub fn new(level: u32) -> Result<Graph> {
        let elements = CrystalElement::enumerate(level)?;
        let nodes = elements
            .iter()
            .enumerate()
            .map(|(id, b)| Node {
                id,
                coords: b.to_string(),
                letter: (level == 1).then(|| Letter::from_element(b).ok()).flatten(),
            })
            .collect();
        let mut edges = Vec::new();
        for (source, b) in elements.iter().enumerate() {
            for color in 0..3 {
                if let Some(c) = b.lower(color) {
                    // enumerate() returns sorted elements.
                    let target = elements.binary_search(&c).expect("closed under f̃");
                    edges.push(Edge { color, source, target });
                }
            }
        }
        Ok(Graph { level, nodes, edges })
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph B{} {{\n", self.level);
        for n in &self.nodes {
            let label = n.letter.map_or(n.coords.clone(), |l| l.token().to_string());
            writeln!(out, "  n{} [label=\"{label}\"];", n.id).unwrap();
        }
        for e in &self.edges {
            writeln!(
                out,
                "  n{} -> n{} [color={}, label=\"{}\"];",
                e.source, e.target, COLORS[e.color as usize], e.color
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}
