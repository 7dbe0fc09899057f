//! Visibility sets over nodes and edges, and the visibility file format.
//!
//! ```text
//! # comment
//! node a
//! edge a b        # first a->b edge
//! edge a b 2      # second parallel a->b edge
//! ```

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, NodeId};
use crate::walk::Element;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Visibility {
    nodes: Vec<bool>,
    edges: Vec<bool>,
}

impl Visibility {
    /// Nothing visible.
    pub fn none(g: &Graph) -> Self {
        Visibility {
            nodes: vec![false; g.node_count()],
            edges: vec![false; g.edge_count()],
        }
    }

    /// Every node and edge visible.
    pub fn all(g: &Graph) -> Self {
        Visibility {
            nodes: vec![true; g.node_count()],
            edges: vec![true; g.edge_count()],
        }
    }

    /// Only the edges visible.
    pub fn all_edges(g: &Graph) -> Self {
        Visibility {
            nodes: vec![false; g.node_count()],
            edges: vec![true; g.edge_count()],
        }
    }

    /// Only the nodes visible.
    pub fn all_nodes(g: &Graph) -> Self {
        Visibility {
            nodes: vec![true; g.node_count()],
            edges: vec![false; g.edge_count()],
        }
    }

    pub fn from_elements(g: &Graph, elements: &[Element]) -> Result<Self> {
        let mut x = Visibility::none(g);
        for &el in elements {
            x.insert(el)?;
        }
        Ok(x)
    }

    pub fn insert(&mut self, el: Element) -> Result<()> {
        match el {
            Element::Node(v) => *self
                .nodes
                .get_mut(v.index())
                .ok_or(Error::NodeOutOfRange(v.index()))? = true,
            Element::Edge(e) => {
                let slot = self.edges.get_mut(e.index()).ok_or_else(|| Error::UnknownEdge {
                    tail: "?".into(),
                    head: "?".into(),
                    ordinal: e.index(),
                })?;
                *slot = true;
            }
        }
        Ok(())
    }

    pub fn contains(&self, el: Element) -> bool {
        match el {
            Element::Node(v) => self.has_node(v),
            Element::Edge(e) => self.has_edge(e),
        }
    }

    pub fn has_node(&self, v: NodeId) -> bool {
        self.nodes.get(v.index()).copied().unwrap_or(false)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.get(e.index()).copied().unwrap_or(false)
    }

    pub fn visible_nodes(&self) -> Vec<NodeId> {
        (0..self.nodes.len())
            .filter(|&i| self.nodes[i])
            .map(|i| NodeId(i as u32))
            .collect()
    }

    pub fn visible_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i])
            .map(|i| EdgeId(i as u32))
            .collect()
    }

    pub fn elements(&self) -> Vec<Element> {
        let mut out: Vec<Element> = self.visible_nodes().into_iter().map(Element::Node).collect();
        out.extend(self.visible_edges().into_iter().map(Element::Edge));
        out
    }

    pub fn node_capacity(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_capacity(&self) -> usize {
        self.edges.len()
    }
}

/// Parses a visibility file against `g`.
pub fn parse_visibility(g: &Graph, text: &str) -> Result<Visibility> {
    let mut x = Visibility::none(g);
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        match tokens.as_slice() {
            ["node", name] => x.insert(Element::Node(g.require_node(name)?))?,
            ["edge", tail, head, rest @ ..] if rest.len() <= 1 => {
                let ordinal = match rest.first() {
                    None => 1,
                    Some(tok) => tok
                        .parse::<usize>()
                        .map_err(|_| parse_err(format!("bad ordinal `{tok}`")))?,
                };
                let u = g.require_node(tail)?;
                let v = g.require_node(head)?;
                let e = g.find_edge(u, v, ordinal).ok_or_else(|| Error::UnknownEdge {
                    tail: tail.to_string(),
                    head: head.to_string(),
                    ordinal,
                })?;
                x.insert(Element::Edge(e))?;
            }
            _ => {
                return Err(parse_err(format!(
                    "expected `node <id>` or `edge <tail> <head> [ordinal]`, found `{line}`"
                )))
            }
        }
    }
    Ok(x)
}
