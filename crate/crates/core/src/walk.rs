//! Walks as alternating node/edge sequences, and their projections.

use crate::graph::{EdgeId, Graph, NodeId};
use crate::visibility::Visibility;

/// A single node or edge of a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Node(NodeId),
    Edge(EdgeId),
}

impl Element {
    pub fn label(self, g: &Graph) -> String {
        match self {
            Element::Node(v) => g.name(v).to_string(),
            Element::Edge(e) => g.edge_label(e),
        }
    }
}

/// `v_1, e_1, v_2, ..., e_k, v_{k+1}` with `tail(e_i) = v_i` and
/// `head(e_i) = v_{i+1}`. A walk with no edges is empty and consists of one node.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    nodes: Vec<NodeId>,
    edges: Vec<EdgeId>,
}

impl Walk {
    pub fn empty(v: NodeId) -> Self {
        Walk {
            nodes: vec![v],
            edges: Vec::new(),
        }
    }

    /// Builds the walk spelled by a non-empty edge sequence. Returns `None`
    /// if consecutive edges do not meet.
    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Option<Self> {
        let first = *edges.first()?;
        let mut nodes = Vec::with_capacity(edges.len() + 1);
        nodes.push(g.tail(first));
        for &e in edges {
            if g.tail(e) != *nodes.last().unwrap() {
                return None;
            }
            nodes.push(g.head(e));
        }
        Some(Walk {
            nodes,
            edges: edges.to_vec(),
        })
    }

    pub(crate) fn from_parts(nodes: Vec<NodeId>, edges: Vec<EdgeId>) -> Self {
        debug_assert_eq!(nodes.len(), edges.len() + 1);
        Walk { nodes, edges }
    }

    pub fn start(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn end(&self) -> NodeId {
        *self.nodes.last().unwrap()
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        self.nodes.len() == self.edges.len() + 1
            && self
                .edges
                .iter()
                .enumerate()
                .all(|(i, &e)| g.tail(e) == self.nodes[i] && g.head(e) == self.nodes[i + 1])
    }

    /// The full alternating sequence.
    pub fn elements(&self) -> Vec<Element> {
        let mut out = Vec::with_capacity(self.nodes.len() + self.edges.len());
        for (i, &v) in self.nodes.iter().enumerate() {
            out.push(Element::Node(v));
            if let Some(&e) = self.edges.get(i) {
                out.push(Element::Edge(e));
            }
        }
        out
    }

    pub fn node_sequence(&self) -> Vec<Element> {
        self.nodes.iter().map(|&v| Element::Node(v)).collect()
    }

    pub fn edge_sequence(&self) -> Vec<Element> {
        self.edges.iter().map(|&e| Element::Edge(e)).collect()
    }

    /// Subsequence of the elements belonging to `x`.
    pub fn x_subsequence(&self, x: &Visibility) -> Vec<Element> {
        self.elements()
            .into_iter()
            .filter(|&el| x.contains(el))
            .collect()
    }

    pub fn render(&self, g: &Graph) -> String {
        self.elements()
            .into_iter()
            .map(|el| el.label(g))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Whether `needle` occurs contiguously in `haystack`. The empty needle
/// occurs everywhere.
pub fn is_substring<T: PartialEq>(needle: &[T], haystack: &[T]) -> bool {
    needle.is_empty() || haystack.windows(needle.len()).any(|w| w == needle)
}
