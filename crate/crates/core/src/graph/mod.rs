//! Directed multigraph with interned node names and dense ids.
//!
//! Nodes and edges are identified by dense integer ids in `[0, n)` and
//! `[0, m)`. Parallel edges are distinct ids with identical endpoints, and
//! self-loops are allowed. Both adjacency directions are kept, so every edge
//! appears exactly once in its tail's out-list and once in its head's in-list.

mod io;
mod reach;
mod transform;

use std::collections::HashMap;
use std::fmt;

pub use io::{parse_graph, write_edge_list};
pub use reach::{reach, Direction};
pub use transform::{merge_parallel_edges, node_expansion, ExpansionMap, MultiplicityMap};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    ids: HashMap<String, NodeId>,
    tails: Vec<NodeId>,
    heads: Vec<NodeId>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(nodes: usize, edges: usize) -> Self {
        Graph {
            names: Vec::with_capacity(nodes),
            ids: HashMap::with_capacity(nodes),
            tails: Vec::with_capacity(edges),
            heads: Vec::with_capacity(edges),
            out_edges: Vec::with_capacity(nodes),
            in_edges: Vec::with_capacity(nodes),
        }
    }

    /// Builds a graph from `(tail, head)` name pairs, interning names in order
    /// of first appearance.
    pub fn from_named_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Self {
        let mut g = Graph::new();
        for (u, v) in edges {
            let u = g.intern(u.as_ref());
            let v = g.intern(v.as_ref());
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph on nodes named `"0"..n` from index pairs.
    pub fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::with_capacity(n, edges.len());
        for i in 0..n {
            g.add_node(i.to_string());
        }
        for &(u, v) in edges {
            g.add_edge(NodeId(u as u32), NodeId(v as u32));
        }
        g
    }

    /// Adds a node with the given name. If the name is already present the
    /// existing id is returned.
    pub fn intern(&mut self, name: &str) -> NodeId {
        if let Some(&id) = self.ids.get(name) {
            return id;
        }
        self.add_node(name.to_string())
    }

    /// Adds a fresh node. Panics if the name is taken.
    pub fn add_node(&mut self, name: String) -> NodeId {
        let id = NodeId(self.names.len() as u32);
        let prev = self.ids.insert(name.clone(), id);
        assert!(prev.is_none(), "duplicate node name `{name}`");
        self.names.push(name);
        self.out_edges.push(Vec::new());
        self.in_edges.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, tail: NodeId, head: NodeId) -> EdgeId {
        assert!(tail.index() < self.node_count() && head.index() < self.node_count());
        let id = EdgeId(self.tails.len() as u32);
        self.tails.push(tail);
        self.heads.push(head);
        self.out_edges[tail.index()].push(id);
        self.in_edges[head.index()].push(id);
        id
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.tails.len()
    }

    #[inline]
    pub fn tail(&self, e: EdgeId) -> NodeId {
        self.tails[e.index()]
    }

    #[inline]
    pub fn head(&self, e: EdgeId) -> NodeId {
        self.heads[e.index()]
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (NodeId, NodeId) {
        (self.tail(e), self.head(e))
    }

    #[inline]
    pub fn out_edges(&self, v: NodeId) -> &[EdgeId] {
        &self.out_edges[v.index()]
    }

    #[inline]
    pub fn in_edges(&self, v: NodeId) -> &[EdgeId] {
        &self.in_edges[v.index()]
    }

    pub fn name(&self, v: NodeId) -> &str {
        &self.names[v.index()]
    }

    pub fn node(&self, name: &str) -> Option<NodeId> {
        self.ids.get(name).copied()
    }

    pub fn require_node(&self, name: &str) -> Result<NodeId> {
        self.node(name)
            .ok_or_else(|| Error::UnknownNode(name.to_string()))
    }

    pub fn check_node(&self, v: NodeId) -> Result<()> {
        if v.index() < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange(v.index()))
        }
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        (0..self.node_count() as u32).map(NodeId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edge_count() as u32).map(EdgeId)
    }

    /// Edges with the same endpoints as `e`, in id order (including `e`).
    pub fn parallel_edges(&self, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        let (u, v) = self.endpoints(e);
        self.out_edges(u)
            .iter()
            .copied()
            .filter(move |&f| self.head(f) == v)
    }

    /// 1-based position of `e` among its parallel edges, and the size of that
    /// parallel class.
    pub fn parallel_ordinal(&self, e: EdgeId) -> (usize, usize) {
        let mut ordinal = 0;
        let mut total = 0;
        for f in self.parallel_edges(e) {
            total += 1;
            if f <= e {
                ordinal += 1;
            }
        }
        (ordinal, total)
    }

    /// The `ordinal`-th (1-based) edge from `tail` to `head`.
    pub fn find_edge(&self, tail: NodeId, head: NodeId, ordinal: usize) -> Option<EdgeId> {
        if ordinal == 0 {
            return None;
        }
        self.out_edges(tail)
            .iter()
            .copied()
            .filter(|&f| self.head(f) == head)
            .nth(ordinal - 1)
    }

    /// `(tail,head)`, with a `#k` suffix when the edge has parallel copies.
    pub fn edge_label(&self, e: EdgeId) -> String {
        let (u, v) = self.endpoints(e);
        let (ordinal, total) = self.parallel_ordinal(e);
        if total > 1 {
            format!("({},{})#{}", self.name(u), self.name(v), ordinal)
        } else {
            format!("({},{})", self.name(u), self.name(v))
        }
    }
}
