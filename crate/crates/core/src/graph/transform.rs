use std::collections::HashMap;

use super::{EdgeId, Graph, NodeId};
use crate::error::Result;

/// Bookkeeping for [`node_expansion`].
///
/// Original nodes and edges keep their ids in the expanded graph. Each
/// expanded node `v` gains an out-node `v'` and an internal edge `v -> v'`,
/// appended after the original ids.
#[derive(Clone, Debug, Default)]
pub struct ExpansionMap {
    original_nodes: usize,
    original_edges: usize,
    out_node: Vec<Option<NodeId>>,
    internal: Vec<Option<EdgeId>>,
    // indexed by (internal edge id - original_edges)
    internal_origin: Vec<NodeId>,
}

impl ExpansionMap {
    pub fn original_node_count(&self) -> usize {
        self.original_nodes
    }

    pub fn original_edge_count(&self) -> usize {
        self.original_edges
    }

    /// Number of expanded nodes.
    pub fn len(&self) -> usize {
        self.internal_origin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.internal_origin.is_empty()
    }

    pub fn is_expanded(&self, v: NodeId) -> bool {
        self.internal.get(v.index()).is_some_and(Option::is_some)
    }

    /// `v'` for an expanded `v`.
    pub fn out_node(&self, v: NodeId) -> Option<NodeId> {
        self.out_node.get(v.index()).copied().flatten()
    }

    /// `e_v` for an expanded `v`.
    pub fn internal_edge(&self, v: NodeId) -> Option<EdgeId> {
        self.internal.get(v.index()).copied().flatten()
    }

    /// The original node whose internal edge is `e`, if `e` is internal.
    pub fn origin_of_internal(&self, e: EdgeId) -> Option<NodeId> {
        e.index()
            .checked_sub(self.original_edges)
            .and_then(|i| self.internal_origin.get(i).copied())
    }

    /// Maps a node of the expanded graph back to the original node.
    pub fn original_node(&self, v: NodeId) -> NodeId {
        match v.index().checked_sub(self.original_nodes) {
            Some(i) => self.internal_origin[i],
            None => v,
        }
    }

    /// Edges of the expanded graph that existed before expansion.
    pub fn is_original_edge(&self, e: EdgeId) -> bool {
        e.index() < self.original_edges
    }
}

/// Splits every node of `nodes` into `v -> v'` and moves its out-edges to
/// `v'`. In-edges stay on `v`. Expanded nodes are processed in id order, so the
/// result does not depend on the order of `nodes`.
pub fn node_expansion(g: &Graph, nodes: &[NodeId]) -> Result<(Graph, ExpansionMap)> {
    for &v in nodes {
        g.check_node(v)?;
    }
    let n = g.node_count();
    let m = g.edge_count();
    let mut selected = vec![false; n];
    for &v in nodes {
        selected[v.index()] = true;
    }
    let order: Vec<NodeId> = g.nodes().filter(|v| selected[v.index()]).collect();

    let mut h = Graph::with_capacity(n + order.len(), m + order.len());
    for v in g.nodes() {
        h.add_node(g.name(v).to_string());
    }
    let mut map = ExpansionMap {
        original_nodes: n,
        original_edges: m,
        out_node: vec![None; n],
        internal: vec![None; n],
        internal_origin: Vec::with_capacity(order.len()),
    };
    for &v in &order {
        let mut name = format!("{}'", g.name(v));
        while g.node(&name).is_some() || h.node(&name).is_some() {
            name.push('\'');
        }
        map.out_node[v.index()] = Some(h.add_node(name));
    }
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let tail = map.out_node[u.index()].unwrap_or(u);
        h.add_edge(tail, v);
    }
    for &v in &order {
        let e = h.add_edge(v, map.out_node[v.index()].unwrap());
        map.internal[v.index()] = Some(e);
        map.internal_origin.push(v);
    }
    Ok((h, map))
}

/// Relation between a multigraph and its merged simple graph.
#[derive(Clone, Debug, Default)]
pub struct MultiplicityMap {
    counts: Vec<u32>,
    originals: Vec<Vec<EdgeId>>,
    merged_of: Vec<EdgeId>,
}

impl MultiplicityMap {
    /// Number of parallel originals behind merged edge `e`.
    pub fn count(&self, e: EdgeId) -> u32 {
        self.counts[e.index()]
    }

    /// Original edge ids behind merged edge `e`, smallest first.
    pub fn originals(&self, e: EdgeId) -> &[EdgeId] {
        &self.originals[e.index()]
    }

    /// Merged edge representing original edge `e`.
    pub fn merged(&self, e: EdgeId) -> EdgeId {
        self.merged_of[e.index()]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }
}

/// Collapses parallel edges. Node ids are preserved; merged edges are numbered
/// in order of their smallest original id, which is also their representative.
pub fn merge_parallel_edges(g: &Graph) -> (Graph, MultiplicityMap) {
    let mut h = Graph::with_capacity(g.node_count(), g.edge_count());
    for v in g.nodes() {
        h.add_node(g.name(v).to_string());
    }
    let mut index: HashMap<(NodeId, NodeId), EdgeId> = HashMap::new();
    let mut map = MultiplicityMap {
        counts: Vec::new(),
        originals: Vec::new(),
        merged_of: Vec::with_capacity(g.edge_count()),
    };
    for e in g.edges() {
        let key = g.endpoints(e);
        let merged = *index.entry(key).or_insert_with(|| {
            map.counts.push(0);
            map.originals.push(Vec::new());
            h.add_edge(key.0, key.1)
        });
        map.counts[merged.index()] += 1;
        map.originals[merged.index()].push(e);
        map.merged_of.push(merged);
    }
    (h, map)
}
