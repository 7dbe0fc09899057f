//! s-t bridges, s-t articulation points and their components.
//!
//! The bridges are found with a single incremental sweep over the residual
//! graph of one unit of s-t flow. Fix an s-t path `P` and search from `s`
//! along every non-`P` edge forwards and every `P` edge backwards. Since no
//! residual edge leaves the searched region and `P` can only cross its
//! boundary outwards, the `P` nodes reached always form a prefix of `P`, and
//! the `P` edge leaving that prefix is the only edge of `G` leaving the region:
//! the next s-t bridge. Its head seeds the next round; visited marks are never
//! reset, so every edge is scanned a constant number of times.
//!
//! The region reached before bridge `b_i` is unlocked is exactly the set of
//! nodes reachable from `s` in `G \ b_i`, so the nodes first reached in round
//! `i` form the bridge component `C_i`.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, NodeId};

const UNREACHED: u32 = 0;

/// Ordered s-t bridges `b_1..b_k` and the bridge components `C_1..C_{k+1}`.
///
/// Component indices are 1-based. Nodes not reachable from the source carry
/// no component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutDecomposition {
    source: NodeId,
    target: NodeId,
    bridges: Vec<EdgeId>,
    component: Vec<u32>,
    entrances: Vec<NodeId>,
    exits: Vec<NodeId>,
}

impl CutDecomposition {
    pub(crate) fn from_parts(
        source: NodeId,
        target: NodeId,
        bridges: Vec<EdgeId>,
        component: Vec<u32>,
        entrances: Vec<NodeId>,
        exits: Vec<NodeId>,
    ) -> Self {
        debug_assert_eq!(entrances.len(), bridges.len() + 1);
        debug_assert_eq!(exits.len(), bridges.len() + 1);
        CutDecomposition {
            source,
            target,
            bridges,
            component,
            entrances,
            exits,
        }
    }

    pub fn source(&self) -> NodeId {
        self.source
    }

    pub fn target(&self) -> NodeId {
        self.target
    }

    pub fn bridges(&self) -> &[EdgeId] {
        &self.bridges
    }

    /// Number of bridges, `|B|`.
    pub fn len(&self) -> usize {
        self.bridges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bridges.is_empty()
    }

    /// `b_i` for 1-based `i`.
    pub fn bridge(&self, i: usize) -> EdgeId {
        self.bridges[i - 1]
    }

    /// Number of components, `|B| + 1`.
    pub fn component_count(&self) -> usize {
        self.bridges.len() + 1
    }

    /// 1-based component of `v`, or `None` if `v` is unreachable from the source.
    pub fn component(&self, v: NodeId) -> Option<usize> {
        match self.component[v.index()] {
            UNREACHED => None,
            c => Some(c as usize),
        }
    }

    pub(crate) fn raw_components(&self) -> &[u32] {
        &self.component
    }

    /// Entrance of `C_i`: the source for `i = 1`, otherwise `head(b_{i-1})`.
    pub fn entrance(&self, i: usize) -> NodeId {
        self.entrances[i - 1]
    }

    /// Exit of `C_i`: `tail(b_i)`, or the target for the last component.
    pub fn exit(&self, i: usize) -> NodeId {
        self.exits[i - 1]
    }

    /// `tail(b_i)`.
    pub fn bridge_tail(&self, i: usize) -> NodeId {
        self.exits[i - 1]
    }

    /// `head(b_i)`.
    pub fn bridge_head(&self, i: usize) -> NodeId {
        self.entrances[i]
    }

    /// Whether `head(b_{i-1}) = tail(b_i)`, for `2 <= i <= |B|`.
    pub fn adjacent(&self, i: usize) -> bool {
        self.entrances[i - 1] == self.exits[i - 1]
    }

    /// Members of component `i`, in node id order.
    pub fn members(&self, i: usize) -> Vec<NodeId> {
        self.component
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == i)
            .map(|(v, _)| NodeId(v as u32))
            .collect()
    }
}

/// Adjacency needed by the sweep. Lets the articulation search run on the
/// fully node-expanded graph without building it.
trait Topology {
    fn node_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn tail(&self, e: EdgeId) -> NodeId;
    fn head(&self, e: EdgeId) -> NodeId;
    fn for_each_out(&self, v: NodeId, f: impl FnMut(EdgeId));
}

impl Topology for Graph {
    fn node_count(&self) -> usize {
        Graph::node_count(self)
    }
    fn edge_count(&self) -> usize {
        Graph::edge_count(self)
    }
    fn tail(&self, e: EdgeId) -> NodeId {
        Graph::tail(self, e)
    }
    fn head(&self, e: EdgeId) -> NodeId {
        Graph::head(self, e)
    }
    fn for_each_out(&self, v: NodeId, f: impl FnMut(EdgeId)) {
        self.out_edges(v).iter().copied().for_each(f);
    }
}

/// Every node `v` split into `v -> v'`. Ids follow [`crate::graph::node_expansion`]:
/// `v'` is `n + v` and the internal edge of `v` is `m + v`.
struct FullyExpanded<'a>(&'a Graph);

impl Topology for FullyExpanded<'_> {
    fn node_count(&self) -> usize {
        2 * self.0.node_count()
    }
    fn edge_count(&self) -> usize {
        self.0.edge_count() + self.0.node_count()
    }
    fn tail(&self, e: EdgeId) -> NodeId {
        let (n, m) = (self.0.node_count(), self.0.edge_count());
        match e.index().checked_sub(m) {
            Some(v) => NodeId(v as u32),
            None => NodeId((n + self.0.tail(e).index()) as u32),
        }
    }
    fn head(&self, e: EdgeId) -> NodeId {
        let (n, m) = (self.0.node_count(), self.0.edge_count());
        match e.index().checked_sub(m) {
            Some(v) => NodeId((n + v) as u32),
            None => self.0.head(e),
        }
    }
    fn for_each_out(&self, v: NodeId, mut f: impl FnMut(EdgeId)) {
        let (n, m) = (self.0.node_count(), self.0.edge_count());
        match v.index().checked_sub(n) {
            Some(orig) => self.0.out_edges(NodeId(orig as u32)).iter().copied().for_each(f),
            None => f(EdgeId((m + v.index()) as u32)),
        }
    }
}

/// Computes the s-t bridges of `g` in visit order together with the bridge
/// components, in `O(n + m)` time.
pub fn bridge_decomposition(g: &Graph, s: NodeId, t: NodeId) -> Result<CutDecomposition> {
    g.check_node(s)?;
    g.check_node(t)?;
    if s == t {
        return Err(Error::SourceIsTarget(g.name(s).to_string()));
    }
    sweep(g, s, t).ok_or_else(|| Error::Unreachable {
        from: g.name(s).to_string(),
        to: g.name(t).to_string(),
    })
}

fn sweep<T: Topology>(g: &T, s: NodeId, t: NodeId) -> Option<CutDecomposition> {
    let path = find_path(g, s, t)?;

    let n = g.node_count();
    // position of each path node: s is 0, head(path[k]) is k + 1
    let mut path_pos = vec![u32::MAX; n];
    path_pos[s.index()] = 0;
    let mut on_path = vec![false; g.edge_count()];
    for (k, &e) in path.iter().enumerate() {
        path_pos[g.head(e).index()] = k as u32 + 1;
        on_path[e.index()] = true;
    }

    let mut component = vec![UNREACHED; n];
    let mut bridges = Vec::new();
    let mut current: u32 = 1;
    let mut frontier: usize = 0;
    let mut stack = Vec::new();
    let mut last_round = Vec::new();

    component[s.index()] = current;
    stack.push(s);
    loop {
        last_round.clear();
        while let Some(u) = stack.pop() {
            last_round.push(u);
            let mut visit = |v: NodeId, stack: &mut Vec<NodeId>| {
                if component[v.index()] == UNREACHED {
                    component[v.index()] = current;
                    let p = path_pos[v.index()];
                    if p != u32::MAX {
                        frontier = frontier.max(p as usize);
                    }
                    stack.push(v);
                }
            };
            g.for_each_out(u, |e| {
                if !on_path[e.index()] {
                    visit(g.head(e), &mut stack);
                }
            });
            let p = path_pos[u.index()];
            if p != u32::MAX && p > 0 {
                visit(g.tail(path[p as usize - 1]), &mut stack);
            }
        }
        if component[t.index()] != UNREACHED {
            break;
        }
        let bridge = path[frontier];
        bridges.push(bridge);
        current += 1;
        let head = g.head(bridge);
        debug_assert_eq!(component[head.index()], UNREACHED);
        component[head.index()] = current;
        frontier = path_pos[head.index()] as usize;
        stack.push(head);
    }

    // The residual search stops once t is found; the last component also owns
    // whatever is reachable only along the remaining path edges.
    stack.extend(last_round.iter().copied());
    while let Some(u) = stack.pop() {
        g.for_each_out(u, |e| {
            let v = g.head(e);
            if component[v.index()] == UNREACHED {
                component[v.index()] = current;
                stack.push(v);
            }
        });
    }

    let mut entrances = Vec::with_capacity(bridges.len() + 1);
    let mut exits = Vec::with_capacity(bridges.len() + 1);
    entrances.push(s);
    for &b in &bridges {
        exits.push(g.tail(b));
        entrances.push(g.head(b));
    }
    exits.push(t);
    Some(CutDecomposition {
        source: s,
        target: t,
        bridges,
        component,
        entrances,
        exits,
    })
}

/// Shortest s-t path as an edge list, by BFS.
fn find_path<T: Topology>(g: &T, s: NodeId, t: NodeId) -> Option<Vec<EdgeId>> {
    let mut parent: Vec<Option<EdgeId>> = vec![None; g.node_count()];
    let mut seen = vec![false; g.node_count()];
    let mut queue = std::collections::VecDeque::new();
    seen[s.index()] = true;
    queue.push_back(s);
    while let Some(u) = queue.pop_front() {
        if u == t {
            break;
        }
        g.for_each_out(u, |e| {
            let v = g.head(e);
            if !seen[v.index()] {
                seen[v.index()] = true;
                parent[v.index()] = Some(e);
                queue.push_back(v);
            }
        });
    }
    if !seen[t.index()] {
        return None;
    }
    let mut path = Vec::new();
    let mut v = t;
    while let Some(e) = parent[v.index()] {
        path.push(e);
        v = g.tail(e);
    }
    path.reverse();
    Some(path)
}

/// Ordered s-t articulation points `a_1..a_k` and their components.
///
/// The source and target always count as articulation points. Component `i`
/// holds the nodes between `a_{i-1}` and `a_i`, with `a_i` as its exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArticulationDecomposition {
    points: Vec<NodeId>,
    component: Vec<u32>,
}

impl ArticulationDecomposition {
    pub fn points(&self) -> &[NodeId] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn component(&self, v: NodeId) -> Option<usize> {
        match self.component[v.index()] {
            UNREACHED => None,
            c => Some(c as usize),
        }
    }

    pub fn is_point(&self, v: NodeId) -> bool {
        self.points.contains(&v)
    }
}

/// s-t articulation points via the s-t bridges of the fully node-expanded
/// graph, taken from `s` to `t'` so that the internal edges of `s` and `t` are
/// candidates too.
pub fn articulation_decomposition(
    g: &Graph,
    s: NodeId,
    t: NodeId,
) -> Result<ArticulationDecomposition> {
    g.check_node(s)?;
    g.check_node(t)?;
    if s == t {
        return Err(Error::SourceIsTarget(g.name(s).to_string()));
    }
    let n = g.node_count();
    let m = g.edge_count();
    let target = NodeId((n + t.index()) as u32);
    let dec = sweep(&FullyExpanded(g), s, target).ok_or_else(|| Error::Unreachable {
        from: g.name(s).to_string(),
        to: g.name(t).to_string(),
    })?;

    // internal_before[i] = internal bridges among b_1..b_{i-1}
    let mut internal_before = Vec::with_capacity(dec.len() + 2);
    let mut points = Vec::new();
    internal_before.push(0u32);
    for &b in dec.bridges() {
        internal_before.push(points.len() as u32);
        if let Some(v) = b.index().checked_sub(m) {
            points.push(NodeId(v as u32));
        }
    }
    internal_before.push(points.len() as u32);

    let component = g
        .nodes()
        .map(|v| match dec.component(v) {
            None => UNREACHED,
            Some(c) => internal_before[c] + 1,
        })
        .collect();
    Ok(ArticulationDecomposition { points, component })
}
