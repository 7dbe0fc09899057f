//! Brute-force reference implementations for small graphs.
//!
//! Everything here enumerates candidate walks explicitly and is exponential.
//! Size guards turn oversized inputs into errors instead of truncating the
//! enumeration, so an oracle answer is always exact.
//!
//! The walk model is enumerated up to a length bound. A bound of `2n` edges is
//! enough to decide safety: if a sequence is unsafe, a walk avoiding it can be
//! assembled from one s-t path with a single breaker path spliced in, and
//! both pieces are paths of length below `n`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{node_expansion, EdgeId, Graph, NodeId};
use crate::visibility::Visibility;
use crate::walk::{is_substring, Element, Walk};

/// Environment variable overriding the edge-count guards.
pub const LIMIT_ENV: &str = "STSAFE_ORACLE_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CandidateKind {
    Paths,
    Trails,
    /// All s-t walks with at most `bound` edges.
    Walks { bound: usize },
    /// Trails of a graph with parallel edges. Parallel copies are
    /// interchangeable, so each sequence of edge classes is produced once.
    MultigraphTrails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateModel {
    pub kind: CandidateKind,
    pub visibility: Option<Visibility>,
}

impl CandidateModel {
    pub fn new(kind: CandidateKind) -> Self {
        CandidateModel {
            kind,
            visibility: None,
        }
    }

    pub fn paths() -> Self {
        Self::new(CandidateKind::Paths)
    }

    pub fn trails() -> Self {
        Self::new(CandidateKind::Trails)
    }

    pub fn walks(bound: usize) -> Self {
        Self::new(CandidateKind::Walks { bound })
    }

    /// Walks with the `2n` bound that decides safety exactly.
    pub fn walks_for(g: &Graph) -> Self {
        Self::walks(2 * g.node_count())
    }

    pub fn multigraph_trails() -> Self {
        Self::new(CandidateKind::MultigraphTrails)
    }

    pub fn with_visibility(mut self, x: Visibility) -> Self {
        self.visibility = Some(x);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest edge count accepted for paths and trails.
    pub max_edges: usize,
    /// Largest edge count accepted for walks.
    pub max_walk_edges: usize,
    pub max_walk_bound: usize,
    /// Enumeration aborts once this many candidates have been produced.
    pub max_candidates: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_edges: 24,
            max_walk_edges: 12,
            max_walk_bound: 40,
            max_candidates: 5_000_000,
        }
    }
}

impl OracleLimits {
    /// Defaults, with both edge guards replaced by `STSAFE_ORACLE_LIMIT` when
    /// it holds an integer. The walk-bound guard is raised to twice that value
    /// if needed so the `2n` bound stays usable.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(n) = std::env::var(LIMIT_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            limits.max_edges = n;
            limits.max_walk_edges = n;
            limits.max_walk_bound = limits.max_walk_bound.max(2 * n);
        }
        limits
    }

    fn check(&self, g: &Graph, kind: CandidateKind) -> Result<()> {
        let m = g.edge_count();
        match kind {
            CandidateKind::Walks { bound } => {
                if m > self.max_walk_edges {
                    return Err(Error::OracleGuard(format!(
                        "walk enumeration allows at most {} edges, graph has {m}",
                        self.max_walk_edges
                    )));
                }
                if bound > self.max_walk_bound {
                    return Err(Error::OracleGuard(format!(
                        "walk bound {bound} exceeds {}",
                        self.max_walk_bound
                    )));
                }
            }
            _ if m > self.max_edges => {
                return Err(Error::OracleGuard(format!(
                    "path and trail enumeration allow at most {} edges, graph has {m}",
                    self.max_edges
                )))
            }
            _ => {}
        }
        Ok(())
    }
}

struct Enumerator<'a> {
    g: &'a Graph,
    t: NodeId,
    kind: CandidateKind,
    limit: usize,
    nodes: Vec<NodeId>,
    edges: Vec<EdgeId>,
    on_path: Vec<bool>,
    used: Vec<bool>,
    out: Vec<Walk>,
}

impl Enumerator<'_> {
    fn earlier_free_copy(&self, v: NodeId, e: EdgeId) -> bool {
        let w = self.g.head(e);
        self.g
            .out_edges(v)
            .iter()
            .take_while(|&&f| f != e)
            .any(|&f| self.g.head(f) == w && !self.used[f.index()])
    }

    fn run(&mut self) -> Result<()> {
        let v = *self.nodes.last().unwrap();
        if v == self.t {
            if self.out.len() >= self.limit {
                return Err(Error::OracleGuard(format!(
                    "more than {} candidates",
                    self.limit
                )));
            }
            self.out.push(Walk::from_parts(self.nodes.clone(), self.edges.clone()));
        }
        if let CandidateKind::Walks { bound } = self.kind {
            if self.edges.len() >= bound {
                return Ok(());
            }
        }
        for &e in self.g.out_edges(v) {
            let w = self.g.head(e);
            match self.kind {
                CandidateKind::Paths if self.on_path[w.index()] => continue,
                CandidateKind::Trails | CandidateKind::MultigraphTrails if self.used[e.index()] => continue,
                // copies are interchangeable: take the first unused one only
                CandidateKind::MultigraphTrails if self.earlier_free_copy(v, e) => continue,
                _ => {}
            }
            let was_on_path = std::mem::replace(&mut self.on_path[w.index()], true);
            let was_used = std::mem::replace(&mut self.used[e.index()], true);
            self.nodes.push(w);
            self.edges.push(e);
            let r = self.run();
            self.nodes.pop();
            self.edges.pop();
            self.used[e.index()] = was_used;
            self.on_path[w.index()] = was_on_path;
            r?;
        }
        Ok(())
    }
}

/// Every candidate s-t walk of the model. For trails and walks a candidate
/// may pass through `t` before ending there.
pub fn enumerate_candidates(g: &Graph, s: NodeId, t: NodeId, model: &CandidateModel) -> Result<Vec<Walk>> {
    enumerate_candidates_with(g, s, t, model, &OracleLimits::from_env())
}

pub fn enumerate_candidates_with(
    g: &Graph,
    s: NodeId,
    t: NodeId,
    model: &CandidateModel,
    limits: &OracleLimits,
) -> Result<Vec<Walk>> {
    g.check_node(s)?;
    g.check_node(t)?;
    limits.check(g, model.kind)?;
    let mut en = Enumerator {
        g,
        t,
        kind: model.kind,
        limit: limits.max_candidates,
        nodes: vec![s],
        edges: Vec::new(),
        on_path: vec![false; g.node_count()],
        used: vec![false; g.edge_count()],
        out: Vec::new(),
    };
    en.on_path[s.index()] = true;
    en.run()?;
    Ok(en.out)
}

/// Which view of a walk safety is judged on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Projection {
    /// The alternating node/edge sequence; safe sequences are walks.
    Full,
    Nodes,
    Edges,
    /// The subsequence of visible elements.
    Visible(Visibility),
}

impl Projection {
    pub fn apply(&self, w: &Walk) -> Vec<Element> {
        match self {
            Projection::Full => w.elements(),
            Projection::Nodes => w.node_sequence(),
            Projection::Edges => w.edge_sequence(),
            Projection::Visible(x) => w.x_subsequence(x),
        }
    }

    /// Projection used to judge `query`: the model's visibility set if any,
    /// otherwise nodes, edges or full depending on what the query contains.
    pub fn infer(model: &CandidateModel, query: &[Element]) -> Self {
        if let Some(x) = &model.visibility {
            return Projection::Visible(x.clone());
        }
        let nodes = query.iter().all(|el| matches!(el, Element::Node(_)));
        let edges = query.iter().all(|el| matches!(el, Element::Edge(_)));
        match (nodes, edges) {
            (true, _) => Projection::Nodes,
            (_, true) => Projection::Edges,
            _ => Projection::Full,
        }
    }
}

/// Whether `query` is a substring of the projection of every candidate.
pub fn oracle_safe(g: &Graph, s: NodeId, t: NodeId, model: &CandidateModel, query: &[Element]) -> Result<bool> {
    let projection = Projection::infer(model, query);
    let walks = enumerate_candidates(g, s, t, model)?;
    Ok(walks
        .iter()
        .all(|w| is_substring(query, &projection.apply(w))))
}

/// All maximal safe non-empty sequences under `projection`, sorted.
///
/// For [`Projection::Full`] only sequences that start and end at a node are
/// considered, so the result is the set of maximal safe walks including
/// single nodes.
pub fn oracle_max_safe(
    g: &Graph,
    s: NodeId,
    t: NodeId,
    model: &CandidateModel,
    projection: &Projection,
) -> Result<Vec<Vec<Element>>> {
    let walks = enumerate_candidates(g, s, t, model)?;
    if walks.is_empty() {
        return Err(Error::Unreachable {
            from: g.name(s).to_string(),
            to: g.name(t).to_string(),
        });
    }
    Ok(max_safe_among(&walks, projection))
}

/// Maximal safe sequences with respect to an explicit, non-empty candidate
/// list. Lets one enumeration serve several projections.
pub fn max_safe_among(candidates: &[Walk], projection: &Projection) -> Vec<Vec<Element>> {
    let set: HashSet<Vec<Element>> = candidates.iter().map(|w| projection.apply(w)).collect();
    let all: Vec<Vec<Element>> = set.into_iter().collect();
    let Some(shortest) = all.iter().min_by_key(|p| p.len()) else {
        return Vec::new();
    };
    let safe = |lo: usize, hi: usize| all.iter().all(|p| is_substring(&shortest[lo..=hi], p));
    let step = if *projection == Projection::Full { 2 } else { 1 };

    // the safe extent from each start never shrinks as the start advances
    let mut found: Vec<Vec<Element>> = Vec::new();
    let mut hi_ok: Option<usize> = None;
    for lo in (0..shortest.len()).step_by(step) {
        let mut hi = match hi_ok {
            Some(h) if h >= lo => h,
            _ => {
                if !safe(lo, lo) {
                    hi_ok = None;
                    continue;
                }
                lo
            }
        };
        while hi + step < shortest.len() && safe(lo, hi + step) {
            hi += step;
        }
        hi_ok = Some(hi);
        found.push(shortest[lo..=hi].to_vec());
    }

    found.sort();
    found.dedup();
    let maximal: Vec<Vec<Element>> = found
        .iter()
        .filter(|a| !found.iter().any(|b| b.len() > a.len() && is_substring(a, b)))
        .cloned()
        .collect();
    maximal
}

fn reaches_avoiding(g: &Graph, s: NodeId, t: NodeId, skip_edge: Option<EdgeId>, skip_node: Option<NodeId>) -> bool {
    if Some(s) == skip_node {
        return false;
    }
    let mut seen = vec![false; g.node_count()];
    let mut stack = vec![s];
    seen[s.index()] = true;
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        for &e in g.out_edges(v) {
            let w = g.head(e);
            if Some(e) != skip_edge && Some(w) != skip_node && !seen[w.index()] {
                seen[w.index()] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// Edges whose removal disconnects `t` from `s`, in id order.
pub fn bridges_by_removal(g: &Graph, s: NodeId, t: NodeId) -> Result<Vec<EdgeId>> {
    g.check_node(s)?;
    g.check_node(t)?;
    if !reaches_avoiding(g, s, t, None, None) {
        return Err(Error::Unreachable {
            from: g.name(s).to_string(),
            to: g.name(t).to_string(),
        });
    }
    Ok(g.edges()
        .filter(|&e| !reaches_avoiding(g, s, t, Some(e), None))
        .collect())
}

/// `s`, `t` and every node whose removal disconnects `t` from `s`, in id order.
pub fn articulation_by_removal(g: &Graph, s: NodeId, t: NodeId) -> Result<Vec<NodeId>> {
    g.check_node(s)?;
    g.check_node(t)?;
    if !reaches_avoiding(g, s, t, None, None) {
        return Err(Error::Unreachable {
            from: g.name(s).to_string(),
            to: g.name(t).to_string(),
        });
    }
    Ok(g.nodes()
        .filter(|&v| v == s || v == t || !reaches_avoiding(g, s, t, None, Some(v)))
        .collect())
}

fn check_detour_input(g: &Graph, u: NodeId, v: NodeId, w: NodeId) -> Result<()> {
    for x in [u, v, w] {
        g.check_node(x)?;
    }
    if u == v || v == w || u == w {
        return Err(Error::NotDistinct);
    }
    let limits = OracleLimits::from_env();
    if g.edge_count() > limits.max_edges {
        return Err(Error::OracleGuard(format!(
            "detour search allows at most {} edges, graph has {}",
            limits.max_edges,
            g.edge_count()
        )));
    }
    Ok(())
}

/// Whether some u-v path visits `w`.
pub fn detour_decide(g: &Graph, u: NodeId, v: NodeId, w: NodeId) -> Result<bool> {
    check_detour_input(g, u, v, w)?;
    fn dfs(g: &Graph, x: NodeId, v: NodeId, w: NodeId, on: &mut Vec<bool>, seen_w: bool) -> bool {
        if x == v {
            return seen_w;
        }
        for &e in g.out_edges(x) {
            let y = g.head(e);
            if on[y.index()] {
                continue;
            }
            on[y.index()] = true;
            let hit = dfs(g, y, v, w, on, seen_w || y == w);
            on[y.index()] = false;
            if hit {
                return true;
            }
        }
        false
    }
    let mut on = vec![false; g.node_count()];
    on[u.index()] = true;
    Ok(dfs(g, u, v, w, &mut on, false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetourMode {
    Edges,
    Nodes,
}

/// A safety question equivalent to the negation of a Detour instance.
#[derive(Clone, Debug)]
pub struct DetourReduction {
    pub graph: Graph,
    pub source: NodeId,
    pub target: NodeId,
    pub visibility: Visibility,
    pub query: Vec<Element>,
}

/// Expands every node of `g`; s-t walks then run from `u` through `e_u` to
/// `v'` through `e_v`, and a walk sees `e_w` (or `w`) exactly when it detours
/// through `w`. Every s-t trail of the expanded graph is a path.
pub fn build_detour_reduction(g: &Graph, u: NodeId, v: NodeId, w: NodeId, mode: DetourMode) -> Result<DetourReduction> {
    check_detour_input(g, u, v, w)?;
    let all: Vec<NodeId> = g.nodes().collect();
    let (h, map) = node_expansion(g, &all)?;
    let internal = |x: NodeId| map.internal_edge(x).expect("every node is expanded");
    let (e_u, e_w, e_v) = (internal(u), internal(w), internal(v));
    let source = h.tail(e_u);
    let target = h.head(e_v);
    let (visible, query) = match mode {
        DetourMode::Edges => (
            vec![Element::Edge(e_u), Element::Edge(e_w), Element::Edge(e_v)],
            vec![Element::Edge(e_u), Element::Edge(e_v)],
        ),
        DetourMode::Nodes => (
            vec![Element::Node(source), Element::Node(h.tail(e_w)), Element::Node(target)],
            vec![Element::Node(source), Element::Node(target)],
        ),
    };
    let visibility = Visibility::from_elements(&h, &visible)?;
    Ok(DetourReduction {
        graph: h,
        source,
        target,
        visibility,
        query,
    })
}
