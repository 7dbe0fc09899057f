//! Maximal safe walks for the s-t walks model and its relatives.
//!
//! A walk breaker for a run `L` of bridges is a detour between two consecutive
//! bridges of `L` that avoids the first and last bridge of `L`. Breakers are
//! summarised by the range `[start, end]` of bridge indices they traverse; a
//! breaker that traverses no bridge sits between `b_{i-1}` and `b_i` and is
//! recorded as `(i, i - 1)`. With this convention a breaker `(a, b)` makes the
//! interval `[p, q]` unsafe exactly when `p < a` and `q > b`.
//!
//! Only the inclusion-minimal breakers matter. A minimal breaker of non-zero
//! length uses a single backward edge from `C_{j+1}` into `C_i` whose head can
//! still reach the exit of `C_i` inside `C_i`; it covers bridges `b_i..b_j`.
//! The staircase is computed in two linear passes: the tightest end per start,
//! then a reverse sweep discarding dominated entries. Consecutive staircase
//! steps delimit the maximal safe intervals.

use crate::decomposition::{bridge_decomposition, CutDecomposition};
use crate::error::{Error, Result};
use crate::graph::{merge_parallel_edges, node_expansion, EdgeId, ExpansionMap, Graph, MultiplicityMap, NodeId};
use crate::linear::{has_trail_breaker, project_to_nodes, single_node_solutions, SafeInterval, Solution};
use crate::visibility::Visibility;
use crate::walk::{Element, Walk};

/// Interval representation used by the walk models; size `O(|B|)`.
pub type CompactSolution = Solution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BreakerKind {
    ZeroLength,
    NonZero,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Breaker {
    pub start: usize,
    pub end: usize,
    pub kind: BreakerKind,
    /// Backward edge realising a non-zero breaker.
    pub witness: Option<EdgeId>,
}

impl Breaker {
    pub fn zero_length(start: usize) -> Self {
        Breaker {
            start,
            end: start - 1,
            kind: BreakerKind::ZeroLength,
            witness: None,
        }
    }

    pub fn non_zero(start: usize, end: usize, witness: Option<EdgeId>) -> Self {
        debug_assert!(start <= end);
        Breaker {
            start,
            end,
            kind: BreakerKind::NonZero,
            witness,
        }
    }

    /// Whether this breaker proves `iv` unsafe.
    pub fn breaks(&self, iv: SafeInterval) -> bool {
        iv.lo < self.start && iv.hi > self.end
    }

    /// Whether every interval broken by `other` is also broken by `self`.
    pub fn dominates(&self, other: &Breaker) -> bool {
        other.start <= self.start && self.end <= other.end
    }
}

/// Minimal breakers ordered by start; starts and ends both strictly increase.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BreakerStaircase {
    breakers: Vec<Breaker>,
}

impl BreakerStaircase {
    pub fn new(breakers: Vec<Breaker>) -> Self {
        debug_assert!(breakers
            .windows(2)
            .all(|w| w[0].start < w[1].start && w[0].end < w[1].end));
        BreakerStaircase { breakers }
    }

    pub fn breakers(&self) -> &[Breaker] {
        &self.breakers
    }

    pub fn len(&self) -> usize {
        self.breakers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.breakers.is_empty()
    }

    pub fn ranges(&self) -> Vec<(usize, usize)> {
        self.breakers.iter().map(|b| (b.start, b.end)).collect()
    }
}

/// Marks every node that reaches the exit of its own component without
/// leaving the component. One backward search per component, `O(n + m)` total.
fn mark_exit_reachable(g: &Graph, dec: &CutDecomposition) -> Vec<bool> {
    let comps = dec.raw_components();
    let mut marked = vec![false; g.node_count()];
    let mut stack = Vec::new();
    for i in 1..=dec.component_count() {
        let exit = dec.exit(i);
        if comps[exit.index()] as usize != i {
            continue;
        }
        marked[exit.index()] = true;
        stack.push(exit);
        while let Some(v) = stack.pop() {
            for &e in g.in_edges(v) {
                let u = g.tail(e);
                if comps[u.index()] as usize == i && !marked[u.index()] {
                    marked[u.index()] = true;
                    stack.push(u);
                }
            }
        }
    }
    marked
}

/// Core of the staircase computation. `zero_length[i]` (for `2 <= i <= |B|`)
/// flags a zero-length breaker between `b_{i-1}` and `b_i`; `accept` filters
/// the bridges a non-zero breaker may traverse.
fn staircase(
    g: &Graph,
    dec: &CutDecomposition,
    zero_length: &[bool],
    marked: &[bool],
    accept: &dyn Fn(usize) -> bool,
) -> BreakerStaircase {
    let k = dec.len();
    if k < 2 {
        return BreakerStaircase::default();
    }

    // end[i] == k means nothing starts at i
    let mut end = vec![k; k + 1];
    let mut witness: Vec<Option<EdgeId>> = vec![None; k + 1];
    for i in 2..=k {
        if zero_length[i] {
            end[i] = i - 1;
        }
    }

    // run_end[i]: largest j such that b_i..b_j are all accepted (i - 1 if none)
    let mut run_end = vec![0usize; k + 1];
    for i in (1..=k).rev() {
        run_end[i] = match accept(i) {
            false => i - 1,
            true if i < k && run_end[i + 1] > i => run_end[i + 1],
            true => i,
        };
    }

    let comps = dec.raw_components();
    for e in g.edges() {
        let (u, v) = g.endpoints(e);
        let cu = comps[u.index()] as usize;
        let cv = comps[v.index()] as usize;
        if cu == 0 || cv == 0 || cu <= cv {
            continue;
        }
        let (i, j) = (cv, cu - 1);
        if i < 2 || j > k - 1 || !marked[v.index()] || j > run_end[i] {
            continue;
        }
        if j < end[i] {
            end[i] = j;
            witness[i] = Some(e);
        }
    }

    let mut out = Vec::new();
    let mut min = k;
    for i in (2..=k).rev() {
        if end[i] < min {
            out.push(if end[i] + 1 == i {
                Breaker::zero_length(i)
            } else {
                Breaker::non_zero(i, end[i], witness[i])
            });
            min = end[i];
        }
    }
    out.reverse();
    BreakerStaircase::new(out)
}

/// Inclusion-minimal walk breakers of `g` for the bridge sequence of `dec`.
///
/// `accept(i)` decides whether a non-zero breaker may traverse bridge `b_i`;
/// breakers through a rejected bridge are discarded before domination pruning.
/// Zero-length breakers traverse no bridge and are always kept. Pass `|_| true`
/// for the plain s-t walks model.
pub fn minimal_walk_breakers(
    g: &Graph,
    dec: &CutDecomposition,
    accept: impl Fn(usize) -> bool,
) -> BreakerStaircase {
    let k = dec.len();
    let mut zero = vec![false; k + 1];
    for (i, z) in zero.iter_mut().enumerate().skip(2) {
        *z = has_trail_breaker(g, dec, i);
    }
    let marked = mark_exit_reachable(g, dec);
    staircase(g, dec, &zero, &marked, &accept)
}

/// Maximal safe intervals delimited by consecutive staircase steps:
/// `[1, end_1], [start_1, end_2], ..., [start_k, |B|]`.
pub fn compact_max_safe_walks(stairs: &BreakerStaircase, dec: &CutDecomposition) -> CompactSolution {
    let k = dec.len();
    let mut intervals = Vec::with_capacity(stairs.len() + 1);
    if k > 0 {
        let mut lo = 1;
        for b in stairs.breakers() {
            intervals.push(SafeInterval::new(lo, b.end));
            lo = b.start;
        }
        intervals.push(SafeInterval::new(lo, k));
        intervals.dedup();
    }
    Solution::new(dec.bridges().to_vec(), intervals, Vec::new())
}

/// Walks of a compact solution, produced lazily in interval order followed by
/// the singletons. Total work is linear in the emitted length.
pub fn solution_walks<'a>(
    cs: &'a CompactSolution,
    dec: &'a CutDecomposition,
) -> impl Iterator<Item = Walk> + 'a {
    let intervals = cs.intervals().iter().map(move |iv| {
        let mut nodes = Vec::with_capacity(iv.len() + 1);
        nodes.push(dec.bridge_tail(iv.lo));
        for i in iv.lo..=iv.hi {
            nodes.push(dec.bridge_head(i));
        }
        Walk::from_parts(nodes, cs.interval_edges(*iv).to_vec())
    });
    intervals.chain(cs.singletons().iter().map(|&v| Walk::empty(v)))
}

pub fn expand_solution(cs: &CompactSolution, dec: &CutDecomposition) -> Vec<Walk> {
    solution_walks(cs, dec).collect()
}

/// A walk through the witness backward edge of a non-zero breaker `(a, b)`
/// that never traverses `b_{a-1}, ..., b_{b+1}` consecutively. Its length is
/// below `2n`.
pub fn witness_walk(g: &Graph, dec: &CutDecomposition, breaker: &Breaker) -> Option<Walk> {
    let back = breaker.witness?;
    let (a, b) = (breaker.start, breaker.end);
    if a < 2 || b + 1 > dec.len() {
        return None;
    }
    let comps = dec.raw_components();
    let (u, v) = g.endpoints(back);
    let blocked = dec.bridge(b + 1);
    let mut edges = bfs_path(g, dec.source(), u, |e| e != blocked, |_| true)?;
    edges.push(back);
    edges.extend(bfs_path(g, v, dec.exit(a), |_| true, |x| comps[x.index()] as usize == a)?);
    edges.push(dec.bridge(a));
    edges.extend(bfs_path(g, dec.bridge_head(a), dec.target(), |_| true, |_| true)?);
    Walk::from_edges(g, &edges)
}

fn bfs_path(
    g: &Graph,
    from: NodeId,
    to: NodeId,
    edge_ok: impl Fn(EdgeId) -> bool,
    node_ok: impl Fn(NodeId) -> bool,
) -> Option<Vec<EdgeId>> {
    let mut parent: Vec<Option<EdgeId>> = vec![None; g.node_count()];
    let mut seen = vec![false; g.node_count()];
    let mut queue = std::collections::VecDeque::from([from]);
    seen[from.index()] = true;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &e in g.out_edges(x) {
            let y = g.head(e);
            if !seen[y.index()] && edge_ok(e) && node_ok(y) {
                seen[y.index()] = true;
                parent[y.index()] = Some(e);
                queue.push_back(y);
            }
        }
    }
    if !seen[to.index()] {
        return None;
    }
    let mut path = Vec::new();
    let mut x = to;
    while x != from {
        let e = parent[x.index()]?;
        path.push(e);
        x = g.tail(e);
    }
    path.reverse();
    Some(path)
}

/// A graph reduced to edge visibility: visible nodes are expanded, and the
/// bridge decomposition keeps only visible bridges, with the components around
/// each dropped bridge merged.
#[derive(Clone, Debug)]
pub struct VisibleRestriction {
    pub graph: Graph,
    pub expansion: ExpansionMap,
    /// Decomposition of the expanded graph before merging.
    pub full: CutDecomposition,
    /// Decomposition whose bridge sequence is the X-bridge sequence.
    pub merged: CutDecomposition,
    visible: Vec<bool>,
}

impl VisibleRestriction {
    pub fn is_visible(&self, e: EdgeId) -> bool {
        self.visible[e.index()]
    }

    /// The element of the original graph represented by edge `e` of the
    /// expanded graph.
    pub fn element(&self, e: EdgeId) -> Element {
        match self.expansion.origin_of_internal(e) {
            Some(v) => Element::Node(v),
            None => Element::Edge(e),
        }
    }

    /// Label in the original graph; internal edges render as `(v,v')`.
    pub fn edge_label(&self, original: &Graph, e: EdgeId) -> String {
        if self.expansion.is_original_edge(e) {
            original.edge_label(e)
        } else {
            self.graph.edge_label(e)
        }
    }
}

pub fn restrict_visibility(g: &Graph, s: NodeId, t: NodeId, x: &Visibility) -> Result<VisibleRestriction> {
    g.check_node(s)?;
    g.check_node(t)?;
    if x.node_capacity() != g.node_count() || x.edge_capacity() != g.edge_count() {
        return Err(Error::VisibilityMismatch);
    }
    let (h, map) = node_expansion(g, &x.visible_nodes())?;
    let target = map.out_node(t).unwrap_or(t);
    let full = bridge_decomposition(&h, s, target).map_err(|err| match err {
        Error::Unreachable { .. } => Error::Unreachable {
            from: g.name(s).to_string(),
            to: g.name(t).to_string(),
        },
        other => other,
    })?;
    let visible: Vec<bool> = h
        .edges()
        .map(|e| if map.is_original_edge(e) { x.has_edge(e) } else { true })
        .collect();

    // new index of old component c: 1 + visible bridges among b_1..b_{c-1}
    let mut renumber = Vec::with_capacity(full.component_count() + 1);
    renumber.push(0u32);
    let mut kept = Vec::new();
    let mut entrances = vec![full.source()];
    let mut exits = Vec::new();
    for (idx, &b) in full.bridges().iter().enumerate() {
        renumber.push(kept.len() as u32 + 1);
        if visible[b.index()] {
            kept.push(b);
            exits.push(full.bridge_tail(idx + 1));
            entrances.push(full.bridge_head(idx + 1));
        }
    }
    renumber.push(kept.len() as u32 + 1);
    exits.push(full.target());
    let component = full
        .raw_components()
        .iter()
        .map(|&c| renumber[c as usize])
        .collect();
    let merged = CutDecomposition::from_parts(full.source(), full.target(), kept, component, entrances, exits);
    Ok(VisibleRestriction {
        graph: h,
        expansion: map,
        full,
        merged,
        visible,
    })
}

/// Maximal safe X-sequences, as intervals of the X-bridge sequence.
///
/// A zero-length X-breaker inside merged component `C'_i` is a visible edge
/// with both ends in `C'_i` whose head still reaches the exit of `C'_i`.
/// Non-zero breakers are found exactly as in the plain model, since every
/// bridge left in the merged sequence is visible.
pub fn x_max_safe_walks(r: &VisibleRestriction) -> CompactSolution {
    let dec = &r.merged;
    let g = &r.graph;
    let k = dec.len();
    let marked = mark_exit_reachable(g, dec);
    let comps = dec.raw_components();
    let mut zero = vec![false; k + 1];
    for e in g.edges() {
        if !r.is_visible(e) {
            continue;
        }
        let (u, v) = g.endpoints(e);
        let c = comps[u.index()] as usize;
        if c >= 2 && c <= k && comps[v.index()] as usize == c && marked[v.index()] {
            zero[c] = true;
        }
    }
    let stairs = staircase(g, dec, &zero, &marked, &|_| true);
    compact_max_safe_walks(&stairs, dec)
}

/// Node-safety for trails in a multigraph, on top of the merged simple graph.
#[derive(Clone, Debug)]
pub struct MultigraphTrailSolution {
    pub merged: Graph,
    pub multiplicity: MultiplicityMap,
    pub decomposition: CutDecomposition,
    pub staircase: BreakerStaircase,
    /// Intervals over the bridge sequence of the merged graph, with singletons.
    pub solution: CompactSolution,
    pub node_sequences: Vec<Vec<NodeId>>,
}

/// A walk breaker of the merged graph only breaks trails of the multigraph
/// when every bridge it traverses has a parallel copy; breakers traversing no
/// bridge always do.
pub fn multigraph_trail_solution(g: &Graph, s: NodeId, t: NodeId) -> Result<MultigraphTrailSolution> {
    let (merged, multiplicity) = merge_parallel_edges(g);
    let dec = bridge_decomposition(&merged, s, t)?;
    let stairs = minimal_walk_breakers(&merged, &dec, |i| multiplicity.count(dec.bridge(i)) >= 2);
    let solution = compact_max_safe_walks(&stairs, &dec);
    let art = crate::decomposition::articulation_decomposition(&merged, s, t)?;
    let singles = single_node_solutions(&merged, &art, &solution);
    let solution = solution.with_singletons(singles);
    let node_sequences = project_to_nodes(&solution, &dec);
    Ok(MultigraphTrailSolution {
        merged,
        multiplicity,
        decomposition: dec,
        staircase: stairs,
        solution,
        node_sequences,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;
    use crate::linear::max_safe_trails;

    fn setup(text: &str) -> (Graph, NodeId, NodeId, CutDecomposition) {
        let g = parse_graph(text).unwrap();
        let s = g.node("s").unwrap();
        let t = g.node("t").unwrap();
        let dec = bridge_decomposition(&g, s, t).unwrap();
        (g, s, t, dec)
    }

    fn ivs(sol: &Solution) -> Vec<(usize, usize)> {
        sol.intervals().iter().map(|iv| (iv.lo, iv.hi)).collect()
    }

    fn fake_dec(len: usize) -> CutDecomposition {
        let nodes: Vec<NodeId> = (0..=len as u32).map(NodeId).collect();
        CutDecomposition::from_parts(
            nodes[0],
            nodes[len],
            (0..len as u32).map(EdgeId).collect(),
            vec![1; len + 1],
            nodes.clone(),
            nodes[..].to_vec(),
        )
    }

    #[test]
    fn backward_edge_breaker() {
        let (g, _, _, dec) = setup("s a\na b\nb t\nb a");
        let stairs = minimal_walk_breakers(&g, &dec, |_| true);
        assert_eq!(stairs.ranges(), [(2, 2)]);
        assert_eq!(stairs.breakers()[0].kind, BreakerKind::NonZero);
        assert_eq!(stairs.breakers()[0].witness, Some(EdgeId(3)));
        assert_eq!(ivs(&compact_max_safe_walks(&stairs, &dec)), [(1, 2), (2, 3)]);
    }

    #[test]
    fn junction_cycle_breaker() {
        let (g, _, _, dec) = setup("s a\na t\na c\nc a");
        let stairs = minimal_walk_breakers(&g, &dec, |_| true);
        assert_eq!(stairs.ranges(), [(2, 1)]);
        assert_eq!(stairs.breakers()[0].kind, BreakerKind::ZeroLength);
        assert_eq!(ivs(&compact_max_safe_walks(&stairs, &dec)), [(1, 1), (2, 2)]);
    }

    #[test]
    fn chain_has_no_breakers() {
        let (g, _, _, dec) = setup("s a\na b\nb t");
        let stairs = minimal_walk_breakers(&g, &dec, |_| true);
        assert!(stairs.is_empty());
        assert_eq!(ivs(&compact_max_safe_walks(&stairs, &dec)), [(1, 3)]);
    }

    #[test]
    fn compact_from_given_staircases() {
        let dec = fake_dec(3);
        let stairs = BreakerStaircase::new(vec![Breaker::non_zero(2, 2, None)]);
        assert_eq!(ivs(&compact_max_safe_walks(&stairs, &dec)), [(1, 2), (2, 3)]);
        let dec = fake_dec(2);
        assert_eq!(ivs(&compact_max_safe_walks(&BreakerStaircase::default(), &dec)), [(1, 2)]);
        let stairs = BreakerStaircase::new(vec![Breaker::zero_length(2)]);
        assert_eq!(ivs(&compact_max_safe_walks(&stairs, &dec)), [(1, 1), (2, 2)]);
    }

    #[test]
    fn breaking_rule() {
        let z = Breaker::zero_length(3);
        assert!(z.breaks(SafeInterval::new(2, 3)));
        assert!(!z.breaks(SafeInterval::new(3, 5)));
        let nz = Breaker::non_zero(2, 3, None);
        assert!(nz.breaks(SafeInterval::new(1, 4)));
        assert!(!nz.breaks(SafeInterval::new(1, 3)));
        assert!(!nz.breaks(SafeInterval::new(2, 4)));
        assert!(z.dominates(&nz));
        assert!(!nz.dominates(&z));
    }

    #[test]
    fn expansion_of_chain() {
        let (g, _, _, dec) = setup("s a\na t");
        let stairs = minimal_walk_breakers(&g, &dec, |_| true);
        let cs = compact_max_safe_walks(&stairs, &dec);
        let walks = expand_solution(&cs, &dec);
        assert_eq!(walks.len(), 1);
        assert_eq!(walks[0].render(&g), "s (s,a) a (a,t) t");

        let c = g.node("a").unwrap();
        let cs = Solution::new(dec.bridges().to_vec(), Vec::new(), vec![c]);
        let walks = expand_solution(&cs, &dec);
        assert_eq!(walks, vec![Walk::empty(c)]);
    }

    #[test]
    fn witness_walk_breaks_the_run() {
        let (g, _, _, dec) = setup("s a\na b\nb t\nb a");
        let stairs = minimal_walk_breakers(&g, &dec, |_| true);
        let w = witness_walk(&g, &dec, &stairs.breakers()[0]).unwrap();
        assert!(w.is_valid(&g));
        assert_eq!(w.render(&g), "s (s,a) a (a,b) b (b,a) a (a,b) b (b,t) t");
        assert!(!crate::walk::is_substring(dec.bridges(), w.edges()));
    }

    #[test]
    fn visibility_merges_components() {
        let (g, s, t, _) = setup("s a\na b\nb t\nb a");
        let x = Visibility::from_elements(&g, &[Element::Edge(EdgeId(0)), Element::Edge(EdgeId(2))]).unwrap();
        let r = restrict_visibility(&g, s, t, &x).unwrap();
        assert_eq!(r.merged.bridges(), &[EdgeId(0), EdgeId(2)]);
        let a = g.node("a").unwrap();
        let b = g.node("b").unwrap();
        assert_eq!(r.merged.component(a), Some(2));
        assert_eq!(r.merged.component(b), Some(2));
        assert_eq!(r.merged.exit(2), b);
        assert_eq!(ivs(&x_max_safe_walks(&r)), [(1, 2)]);

        let x = Visibility::from_elements(
            &g,
            &[Element::Edge(EdgeId(0)), Element::Edge(EdgeId(3)), Element::Edge(EdgeId(2))],
        )
        .unwrap();
        let r = restrict_visibility(&g, s, t, &x).unwrap();
        assert_eq!(ivs(&x_max_safe_walks(&r)), [(1, 1), (2, 2)]);
    }

    #[test]
    fn visible_node_on_chain() {
        let (g, s, t, _) = setup("s a\na t");
        let a = g.node("a").unwrap();
        let x = Visibility::from_elements(&g, &[Element::Node(a)]).unwrap();
        let r = restrict_visibility(&g, s, t, &x).unwrap();
        assert_eq!(r.merged.len(), 1);
        assert_eq!(r.element(r.merged.bridge(1)), Element::Node(a));
        assert_eq!(r.edge_label(&g, r.merged.bridge(1)), "(a,a')");
    }

    #[test]
    fn full_edge_visibility_is_identity() {
        let (g, s, t, dec) = setup("s a\na b\nb t\nb a\na c\nc t");
        let r = restrict_visibility(&g, s, t, &Visibility::all_edges(&g)).unwrap();
        assert_eq!(r.merged.bridges(), dec.bridges());
        for v in g.nodes() {
            assert_eq!(r.merged.component(v), dec.component(v));
        }
    }

    fn node_names(g: &Graph, seqs: &[Vec<NodeId>]) -> Vec<Vec<String>> {
        seqs.iter()
            .map(|s| s.iter().map(|&v| g.name(v).to_string()).collect())
            .collect()
    }

    #[test]
    fn multigraph_examples() {
        let g = parse_graph("s a\na b\na b\nb t\nb a").unwrap();
        let (s, t) = (g.node("s").unwrap(), g.node("t").unwrap());
        let sol = multigraph_trail_solution(&g, s, t).unwrap();
        assert_eq!(node_names(&g, &sol.node_sequences), [vec!["s", "a", "b"], vec!["a", "b", "t"]]);

        let g = parse_graph("s a\na b\nb t\nb a").unwrap();
        let (s, t) = (g.node("s").unwrap(), g.node("t").unwrap());
        let sol = multigraph_trail_solution(&g, s, t).unwrap();
        assert_eq!(node_names(&g, &sol.node_sequences), [vec!["s", "a", "b", "t"]]);

        let g = parse_graph("s a\na t").unwrap();
        let (s, t) = (g.node("s").unwrap(), g.node("t").unwrap());
        let sol = multigraph_trail_solution(&g, s, t).unwrap();
        assert_eq!(node_names(&g, &sol.node_sequences), [vec!["s", "a", "t"]]);
    }

    #[test]
    fn filter_applies_before_domination() {
        // b_2 = (a,b) is single, b_3 = (b,c) is doubled
        let g = parse_graph("s a\na b\nb c\nb c\nc t\nb a\nc b").unwrap();
        let (s, t) = (g.node("s").unwrap(), g.node("t").unwrap());
        let (merged, mult) = merge_parallel_edges(&g);
        let dec = bridge_decomposition(&merged, s, t).unwrap();
        assert_eq!(dec.len(), 4);
        let plain = minimal_walk_breakers(&merged, &dec, |_| true);
        assert_eq!(plain.ranges(), [(2, 2), (3, 3)]);
        let filtered = minimal_walk_breakers(&merged, &dec, |i| mult.count(dec.bridge(i)) >= 2);
        assert_eq!(filtered.ranges(), [(3, 3)]);
        let sol = compact_max_safe_walks(&filtered, &dec);
        assert_eq!(ivs(&sol), [(1, 3), (3, 4)]);
        let trails = max_safe_trails(&dec, &merged);
        assert_eq!(ivs(&trails), [(1, 4)]);
    }
}
