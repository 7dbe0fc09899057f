//! Instance sweeps and independent checks shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stsafe::oracle::{
    articulation_by_removal, bridges_by_removal, enumerate_candidates, max_safe_among, CandidateModel, Projection,
};
use stsafe::testkit::{generate, FamilyKind, FamilySpec};
use stsafe::{
    articulation_decomposition, bridge_decomposition, solve, CutDecomposition, EdgeId, Element, Graph, NodeId,
    SafetyModel, Visibility,
};

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub s: NodeId,
    pub t: NodeId,
    /// Deterministic per-instance salt for derived randomness.
    pub salt: u64,
}

pub fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Forward reachability avoiding one edge and/or one node.
pub fn reach_set(g: &Graph, s: NodeId, skip_edge: Option<EdgeId>, skip_node: Option<NodeId>) -> Vec<bool> {
    let mut seen = vec![false; g.node_count()];
    if Some(s) == skip_node {
        return seen;
    }
    seen[s.index()] = true;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &e in g.out_edges(v) {
            let w = g.head(e);
            if Some(e) != skip_edge && Some(w) != skip_node && !seen[w.index()] {
                seen[w.index()] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

pub fn instance(n: usize, edges: &[(usize, usize)], salt: u64) -> Option<Instance> {
    let graph = Graph::from_index_edges(n, edges);
    let s = NodeId(0);
    let t = NodeId(n as u32 - 1);
    reach_set(&graph, s, None, None)[t.index()].then_some(Instance { graph, s, t, salt })
}

fn all_pairs(n: usize, loops: bool) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v || loops {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

fn subsets(n: usize, loops: bool, out: &mut Vec<Instance>) {
    let pairs = all_pairs(n, loops);
    for mask in 0u64..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if let Some(inst) = instance(n, &edges, splitmix(mask ^ (n as u64) << 40)) {
            out.push(inst);
        }
    }
}

/// Every digraph on 2 and 3 nodes (self-loops included), every loop-free one
/// on 4 nodes, and hashed samples on 5 nodes, keeping those where node
/// `n - 1` is reachable from node 0. At least `min_count` instances.
pub fn sweep(min_count: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    subsets(2, true, &mut out);
    subsets(3, true, &mut out);
    subsets(4, false, &mut out);
    let pairs = all_pairs(5, false);
    let mut i = 0u64;
    while out.len() < min_count {
        i += 1;
        let h = splitmix(i);
        let want = 4 + (h % 7) as usize;
        let mut order: Vec<usize> = (0..pairs.len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(h));
        let mut edges: Vec<(usize, usize)> = order[..want].iter().map(|&k| pairs[k]).collect();
        // a loop on roughly every fourth sample
        if h >> 8 & 3 == 0 {
            let v = (h >> 16) as usize % 5;
            edges.push((v, v));
        }
        edges.sort();
        if let Some(inst) = instance(5, &edges, h) {
            out.push(inst);
        }
    }
    out
}

/// Seeded random digraphs with 2 to 8 nodes.
pub fn random_instances(count: usize, seed: u64) -> Vec<Instance> {
    (0..count as u64)
        .map(|i| {
            let k = 2 + (i % 7) as usize;
            let g = generate(&FamilySpec::new(FamilyKind::RandomDigraph, k, seed + i)).unwrap();
            Instance {
                graph: g.graph,
                s: g.source,
                t: g.target,
                salt: splitmix(seed ^ i.rotate_left(17)),
            }
        })
        .collect()
}

/// Each node and edge visible with probability 1/2.
pub fn random_visibility(inst: &Instance) -> Visibility {
    let g = &inst.graph;
    let mut x = Visibility::none(g);
    let mut h = inst.salt;
    for v in g.nodes() {
        h = splitmix(h);
        if h & 1 == 1 {
            x.insert(Element::Node(v)).unwrap();
        }
    }
    for e in g.edges() {
        h = splitmix(h);
        if h & 1 == 1 {
            x.insert(Element::Edge(e)).unwrap();
        }
    }
    x
}

/// Repeats every edge 1 to 3 times, at most `cap` edges overall.
pub fn with_multiplicities(inst: &Instance, cap: usize) -> Instance {
    let g = &inst.graph;
    let mut out = Graph::with_capacity(g.node_count(), cap);
    for v in g.nodes() {
        out.add_node(g.name(v).to_string());
    }
    let mut budget = cap.saturating_sub(g.edge_count());
    let mut h = inst.salt ^ 0x5eed;
    for e in g.edges() {
        h = splitmix(h);
        let extra = ((h % 3) as usize).min(budget);
        budget -= extra;
        for _ in 0..=extra {
            out.add_edge(g.tail(e), g.head(e));
        }
    }
    Instance {
        graph: out,
        s: inst.s,
        t: inst.t,
        salt: inst.salt,
    }
}

pub fn render(g: &Graph, seq: &[Element]) -> String {
    seq.iter().map(|el| el.label(g)).collect::<Vec<_>>().join(" ")
}

fn describe(inst: &Instance) -> String {
    let g = &inst.graph;
    let edges: Vec<String> = g.edges().map(|e| g.edge_label(e)).collect();
    format!("s={} t={} edges=[{}]", g.name(inst.s), g.name(inst.t), edges.join(" "))
}

fn compare(inst: &Instance, what: &str, mut got: Vec<Vec<Element>>, mut want: Vec<Vec<Element>>) -> Result<(), String> {
    got.sort();
    want.sort();
    if got == want {
        return Ok(());
    }
    let g = &inst.graph;
    let show = |v: &[Vec<Element>]| v.iter().map(|s| format!("[{}]", render(g, s))).collect::<Vec<_>>().join(", ");
    Err(format!(
        "{what} mismatch on {}: implementation {} oracle {}",
        describe(inst),
        show(&got),
        show(&want)
    ))
}

pub fn check_bridges(inst: &Instance) -> Result<(), String> {
    let (g, s, t) = (&inst.graph, inst.s, inst.t);
    let dec = bridge_decomposition(g, s, t).map_err(|e| e.to_string())?;
    let got: BTreeSet<EdgeId> = dec.bridges().iter().copied().collect();
    let want: BTreeSet<EdgeId> = bridges_by_removal(g, s, t).map_err(|e| e.to_string())?.into_iter().collect();
    if got != want || got.len() != dec.len() {
        return Err(format!("bridge set mismatch on {}", describe(inst)));
    }
    // C_i = R(G - b_i) minus R(G - b_{i-1}); the last component is what remains of R(G)
    let mut layers: Vec<Vec<bool>> = dec.bridges().iter().map(|&b| reach_set(g, s, Some(b), None)).collect();
    layers.push(reach_set(g, s, None, None));
    for v in g.nodes() {
        let want = layers.iter().position(|r| r[v.index()]).map(|i| i + 1);
        if dec.component(v) != want {
            return Err(format!(
                "component of {} is {:?}, expected {:?} on {}",
                g.name(v),
                dec.component(v),
                want,
                describe(inst)
            ));
        }
    }
    for w in layers.windows(2) {
        let grows = w[0].iter().zip(&w[1]).all(|(a, b)| !a || *b) && w[0] != w[1];
        if !grows {
            return Err(format!("bridge order wrong on {}", describe(inst)));
        }
    }
    Ok(())
}

pub fn check_articulation(inst: &Instance) -> Result<(), String> {
    let (g, s, t) = (&inst.graph, inst.s, inst.t);
    let art = articulation_decomposition(g, s, t).map_err(|e| e.to_string())?;
    let got: BTreeSet<NodeId> = art.points().iter().copied().collect();
    let want: BTreeSet<NodeId> = articulation_by_removal(g, s, t).map_err(|e| e.to_string())?.into_iter().collect();
    if got != want || got.len() != art.len() {
        return Err(format!("articulation set mismatch on {}", describe(inst)));
    }
    // component i holds a_i and whatever R(G - a_i) adds to earlier components;
    // the last one takes the rest of R(G)
    let mut layers: Vec<Vec<bool>> = art
        .points()
        .iter()
        .map(|&a| {
            let mut r = reach_set(g, s, None, Some(a));
            r[a.index()] = true;
            r
        })
        .collect();
    layers.push(reach_set(g, s, None, None));
    for v in g.nodes() {
        let want = layers.iter().position(|r| r[v.index()]).map(|i| i + 1);
        if art.component(v) != want {
            return Err(format!(
                "articulation component of {} is {:?}, expected {:?} on {}",
                g.name(v),
                art.component(v),
                want,
                describe(inst)
            ));
        }
    }
    Ok(())
}

/// Paths, trails and walks against their enumeration oracles, plus the walk
/// model under the visibility set `x` when given.
pub fn check_simple_models(inst: &Instance, x: Option<&Visibility>) -> Result<(), String> {
    let (g, s, t) = (&inst.graph, inst.s, inst.t);
    let err = |e: stsafe::Error| e.to_string();
    let paths = enumerate_candidates(g, s, t, &CandidateModel::paths()).map_err(err)?;
    let trails = enumerate_candidates(g, s, t, &CandidateModel::trails()).map_err(err)?;
    let walks = enumerate_candidates(g, s, t, &CandidateModel::walks_for(g)).map_err(err)?;

    let solved = |m: SafetyModel, x: Option<&Visibility>| solve(g, s, t, m, x).map_err(err);
    compare(inst, "paths", solved(SafetyModel::Paths, None)?.sequences, max_safe_among(&paths, &Projection::Full))?;
    compare(inst, "trails", solved(SafetyModel::Trails, None)?.sequences, max_safe_among(&trails, &Projection::Full))?;
    let report = solved(SafetyModel::Walks, None)?;
    if report.solution.intervals().len() > report.decomposition.len() + 1 {
        return Err(format!("too many intervals on {}", describe(inst)));
    }
    compare(inst, "walks", report.sequences, max_safe_among(&walks, &Projection::Full))?;
    if let Some(x) = x {
        compare(
            inst,
            "visible walks",
            solved(SafetyModel::Walks, Some(x))?.sequences,
            max_safe_among(&walks, &Projection::Visible(x.clone())),
        )?;
    }
    Ok(())
}

pub fn check_multigraph_trails(inst: &Instance) -> Result<(), String> {
    let (g, s, t) = (&inst.graph, inst.s, inst.t);
    let err = |e: stsafe::Error| e.to_string();
    let trails = enumerate_candidates(g, s, t, &CandidateModel::multigraph_trails()).map_err(err)?;
    let report = solve(g, s, t, SafetyModel::MultigraphTrails, None).map_err(err)?;
    compare(inst, "multigraph trails", report.sequences, max_safe_among(&trails, &Projection::Nodes))
}

/// Bridge sequence of `g` seen along a random simple s-t path.
pub fn sampled_bridge_order(inst: &Instance, dec: &CutDecomposition, rng: &mut ChaCha8Rng) -> Vec<EdgeId> {
    let g = &inst.graph;
    let mut parent: Vec<Option<EdgeId>> = vec![None; g.node_count()];
    let mut seen = vec![false; g.node_count()];
    let mut stack = vec![inst.s];
    seen[inst.s.index()] = true;
    'search: while let Some(v) = stack.pop() {
        let mut out: Vec<EdgeId> = g.out_edges(v).to_vec();
        out.shuffle(rng);
        for e in out {
            let w = g.head(e);
            if !seen[w.index()] {
                seen[w.index()] = true;
                parent[w.index()] = Some(e);
                if w == inst.t {
                    break 'search;
                }
                stack.push(w);
            }
        }
    }
    let bridges: BTreeSet<EdgeId> = dec.bridges().iter().copied().collect();
    let mut path = Vec::new();
    let mut v = inst.t;
    while v != inst.s {
        let e = parent[v.index()].expect("t is reachable");
        path.push(e);
        v = g.tail(e);
    }
    path.reverse();
    path.into_iter().filter(|e| bridges.contains(e)).collect()
}

/// Every bridge range `(a, b)` realised by some walk breaker, found by brute
/// force. A range is realised when, for some consecutive pair `b_c, b_{c+1}`
/// with `a - 1 <= c <= b`, a non-empty walk from `head(b_c)` to
/// `tail(b_{c+1})` traverses exactly the bridges `b_a..b_b`. Zero-length
/// breakers are reported as `(c + 1, c)`.
pub fn exhaustive_breaker_ranges(g: &Graph, dec: &CutDecomposition) -> BTreeSet<(usize, usize)> {
    let k = dec.len();
    let mut out = BTreeSet::new();
    for c in 1..k {
        // zero-length: a bridge-free non-empty walk
        if bridge_free_walk(g, dec, c, None) {
            out.insert((c + 1, c));
        }
        for a in 1..=(c + 1).min(k) {
            for b in a.max(c)..=k {
                if bridge_free_walk(g, dec, c, Some((a, b))) {
                    out.insert((a, b));
                }
            }
        }
    }
    out
}

/// Product-state search: walks from `head(b_c)` to `tail(b_{c+1})` that may
/// use bridges `b_a..b_b` only, and must use `b_a` and `b_b`.
fn bridge_free_walk(g: &Graph, dec: &CutDecomposition, c: usize, range: Option<(usize, usize)>) -> bool {
    let k = dec.len();
    let mut bridge_index = vec![0usize; g.edge_count()];
    for i in 1..=k {
        bridge_index[dec.bridge(i).index()] = i;
    }
    let from = dec.bridge_head(c);
    let to = dec.bridge_tail(c + 1);
    let state = |v: NodeId, fa: bool, fb: bool| v.index() * 4 + (fa as usize) * 2 + fb as usize;
    let mut seen = vec![false; g.node_count() * 4];
    let mut queue = VecDeque::new();
    let step = |e: EdgeId, fa: bool, fb: bool| -> Option<(bool, bool)> {
        let i = bridge_index[e.index()];
        match (i, range) {
            (0, _) => Some((fa, fb)),
            (_, None) => None,
            (i, Some((a, b))) if a <= i && i <= b => Some((fa || i == a, fb || i == b)),
            _ => None,
        }
    };
    // seed with the first edge so the walk is non-empty
    for &e in g.out_edges(from) {
        if let Some((fa, fb)) = step(e, false, false) {
            let w = g.head(e);
            let id = state(w, fa, fb);
            if !seen[id] {
                seen[id] = true;
                queue.push_back((w, fa, fb));
            }
        }
    }
    while let Some((v, fa, fb)) = queue.pop_front() {
        if v == to && (range.is_none() || (fa && fb)) {
            return true;
        }
        for &e in g.out_edges(v) {
            if let Some((na, nb)) = step(e, fa, fb) {
                let w = g.head(e);
                let id = state(w, na, nb);
                if !seen[id] {
                    seen[id] = true;
                    queue.push_back((w, na, nb));
                }
            }
        }
    }
    false
}

/// Ranges that can break some interval (start >= 2, end <= |B| - 1) and
/// contain no other such range.
pub fn minimal_effective_ranges(ranges: &BTreeSet<(usize, usize)>, k: usize) -> Vec<(usize, usize)> {
    let effective: Vec<(usize, usize)> = ranges
        .iter()
        .copied()
        .filter(|&(a, b)| a >= 2 && b < k)
        .collect();
    let mut out: Vec<(usize, usize)> = effective
        .iter()
        .copied()
        .filter(|&(a, b)| {
            !effective
                .iter()
                .any(|&(c, d)| (c, d) != (a, b) && a <= c && d <= b)
        })
        .collect();
    out.sort();
    out
}
