//! Maximal safe walks for the s-t paths and s-t trails models.
//!
//! Every safe non-empty walk is a run of consecutive s-t bridges. Under paths a
//! run is safe exactly when consecutive bridges share their junction node;
//! under trails the junction must additionally carry no cycle inside its
//! component, which shows up as an in-edge of the junction from that component.

use crate::decomposition::{ArticulationDecomposition, CutDecomposition};
use crate::graph::{EdgeId, Graph, NodeId};

/// Inclusive 1-based range `[lo, hi]` of the bridge sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SafeInterval {
    pub lo: usize,
    pub hi: usize,
}

impl SafeInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(1 <= lo && lo <= hi);
        SafeInterval { lo, hi }
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, other: &SafeInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }
}

/// Maximal safe intervals of a bridge sequence plus the maximal safe empty
/// walks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Solution {
    bridges: Vec<EdgeId>,
    intervals: Vec<SafeInterval>,
    singletons: Vec<NodeId>,
}

impl Solution {
    pub fn new(bridges: Vec<EdgeId>, intervals: Vec<SafeInterval>, singletons: Vec<NodeId>) -> Self {
        Solution {
            bridges,
            intervals,
            singletons,
        }
    }

    pub fn bridges(&self) -> &[EdgeId] {
        &self.bridges
    }

    pub fn intervals(&self) -> &[SafeInterval] {
        &self.intervals
    }

    pub fn singletons(&self) -> &[NodeId] {
        &self.singletons
    }

    /// Bridges `b_lo..=b_hi` of an interval.
    pub fn interval_edges(&self, iv: SafeInterval) -> &[EdgeId] {
        &self.bridges[iv.lo - 1..iv.hi]
    }

    pub fn with_singletons(mut self, singletons: Vec<NodeId>) -> Self {
        self.singletons = singletons;
        self
    }

    /// Total number of bridge occurrences over all intervals.
    pub fn expanded_len(&self) -> usize {
        self.intervals.iter().map(SafeInterval::len).sum()
    }
}

/// Cuts `1..=len` before every index `i` in `2..=len` where `split(i)` holds.
fn split_runs(len: usize, mut split: impl FnMut(usize) -> bool) -> Vec<SafeInterval> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut lo = 1;
    for i in 2..=len {
        if split(i) {
            out.push(SafeInterval::new(lo, i - 1));
            lo = i;
        }
    }
    out.push(SafeInterval::new(lo, len));
    out
}

/// Whether a trail breaker sits between `b_{i-1}` and `b_i`: either the two
/// bridges do not meet, or their junction has an in-edge from a node of `C_i`.
pub(crate) fn has_trail_breaker(g: &Graph, dec: &CutDecomposition, i: usize) -> bool {
    if !dec.adjacent(i) {
        return true;
    }
    let junction = dec.exit(i);
    let comps = dec.raw_components();
    g.in_edges(junction)
        .iter()
        .any(|&e| comps[g.tail(e).index()] as usize == i)
}

pub fn max_safe_paths(dec: &CutDecomposition) -> Solution {
    let intervals = split_runs(dec.len(), |i| !dec.adjacent(i));
    Solution::new(dec.bridges().to_vec(), intervals, Vec::new())
}

pub fn max_safe_trails(dec: &CutDecomposition, g: &Graph) -> Solution {
    let intervals = split_runs(dec.len(), |i| has_trail_breaker(g, dec, i));
    Solution::new(dec.bridges().to_vec(), intervals, Vec::new())
}

/// Articulation points that touch no bridge of any interval, in articulation
/// order. These are the maximal safe empty walks.
pub fn single_node_solutions(
    g: &Graph,
    art: &ArticulationDecomposition,
    solution: &Solution,
) -> Vec<NodeId> {
    let mut touched = vec![false; g.node_count()];
    for iv in solution.intervals() {
        for &b in solution.interval_edges(*iv) {
            touched[g.tail(b).index()] = true;
            touched[g.head(b).index()] = true;
        }
    }
    art.points()
        .iter()
        .copied()
        .filter(|v| !touched[v.index()])
        .collect()
}

/// Node sequences of the solution: one per interval, then the singletons.
/// Identical sequences are reported once.
pub fn project_to_nodes(solution: &Solution, dec: &CutDecomposition) -> Vec<Vec<NodeId>> {
    let mut out: Vec<Vec<NodeId>> = Vec::with_capacity(solution.intervals().len());
    for iv in solution.intervals() {
        let mut seq = Vec::with_capacity(iv.len() + 1);
        seq.push(dec.bridge_tail(iv.lo));
        for i in iv.lo..=iv.hi {
            seq.push(dec.bridge_head(i));
        }
        out.push(seq);
    }
    out.extend(solution.singletons().iter().map(|&v| vec![v]));
    let mut seen = std::collections::HashSet::new();
    out.retain(|seq| seen.insert(seq.clone()));
    out
}
