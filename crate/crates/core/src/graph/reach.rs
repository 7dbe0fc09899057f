use std::collections::HashSet;

use super::{EdgeId, Graph, NodeId};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Nodes reachable from `start` following edges in `direction`, never
/// traversing an edge of `forbidden` and never leaving `restriction` when one
/// is given. The result is sorted by node id.
///
/// Bookkeeping is hashed, so the cost is proportional to the edges scanned from
/// visited nodes rather than to the size of the graph. A `start` outside the
/// restriction reaches nothing.
pub fn reach(
    g: &Graph,
    start: NodeId,
    direction: Direction,
    forbidden: &[EdgeId],
    restriction: Option<&[NodeId]>,
) -> Result<Vec<NodeId>> {
    g.check_node(start)?;
    let forbidden: HashSet<EdgeId> = forbidden.iter().copied().collect();
    let allowed: Option<HashSet<NodeId>> = restriction.map(|r| r.iter().copied().collect());
    let inside = |v: NodeId| allowed.as_ref().is_none_or(|a| a.contains(&v));
    if !inside(start) {
        return Ok(Vec::new());
    }

    let mut seen = HashSet::new();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        let edges = match direction {
            Direction::Forward => g.out_edges(u),
            Direction::Backward => g.in_edges(u),
        };
        for &e in edges {
            if forbidden.contains(&e) {
                continue;
            }
            let v = match direction {
                Direction::Forward => g.head(e),
                Direction::Backward => g.tail(e),
            };
            if inside(v) && seen.insert(v) {
                stack.push(v);
            }
        }
    }
    let mut out: Vec<NodeId> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}
