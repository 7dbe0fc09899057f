//! Seeded graph generators for tests, benchmarks and the `gen` command.
//!
//! Families with a fixed shape name their chain nodes `s, v1, ..., v{k-1}, t`.
//! The bridge components of such a chain are singletons, `C_{i+1} = {v_i}`.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `k` bridges in a row.
    Chain,
    /// A chain with a 2-cycle hanging off every junction.
    JunctionCycles,
    /// A chain with a self-loop at every junction and a backward edge from
    /// every interior chain node to every earlier one: `(k-1)k/2` breakers,
    /// `k - 1` of them minimal.
    QuadraticBreakers,
    /// A chain of even length `k = 2h` with backward edges `v_{h+r-1} -> v_r`;
    /// the `h` minimal breakers leave `h + 1` safe walks of length `h` each.
    QuadraticSolution,
    /// `k` nodes, a planted random s-t path and a few random extra edges.
    RandomDigraph,
    /// A random digraph whose edges are repeated up to three times.
    RandomMultigraph,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Chain,
        FamilyKind::JunctionCycles,
        FamilyKind::QuadraticBreakers,
        FamilyKind::QuadraticSolution,
        FamilyKind::RandomDigraph,
        FamilyKind::RandomMultigraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Chain => "chain",
            FamilyKind::JunctionCycles => "junction-cycles",
            FamilyKind::QuadraticBreakers => "quadratic-breakers",
            FamilyKind::QuadraticSolution => "quadratic-solution",
            FamilyKind::RandomDigraph => "random-digraph",
            FamilyKind::RandomMultigraph => "random-multigraph",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub size: usize,
    /// Ignored by the deterministic families.
    pub seed: u64,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, size: usize, seed: u64) -> Self {
        FamilySpec { kind, size, seed }
    }
}

#[derive(Clone, Debug)]
pub struct Generated {
    pub graph: Graph,
    pub source: NodeId,
    pub target: NodeId,
}

pub fn generate(spec: &FamilySpec) -> Result<Generated> {
    let k = spec.size;
    if k < 2 {
        return Err(Error::InvalidFamily(format!("size must be at least 2, got {k}")));
    }
    let graph = match spec.kind {
        FamilyKind::Chain => chain(k),
        FamilyKind::JunctionCycles => junction_cycles(k),
        FamilyKind::QuadraticBreakers => quadratic_breakers(k),
        FamilyKind::QuadraticSolution => {
            if !k.is_multiple_of(2) {
                return Err(Error::InvalidFamily(format!(
                    "quadratic-solution needs an even size, got {k}"
                )));
            }
            quadratic_solution(k)
        }
        FamilyKind::RandomDigraph => random_digraph(k, &mut ChaCha8Rng::seed_from_u64(spec.seed)),
        FamilyKind::RandomMultigraph => random_multigraph(k, &mut ChaCha8Rng::seed_from_u64(spec.seed)),
    };
    let source = graph.node("s").expect("generated graphs contain s");
    let target = graph.node("t").expect("generated graphs contain t");
    Ok(Generated { graph, source, target })
}

fn chain_names(k: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(k + 1);
    names.push("s".to_string());
    names.extend((1..k).map(|i| format!("v{i}")));
    names.push("t".to_string());
    names
}

fn chain_with_capacity(k: usize, extra_edges: usize) -> (Graph, Vec<NodeId>) {
    let mut g = Graph::with_capacity(k + 1, k + extra_edges);
    let v: Vec<NodeId> = chain_names(k).into_iter().map(|name| g.add_node(name)).collect();
    for i in 1..=k {
        g.add_edge(v[i - 1], v[i]);
    }
    (g, v)
}

fn chain(k: usize) -> Graph {
    chain_with_capacity(k, 0).0
}

fn junction_cycles(k: usize) -> Graph {
    let (mut g, v) = chain_with_capacity(k, 2 * (k - 1));
    for (i, &junction) in v.iter().enumerate().take(k).skip(1) {
        let c = g.add_node(format!("c{i}"));
        g.add_edge(junction, c);
        g.add_edge(c, junction);
    }
    g
}

fn quadratic_breakers(k: usize) -> Graph {
    let (mut g, v) = chain_with_capacity(k, (k - 1) + (k - 1) * (k - 2) / 2);
    for &junction in &v[1..k] {
        g.add_edge(junction, junction);
    }
    for a in 2..k {
        for b in 1..a {
            g.add_edge(v[a], v[b]);
        }
    }
    g
}

fn quadratic_solution(k: usize) -> Graph {
    let h = k / 2;
    let (mut g, v) = chain_with_capacity(k, h);
    for r in 1..=h {
        g.add_edge(v[h + r - 1], v[r]);
    }
    g
}

/// Nodes `s, v1, ..., v{k-2}, t`; a path from `s` to `t` through a random
/// subset of the inner nodes, then between 1 and `k/2 + 1` distinct extra
/// edges (self-loops allowed). At most `k - 1 + k/2 + 1` edges.
fn random_digraph(k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::with_capacity(k, 2 * k);
    let mut nodes = vec![g.add_node("s".into())];
    nodes.extend((1..k - 1).map(|i| g.add_node(format!("v{i}"))));
    nodes.push(g.add_node("t".into()));

    let mut inner: Vec<NodeId> = nodes[1..k - 1]
        .iter()
        .copied()
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    inner.shuffle(rng);
    let mut path = vec![nodes[0]];
    path.extend(inner);
    path.push(nodes[k - 1]);
    let mut present = std::collections::HashSet::new();
    for w in path.windows(2) {
        g.add_edge(w[0], w[1]);
        present.insert((w[0], w[1]));
    }

    let extra = rng.gen_range(1..=k / 2 + 1);
    let mut attempts = 0;
    let mut added = 0;
    while added < extra && attempts < 50 * extra {
        attempts += 1;
        let u = nodes[rng.gen_range(0..k)];
        let w = nodes[rng.gen_range(0..k)];
        if present.insert((u, w)) {
            g.add_edge(u, w);
            added += 1;
        }
    }
    g
}

/// Total edge count of generated multigraphs stays at or below this.
pub const MULTIGRAPH_EDGE_CAP: usize = 24;

fn random_multigraph(k: usize, rng: &mut ChaCha8Rng) -> Graph {
    let simple = random_digraph(k, rng);
    let mut g = Graph::with_capacity(k, MULTIGRAPH_EDGE_CAP);
    for v in simple.nodes() {
        g.add_node(simple.name(v).to_string());
    }
    let mut budget = MULTIGRAPH_EDGE_CAP.saturating_sub(simple.edge_count());
    for e in simple.edges() {
        let (u, w) = simple.endpoints(e);
        let copies = rng.gen_range(1..=3usize);
        let extra = (copies - 1).min(budget);
        budget -= extra;
        for _ in 0..=extra {
            g.add_edge(u, w);
        }
    }
    g
}
