//! Safety of s-t walks in directed graphs.
//!
//! A sequence is safe for a source `s` and target `t` when it occurs as a
//! contiguous piece of every candidate s-t walk. This crate computes all
//! maximal safe sequences in linear time for s-t paths, trails, walks,
//! walks restricted to a visible subset of elements, and trails of
//! multigraphs. Everything rests on the ordered s-t bridges of the graph.
//!
//! ```
//! use stsafe::{parse_graph, solve, SafetyModel};
//!
//! let g = parse_graph("s a\na b\nb t\nb a").unwrap();
//! let (s, t) = (g.node("s").unwrap(), g.node("t").unwrap());
//! let report = solve(&g, s, t, SafetyModel::Walks, None).unwrap();
//! let walks: Vec<String> = report
//!     .sequences
//!     .iter()
//!     .map(|seq| seq.iter().map(|el| el.label(&g)).collect::<Vec<_>>().join(" "))
//!     .collect();
//! assert_eq!(walks, ["s (s,a) a (a,b) b", "a (a,b) b (b,t) t"]);
//! ```

pub mod decomposition;
pub mod error;
pub mod graph;
pub mod linear;
pub mod oracle;
pub mod safety;
pub mod testkit;
pub mod visibility;
pub mod walk;
pub mod walks;

pub use decomposition::{articulation_decomposition, bridge_decomposition, ArticulationDecomposition, CutDecomposition};
pub use error::{Error, Result};
pub use graph::{parse_graph, write_edge_list, EdgeId, Graph, NodeId};
pub use linear::{max_safe_paths, max_safe_trails, project_to_nodes, single_node_solutions, SafeInterval, Solution};
pub use safety::{solve, SafetyModel, SafetyReport};
pub use visibility::{parse_visibility, Visibility};
pub use walk::{Element, Walk};
pub use walks::{
    compact_max_safe_walks, expand_solution, minimal_walk_breakers, multigraph_trail_solution, restrict_visibility,
    witness_walk, x_max_safe_walks, Breaker, BreakerKind, BreakerStaircase, CompactSolution,
};
