//! One entry point for every tractable model.

use std::fmt;
use std::str::FromStr;

use crate::decomposition::{articulation_decomposition, bridge_decomposition, CutDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::linear::{max_safe_paths, max_safe_trails, single_node_solutions, Solution};
use crate::visibility::Visibility;
use crate::walk::Element;
use crate::walks::{
    compact_max_safe_walks, minimal_walk_breakers, multigraph_trail_solution, restrict_visibility,
    solution_walks, x_max_safe_walks, BreakerStaircase,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SafetyModel {
    Paths,
    Trails,
    Walks,
    /// Trails of a multigraph, judged on node sequences.
    MultigraphTrails,
}

impl SafetyModel {
    pub fn name(self) -> &'static str {
        match self {
            SafetyModel::Paths => "paths",
            SafetyModel::Trails => "trails",
            SafetyModel::Walks => "walks",
            SafetyModel::MultigraphTrails => "mtrails",
        }
    }
}

impl fmt::Display for SafetyModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SafetyModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paths" => Ok(SafetyModel::Paths),
            "trails" => Ok(SafetyModel::Trails),
            "walks" => Ok(SafetyModel::Walks),
            "mtrails" => Ok(SafetyModel::MultigraphTrails),
            _ => Err(Error::Parse {
                line: 0,
                message: format!("unknown model `{s}`"),
            }),
        }
    }
}

/// Result of [`solve`].
///
/// `decomposition` and `solution` refer to the working graph: the node
/// expansion under visibility, the parallel-edge merge for multigraph trails,
/// and the input graph otherwise (`working` is `None`). Node ids of the input
/// graph stay valid in the working graph.
#[derive(Clone, Debug)]
pub struct SafetyReport {
    pub model: SafetyModel,
    pub visible: bool,
    pub working: Option<Graph>,
    pub decomposition: CutDecomposition,
    pub staircase: Option<BreakerStaircase>,
    pub solution: Solution,
    /// Labels of `solution.bridges()` in terms of the input graph.
    pub bridge_labels: Vec<String>,
    /// The maximal safe sequences in terms of the input graph: full walks,
    /// X-subsequences under visibility, node sequences for multigraph trails.
    pub sequences: Vec<Vec<Element>>,
}

impl SafetyReport {
    pub fn working_graph<'a>(&'a self, input: &'a Graph) -> &'a Graph {
        self.working.as_ref().unwrap_or(input)
    }
}

/// Maximal safe walks of `g` under `model`. Visibility restrictions are only
/// tractable for walks; the other combinations are rejected.
pub fn solve(g: &Graph, s: NodeId, t: NodeId, model: SafetyModel, x: Option<&Visibility>) -> Result<SafetyReport> {
    if let (Some(_), m) = (x, model) {
        if m != SafetyModel::Walks {
            return Err(Error::Intractable(format!(
                "maximal safety under subset visibility is NP-hard for the {m} model, \
                 even when only deciding whether one sequence is safe; only walks support visibility"
            )));
        }
    }
    if let Some(x) = x {
        let r = restrict_visibility(g, s, t, x)?;
        let solution = x_max_safe_walks(&r);
        let bridge_labels = solution.bridges().iter().map(|&e| r.edge_label(g, e)).collect();
        let sequences = solution
            .intervals()
            .iter()
            .map(|&iv| solution.interval_edges(iv).iter().map(|&e| r.element(e)).collect())
            .collect();
        return Ok(SafetyReport {
            model,
            visible: true,
            working: Some(r.graph),
            decomposition: r.merged,
            staircase: None,
            solution,
            bridge_labels,
            sequences,
        });
    }
    if model == SafetyModel::MultigraphTrails {
        let m = multigraph_trail_solution(g, s, t)?;
        let bridge_labels = m.solution.bridges().iter().map(|&e| m.merged.edge_label(e)).collect();
        let sequences = m
            .node_sequences
            .iter()
            .map(|seq| seq.iter().map(|&v| Element::Node(v)).collect())
            .collect();
        return Ok(SafetyReport {
            model,
            visible: false,
            working: Some(m.merged),
            decomposition: m.decomposition,
            staircase: Some(m.staircase),
            solution: m.solution,
            bridge_labels,
            sequences,
        });
    }

    let dec = bridge_decomposition(g, s, t)?;
    let (solution, staircase) = match model {
        SafetyModel::Paths => (max_safe_paths(&dec), None),
        SafetyModel::Trails => (max_safe_trails(&dec, g), None),
        _ => {
            let stairs = minimal_walk_breakers(g, &dec, |_| true);
            (compact_max_safe_walks(&stairs, &dec), Some(stairs))
        }
    };
    let art = articulation_decomposition(g, s, t)?;
    let singles = single_node_solutions(g, &art, &solution);
    let solution = solution.with_singletons(singles);
    let bridge_labels = solution.bridges().iter().map(|&e| g.edge_label(e)).collect();
    let sequences = solution_walks(&solution, &dec).map(|w| w.elements()).collect();
    Ok(SafetyReport {
        model,
        visible: false,
        working: None,
        decomposition: dec,
        staircase,
        solution,
        bridge_labels,
        sequences,
    })
}
