use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use stsafe::oracle::{enumerate_candidates, max_safe_among, CandidateModel, Projection};
use stsafe::testkit::{generate, FamilyKind, FamilySpec};
use stsafe::{
    articulation_decomposition, bridge_decomposition, parse_graph, parse_visibility, solve, write_edge_list, Element,
    Error, Graph, NodeId, SafetyModel, SafetyReport, Visibility,
};

#[derive(Parser)]
#[command(name = "stsafe", version, about = "Safe s-t paths, trails and walks in directed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ordered s-t bridges and the component of every reachable node.
    Bridges(Query),
    /// Ordered s-t articulation points and node components.
    Articulation(Query),
    /// Maximal safe sequences under a model.
    Safe(SafeArgs),
    /// Brute-force enumeration: candidate count, maximal safe sequences and query verdicts.
    Oracle(OracleArgs),
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
}

#[derive(Args)]
struct Query {
    /// Edge-list file.
    input: PathBuf,
    #[arg(short, long)]
    source: String,
    #[arg(short, long)]
    target: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SafeArgs {
    #[command(flatten)]
    query: Query,
    /// paths, trails, walks or mtrails.
    #[arg(long, default_value = "walks")]
    model: SafetyModel,
    /// Visibility file; restricts the walks model to the listed nodes and edges.
    #[arg(long)]
    visibility: Option<PathBuf>,
    /// Print only the compact representation.
    #[arg(long)]
    compact: bool,
    /// Compare against the enumeration oracle (small inputs only).
    #[arg(long)]
    oracle_check: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    query: Query,
    #[arg(long, default_value = "walks")]
    model: SafetyModel,
    #[arg(long)]
    visibility: Option<PathBuf>,
    /// A sequence to judge, e.g. "a (a,b) b" or "a b". Repeatable.
    #[arg(long = "check")]
    checks: Vec<String>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: FamilyKind,
    #[arg(long)]
    size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum Failure {
    Input(String),
    Rejected(String),
    Disagreement(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Intractable(msg) => Failure::Rejected(msg),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Bridges(q) => bridges(&q),
        Command::Articulation(q) => articulation(&q),
        Command::Safe(a) => safe(&a),
        Command::Oracle(a) => oracle(&a),
        Command::Gen(a) => gen(&a),
    };
    match result {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Rejected(msg)) => {
            eprintln!("rejected: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Disagreement(msg)) => {
            eprintln!("oracle disagreement: {msg}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(q: &Query) -> Result<(Graph, NodeId, NodeId), Failure> {
    let g = parse_graph(&read(&q.input)?)?;
    let s = g.require_node(&q.source)?;
    let t = g.require_node(&q.target)?;
    Ok((g, s, t))
}

fn load_visibility(g: &Graph, path: Option<&Path>) -> Result<Option<Visibility>, Failure> {
    path.map(|p| Ok(parse_visibility(g, &read(p)?)?)).transpose()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data serializes");
    out.push('\n');
    out
}

#[derive(Serialize)]
struct ComponentReport {
    /// Bridge labels or articulation node names, in order.
    sequence: Vec<String>,
    components: Vec<(String, usize)>,
}

impl ComponentReport {
    fn render(&self, json: bool) -> String {
        if json {
            return to_json(self);
        }
        let mut out = String::new();
        for item in &self.sequence {
            out.push_str(item);
            out.push('\n');
        }
        for (v, i) in &self.components {
            out.push_str(&format!("component {v} {i}\n"));
        }
        out
    }
}

fn components(g: &Graph, component: impl Fn(NodeId) -> Option<usize>) -> Vec<(String, usize)> {
    g.nodes()
        .filter_map(|v| component(v).map(|i| (g.name(v).to_string(), i)))
        .collect()
}

fn bridges(q: &Query) -> Outcome {
    let (g, s, t) = load(q)?;
    let dec = bridge_decomposition(&g, s, t)?;
    let report = ComponentReport {
        sequence: dec.bridges().iter().map(|&e| g.edge_label(e)).collect(),
        components: components(&g, |v| dec.component(v)),
    };
    Ok(report.render(q.json))
}

fn articulation(q: &Query) -> Outcome {
    let (g, s, t) = load(q)?;
    let art = articulation_decomposition(&g, s, t)?;
    let report = ComponentReport {
        sequence: art.points().iter().map(|&v| g.name(v).to_string()).collect(),
        components: components(&g, |v| art.component(v)),
    };
    Ok(report.render(q.json))
}

#[derive(Serialize)]
struct SafeOutput {
    bridges: Vec<String>,
    intervals: Vec<(usize, usize)>,
    singletons: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    walks: Option<Vec<String>>,
}

/// Node sequences print as `(s,a,b)`, everything else as its element labels.
fn render_sequence(g: &Graph, model: SafetyModel, seq: &[Element]) -> String {
    let labels: Vec<String> = seq.iter().map(|el| el.label(g)).collect();
    match model {
        SafetyModel::MultigraphTrails => format!("({})", labels.join(",")),
        _ => labels.join(" "),
    }
}

fn safe_output(g: &Graph, report: &SafetyReport, compact: bool) -> SafeOutput {
    let working = report.working_graph(g);
    SafeOutput {
        bridges: report.bridge_labels.clone(),
        intervals: report.solution.intervals().iter().map(|iv| (iv.lo, iv.hi)).collect(),
        singletons: report
            .solution
            .singletons()
            .iter()
            .map(|&v| working.name(v).to_string())
            .collect(),
        walks: (!compact).then(|| {
            report
                .sequences
                .iter()
                .map(|seq| render_sequence(g, report.model, seq))
                .collect()
        }),
    }
}

impl SafeOutput {
    fn render_text(&self, model: SafetyModel) -> String {
        let mut out = String::new();
        for &(lo, hi) in &self.intervals {
            out.push_str(&format!("safe {lo} {hi} : {}\n", self.bridges[lo - 1..hi].join(" ")));
        }
        for v in &self.singletons {
            out.push_str(&format!("singleton {v}\n"));
        }
        for w in self.walks.iter().flatten() {
            match model {
                SafetyModel::MultigraphTrails => out.push_str(&format!("{w}\n")),
                _ => out.push_str(&format!("walk {w}\n")),
            }
        }
        out
    }
}

fn candidate_model(g: &Graph, model: SafetyModel, x: Option<&Visibility>) -> (CandidateModel, Projection) {
    let (cm, projection) = match model {
        SafetyModel::Paths => (CandidateModel::paths(), Projection::Full),
        SafetyModel::Trails => (CandidateModel::trails(), Projection::Full),
        SafetyModel::Walks => (CandidateModel::walks_for(g), Projection::Full),
        SafetyModel::MultigraphTrails => (CandidateModel::multigraph_trails(), Projection::Nodes),
    };
    match x {
        Some(x) => (cm.with_visibility(x.clone()), Projection::Visible(x.clone())),
        None => (cm, projection),
    }
}

fn sorted_labels(g: &Graph, model: SafetyModel, seqs: &[Vec<Element>]) -> Vec<String> {
    let mut out: Vec<String> = seqs.iter().map(|s| render_sequence(g, model, s)).collect();
    out.sort();
    out
}

fn safe(a: &SafeArgs) -> Outcome {
    let (g, s, t) = load(&a.query)?;
    let x = load_visibility(&g, a.visibility.as_deref())?;
    let report = solve(&g, s, t, a.model, x.as_ref())?;
    if a.oracle_check {
        let (cm, projection) = candidate_model(&g, a.model, x.as_ref());
        let candidates = enumerate_candidates(&g, s, t, &cm)?;
        let want = sorted_labels(&g, a.model, &max_safe_among(&candidates, &projection));
        let got = sorted_labels(&g, a.model, &report.sequences);
        if got != want {
            return Err(Failure::Disagreement(format!(
                "computed [{}], enumeration gives [{}]",
                got.join("; "),
                want.join("; ")
            )));
        }
    }
    let out = safe_output(&g, &report, a.compact);
    Ok(match a.query.json {
        true => to_json(&out),
        false => out.render_text(a.model),
    })
}

/// Parses `a (a,b) b (b,c)#2` into elements of `g`.
fn parse_elements(g: &Graph, text: &str) -> Result<Vec<Element>, Failure> {
    text.split_whitespace()
        .map(|token| {
            let Some(rest) = token.strip_prefix('(') else {
                return Ok(Element::Node(g.require_node(token)?));
            };
            let bad = || Failure::Input(format!("malformed edge `{token}`"));
            let (pair, ordinal) = match rest.split_once(")#") {
                Some((pair, k)) => (pair, k.parse::<usize>().map_err(|_| bad())?),
                None => (rest.strip_suffix(')').ok_or_else(bad)?, 1),
            };
            let (u, v) = pair.split_once(',').ok_or_else(bad)?;
            let (u, v) = (g.require_node(u)?, g.require_node(v)?);
            let e = g.find_edge(u, v, ordinal).ok_or_else(|| {
                Failure::from(Error::UnknownEdge {
                    tail: g.name(u).to_string(),
                    head: g.name(v).to_string(),
                    ordinal,
                })
            })?;
            Ok(Element::Edge(e))
        })
        .collect()
}

#[derive(Serialize)]
struct OracleOutput {
    candidates: usize,
    safe: Vec<String>,
    checks: Vec<(String, bool)>,
}

fn oracle(a: &OracleArgs) -> Outcome {
    let (g, s, t) = load(&a.query)?;
    let x = load_visibility(&g, a.visibility.as_deref())?;
    let (cm, projection) = candidate_model(&g, a.model, x.as_ref());
    let candidates = enumerate_candidates(&g, s, t, &cm)?;
    if candidates.is_empty() {
        return Err(Error::Unreachable {
            from: a.query.source.clone(),
            to: a.query.target.clone(),
        }
        .into());
    }
    let mut checks = Vec::new();
    for text in &a.checks {
        let query = parse_elements(&g, text)?;
        let projection = Projection::infer(&cm, &query);
        let verdict = candidates
            .iter()
            .all(|w| stsafe::walk::is_substring(&query, &projection.apply(w)));
        checks.push((text.clone(), verdict));
    }
    let out = OracleOutput {
        candidates: candidates.len(),
        safe: sorted_labels(&g, a.model, &max_safe_among(&candidates, &projection)),
        checks,
    };
    if a.query.json {
        return Ok(to_json(&out));
    }
    let mut text = format!("candidates {}\n", out.candidates);
    for seq in &out.safe {
        text.push_str(&format!("maximal {seq}\n"));
    }
    for (q, verdict) in &out.checks {
        let word = if *verdict { "safe" } else { "unsafe" };
        text.push_str(&format!("{word} : {q}\n"));
    }
    Ok(text)
}

fn gen(a: &GenArgs) -> Outcome {
    let spec = FamilySpec::new(a.family, a.size, a.seed);
    let generated = generate(&spec)?;
    let g = &generated.graph;
    let text = format!(
        "# {} size {} seed {}: source {} target {}\n{}",
        a.family,
        a.size,
        a.seed,
        g.name(generated.source),
        g.name(generated.target),
        write_edge_list(g)
    );
    match &a.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}
