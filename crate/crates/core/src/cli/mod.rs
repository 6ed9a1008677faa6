//! The `exlab` command line: one JSON document per run on stdout.
//!
//! Exit status is 0 on success, 2 when the search budget runs out and 1 for
//! every other error. Errors are reported as `{"error": {"code", "message"}}`.

pub mod compare;
mod input;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::determining::{determining_number, is_determining, is_minimal_determining, minimal_determining_sets};
use crate::error::{Error, Result};
use crate::exchange::exchange_property;
use crate::graph::{generate, write_graph6};
use crate::outerplanar::{block_cut_tree, is_outerplanar};
use crate::resolving::{is_minimal_resolving, is_resolving, metric_dimension, minimal_resolving_sets};
use crate::system::SetKind;
use crate::trees::{construct_minimal_resolving_tree, exterior_major_vertices, tree_center};
use crate::wheels::wheel_determining_pairs;

pub use input::{parse_graph_bytes, parse_set, GraphArgs, Inputs, SearchArgs};

#[derive(Debug, Parser)]
#[command(name = "exlab", version, about = "Determining sets, resolving sets and the exchange property")]
pub struct Cli {
    /// Shift every vertex label in input and output by this amount (0 or 1).
    #[arg(long, global = true, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
    pub label_offset: u8,
    /// Add elapsed wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a family member as graph6.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        /// Print edge-list JSON instead of graph6.
        #[arg(long)]
        json: bool,
    },
    /// Is a vertex set determining/resolving, and is it minimal?
    Check {
        #[command(flatten)]
        graph: GraphArgs,
        /// `det` (determining) or `res` (resolving).
        #[arg(long, value_parser = input::parse_kind)]
        kind: SetKind,
        /// Comma-separated vertex labels.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Determining number or metric dimension.
    Number {
        #[command(flatten)]
        graph: GraphArgs,
        /// `det` (determining) or `res` (resolving).
        #[arg(long, value_parser = input::parse_kind)]
        kind: SetKind,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// All minimal sets of a kind, optionally up to a size.
    MinimalSets {
        #[command(flatten)]
        graph: GraphArgs,
        /// `det` (determining) or `res` (resolving).
        #[arg(long, value_parser = input::parse_kind)]
        kind: SetKind,
        #[arg(long)]
        max_size: Option<usize>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Decide the exchange property by exhausting the census.
    Exchange {
        #[command(flatten)]
        graph: GraphArgs,
        /// `det` (determining) or `res` (resolving).
        #[arg(long, value_parser = input::parse_kind)]
        kind: SetKind,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Canonical resolving sets, gap structure and failure witnesses for wheels.
    WheelReport {
        /// Rim sizes as `a..b` (inclusive) or a single `n`.
        #[arg(long, default_value = "7..12")]
        n_range: String,
    },
    /// Tree criteria next to the brute-force oracles.
    TreeReport {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Block structure, exchange decision and oracle agreement for an
    /// outerplanar graph.
    OuterplanarReport {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Seeded sweeps of characterizations against the oracles.
    OracleCompare {
        #[arg(long, default_value = "all", value_parser = ["trees", "wheels", "outerplanar", "all"])]
        suite: String,
        /// Random instances per suite.
        #[arg(long, default_value_t = 50)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        search: SearchArgs,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Gen { .. } => "gen",
            Command::Check { .. } => "check",
            Command::Number { .. } => "number",
            Command::MinimalSets { .. } => "minimal-sets",
            Command::Exchange { .. } => "exchange",
            Command::WheelReport { .. } => "wheel-report",
            Command::TreeReport { .. } => "tree-report",
            Command::OuterplanarReport { .. } => "outerplanar-report",
            Command::OracleCompare { .. } => "oracle-compare",
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
struct Report {
    command: &'static str,
    tool_version: &'static str,
    inputs: Value,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_millis: Option<u128>,
}

/// Keys whose values hold vertex labels, shifted by `--label-offset`.
const LABEL_KEYS: &[&str] = &[
    "set", "sets", "S", "r", "orbitRepresentatives", "canonicalSet", "landmarks", "vertex",
    "branchPaths", "blocks", "cutvertices", "block", "movedByAll", "fixedPair", "center",
    "firstMismatch", "constructedResolvingSet", "exteriorMajorVertices",
];

fn shift_labels(value: &mut Value, offset: u64, inside: bool) {
    match value {
        Value::Number(n) if inside => {
            if let Some(v) = n.as_u64() {
                *value = json!(v + offset);
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|v| shift_labels(v, offset, inside)),
        Value::Object(map) => {
            for (k, v) in map.iter_mut() {
                // nested counts such as a census size stay as they are
                let labels = LABEL_KEYS.contains(&k.as_str());
                shift_labels(v, offset, labels || (inside && !matches!(v, Value::Number(_))));
            }
        }
        _ => {}
    }
}

fn to_value<T: Serialize>(v: &T) -> Result<Value> {
    serde_json::to_value(v).map_err(|e| Error::Internal(format!("serialization: {e}")))
}

/// Parses `argv` (program name first), runs the command and writes the
/// JSON report to `out`. Returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            return emit_error(out, &Error::Argument(e.to_string().trim_end().to_string()));
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(Output::Text(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Output::Report(mut inputs, mut result)) => {
            let offset = u64::from(cli.label_offset);
            if offset > 0 {
                inputs.label_offset = Some(offset as usize);
            }
            let mut inputs = match to_value(&inputs) {
                Ok(v) => v,
                Err(e) => return emit_error(out, &e),
            };
            if offset > 0 {
                shift_labels(&mut inputs, offset, false);
                shift_labels(&mut result, offset, false);
            }
            let report = Report {
                command: cli.command.name(),
                tool_version: env!("CARGO_PKG_VERSION"),
                inputs,
                result,
                elapsed_millis: cli.timing.then(|| start.elapsed().as_millis()),
            };
            match serde_json::to_string_pretty(&report) {
                Ok(text) => {
                    let _ = writeln!(out, "{text}");
                    0
                }
                Err(e) => emit_error(out, &Error::Internal(e.to_string())),
            }
        }
        Err(e) => emit_error(out, &e),
    }
}

fn emit_error(out: &mut dyn Write, e: &Error) -> i32 {
    let body = json!({ "error": { "code": e.code(), "message": e.to_string() } });
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).unwrap_or_default());
    match e {
        Error::Budget { .. } => 2,
        _ => 1,
    }
}

enum Output {
    Text(String),
    Report(Inputs, Value),
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::Argument(format!("bad range `{text}`; expected `a..b` or `n`"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (text.trim(), text.trim()),
    };
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a > b || b > 62 {
        return Err(bad());
    }
    Ok((a, b))
}

fn execute(cli: &Cli) -> Result<Output> {
    let offset = usize::from(cli.label_offset);
    match &cli.command {
        Command::Gen { graph, json } => {
            let spec = graph
                .spec()
                .ok_or_else(|| Error::Argument("gen needs --family".into()))?;
            let g = generate(&spec)?;
            if *json {
                let text = serde_json::to_string(&g.to_edge_list())
                    .map_err(|e| Error::Internal(e.to_string()))?;
                Ok(Output::Text(text))
            } else {
                Ok(Output::Text(String::from_utf8_lossy(&write_graph6(&g)?).into_owned()))
            }
        }
        Command::Check { graph, kind, set } => {
            let g = graph.load()?;
            let s = parse_set(set, g.n(), offset)?;
            let (accepted, minimal) = match kind {
                SetKind::Determining => (is_determining(&g, s)?, is_minimal_determining(&g, s)?),
                SetKind::Resolving => (is_resolving(&g, s)?, is_minimal_resolving(&g, s)?),
            };
            let mut inputs = Inputs::for_graph(graph, &g);
            inputs.kind = Some(*kind);
            inputs.set = Some(s);
            Ok(Output::Report(
                inputs,
                json!({ "kind": kind, "set": s, "accepted": accepted, "minimal": minimal }),
            ))
        }
        Command::Number { graph, kind, search } => {
            let g = graph.load()?;
            let mut budget = search.budget();
            let value = match kind {
                SetKind::Determining => determining_number(&g, &mut budget)?,
                SetKind::Resolving => metric_dimension(&g, &mut budget)?,
            };
            let mut inputs = Inputs::for_graph(graph, &g);
            inputs.kind = Some(*kind);
            Ok(Output::Report(
                inputs,
                json!({ "kind": kind, "value": value, "checksUsed": budget.used() }),
            ))
        }
        Command::MinimalSets { graph, kind, max_size, search } => {
            let g = graph.load()?;
            let mut budget = search.budget();
            let census = match kind {
                SetKind::Determining => minimal_determining_sets(&g, *max_size, &mut budget)?,
                SetKind::Resolving => minimal_resolving_sets(&g, *max_size, &mut budget)?,
            };
            let mut inputs = Inputs::for_graph(graph, &g);
            inputs.kind = Some(*kind);
            Ok(Output::Report(inputs, to_value(&census)?))
        }
        Command::Exchange { graph, kind, search } => {
            let g = graph.load()?;
            let report = exchange_property(&g, *kind, &mut search.budget())?;
            let mut inputs = Inputs::for_graph(graph, &g);
            inputs.kind = Some(*kind);
            Ok(Output::Report(inputs, to_value(&report)?))
        }
        Command::WheelReport { n_range } => {
            let (a, b) = parse_range(n_range)?;
            if a < 7 {
                return Err(Error::Domain("wheel reports start at n = 7".into()));
            }
            let rows = (a..=b)
                .map(|n| {
                    let row = compare::wheel_row(n)?;
                    let mut v = to_value(&row)?;
                    v["determiningPairs"] = json!(wheel_determining_pairs(n)?.sets.len());
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Output::Report(Inputs::empty(), json!({ "wheels": rows })))
        }
        Command::TreeReport { graph, search } => {
            let t = graph.load()?;
            let emvs = exterior_major_vertices(&t)?;
            let is_path = (0..t.n()).all(|v| t.degree(v) <= 2);
            let constructed = if is_path {
                None
            } else {
                Some(construct_minimal_resolving_tree(&t)?)
            };
            let comparison = compare::compare_tree(&t, graph.seed.unwrap_or(0), &mut search.budget())?;
            Ok(Output::Report(
                Inputs::for_graph(graph, &t),
                json!({
                    "n": t.n(),
                    "isPath": is_path,
                    "center": tree_center(&t)?,
                    "exteriorMajorVertices": emvs,
                    "constructedResolvingSet": constructed,
                    "comparison": comparison,
                }),
            ))
        }
        Command::OuterplanarReport { graph, search } => {
            let g = graph.load()?;
            let inputs = Inputs::for_graph(graph, &g);
            if !g.is_connected() || !is_outerplanar(&g)? {
                return Ok(Output::Report(
                    inputs,
                    json!({ "isOuterplanar": is_outerplanar(&g)?, "connected": g.is_connected() }),
                ));
            }
            let comparison = compare::compare_outerplanar(&g, graph.seed.unwrap_or(0), &mut search.budget())?;
            Ok(Output::Report(
                inputs,
                json!({
                    "isOuterplanar": true,
                    "connected": true,
                    "blockCutTree": block_cut_tree(&g)?,
                    "comparison": comparison,
                }),
            ))
        }
        Command::OracleCompare { suite, count, seed, search } => {
            let mut budget = search.budget();
            let mut result = serde_json::Map::new();
            if suite == "trees" || suite == "all" {
                result.insert("trees".into(), to_value(&compare::tree_suite(*count, *seed, &mut budget)?)?);
            }
            if suite == "wheels" || suite == "all" {
                result.insert("wheels".into(), to_value(&compare::wheel_suite()?)?);
            }
            if suite == "outerplanar" || suite == "all" {
                result.insert(
                    "outerplanar".into(),
                    to_value(&compare::outerplanar_suite(*count, *seed, &mut budget)?)?,
                );
            }
            Ok(Output::Report(Inputs::empty(), Value::Object(result)))
        }
    }
}
