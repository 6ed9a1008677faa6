//! Graph and vertex-set arguments.

use std::io::Read;

use clap::Args;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, write_graph6, EdgeList, Family, FamilySpec, Graph, VertexSet};
use crate::system::{Budget, SetKind};

#[derive(Debug, Clone, Args)]
pub struct GraphArgs {
    /// File holding graph6 or edge-list JSON; `-` reads stdin.
    #[arg(long, conflicts_with = "family")]
    pub graph: Option<String>,
    /// Generate the input from a named family instead.
    #[arg(long)]
    pub family: Option<Family>,
    /// Family parameters, comma separated.
    #[arg(long, value_delimiter = ',', requires = "family")]
    pub params: Vec<u64>,
    /// Seed for the random families.
    #[arg(long, requires = "family")]
    pub seed: Option<u64>,
}

impl GraphArgs {
    pub fn spec(&self) -> Option<FamilySpec> {
        self.family.map(|family| FamilySpec {
            family,
            params: self.params.clone(),
            seed: self.seed,
        })
    }

    pub fn load(&self) -> Result<Graph> {
        if let Some(spec) = self.spec() {
            return crate::graph::generate(&spec);
        }
        let path = self
            .graph
            .as_deref()
            .ok_or_else(|| Error::Argument("one of --graph or --family is required".into()))?;
        let mut bytes = Vec::new();
        let read = if path == "-" {
            std::io::stdin().read_to_end(&mut bytes).map(|_| ())
        } else {
            std::fs::File::open(path).and_then(|mut f| f.read_to_end(&mut bytes).map(|_| ()))
        };
        read.map_err(|e| Error::Argument(format!("cannot read {path}: {e}")))?;
        parse_graph_bytes(&bytes)
    }
}

/// Edge-list JSON when the text starts with `{`, graph6 otherwise.
pub fn parse_graph_bytes(bytes: &[u8]) -> Result<Graph> {
    let text = bytes.trim_ascii();
    if text.first() == Some(&b'{') {
        let list: EdgeList = serde_json::from_slice(text)
            .map_err(|e| Error::Format(format!("edge-list JSON: {e}")))?;
        Graph::try_from(list)
    } else {
        parse_graph6(text)
    }
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Stop the search after this many elementary checks.
    #[arg(long, env = "EXLAB_BUDGET", default_value_t = crate::system::DEFAULT_BUDGET)]
    pub budget: u64,
}

impl SearchArgs {
    pub fn budget(&self) -> Budget {
        Budget::new(self.budget)
    }
}

/// `det` / `res` on the command line.
pub fn parse_kind(s: &str) -> std::result::Result<SetKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A comma-separated vertex list such as `0,4,6`; empty means the empty set.
pub fn parse_set(text: &str, n: usize, offset: usize) -> Result<VertexSet> {
    let ids = text
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .ok()
                .and_then(|v| v.checked_sub(offset))
                .ok_or_else(|| Error::Argument(format!("bad vertex label `{t}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_ids(n, &ids)
}

/// Echo of what the command ran on.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Inputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<SetKind>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label_offset: Option<usize>,
}

impl Inputs {
    pub fn for_graph(args: &GraphArgs, g: &Graph) -> Inputs {
        Inputs {
            graph6: write_graph6(g)
                .ok()
                .map(|b| String::from_utf8_lossy(&b).into_owned()),
            family: args.spec(),
            kind: None,
            set: None,
            label_offset: None,
        }
    }

    pub fn empty() -> Inputs {
        Inputs {
            graph6: None,
            family: None,
            kind: None,
            set: None,
            label_offset: None,
        }
    }
}
