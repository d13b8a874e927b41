//! Line-based text formats.
//!
//! Instance files:
//!
//! ```text
//! # comment
//! vertices: u v w x
//! red: u x
//! red: u v
//! blue: u v w
//! ```
//!
//! Plain hypergraph files use `edge:` lines instead of `red:`/`blue:`.
//! Lines may come in any order, edges refer to vertices by label, and a label
//! may appear at most once per edge. Blue edges are named `B1`, `B2`, ... in
//! file order when results are printed.

use bitrans_core::{BiInstance, BitSet, Hypergraph};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    /// An edge that must be hit but has no vertices.
    #[error("line {line}: empty edge to hit, the instance has no transversal")]
    EmptyEdge { line: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Red,
    Blue,
    Edge,
}

struct Document {
    labels: Vec<String>,
    edges: Vec<(Kind, usize, BitSet)>,
}

fn parse_document(text: &str) -> Result<Document, FormatError> {
    let mut labels: Vec<String> = Vec::new();
    let mut raw_edges: Vec<(Kind, usize, Vec<&str>)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| syntax(line_no, "expected `<key>: <labels>`"))?;
        let tokens: Vec<&str> = rest.split_whitespace().collect();
        let kind = match key.trim() {
            "vertices" => {
                for tok in tokens {
                    if tok.contains('|') || tok.starts_with('#') || tok == "{}" {
                        return Err(syntax(line_no, format!("`{tok}` is not a valid label")));
                    }
                    if labels.iter().any(|l| l == tok) {
                        return Err(syntax(line_no, format!("vertex `{tok}` declared twice")));
                    }
                    labels.push(tok.to_string());
                }
                continue;
            }
            "red" => Kind::Red,
            "blue" => Kind::Blue,
            "edge" => Kind::Edge,
            other => return Err(syntax(line_no, format!("unknown key `{other}`"))),
        };
        raw_edges.push((kind, line_no, tokens));
    }
    let mut edges = Vec::with_capacity(raw_edges.len());
    for (kind, line_no, tokens) in raw_edges {
        let mut edge = BitSet::new();
        for tok in tokens {
            let v = labels
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| syntax(line_no, format!("unknown vertex `{tok}`")))?;
            if !edge.insert(v) {
                return Err(syntax(line_no, format!("vertex `{tok}` repeated in one edge")));
            }
        }
        edges.push((kind, line_no, edge));
    }
    Ok(Document { labels, edges })
}

/// A red/blue instance with its vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledInstance {
    pub labels: Vec<String>,
    pub instance: BiInstance,
}

/// A plain hypergraph with its vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledHypergraph {
    pub labels: Vec<String>,
    pub hypergraph: Hypergraph,
}

/// Parses an instance file. An empty red edge is reported as
/// [`FormatError::EmptyEdge`].
pub fn parse_instance(text: &str) -> Result<LabeledInstance, FormatError> {
    let doc = parse_document(text)?;
    let (mut red, mut blue) = (Vec::new(), Vec::new());
    for (kind, line, edge) in doc.edges {
        match kind {
            Kind::Red if edge.is_empty() => return Err(FormatError::EmptyEdge { line }),
            Kind::Red => red.push(edge),
            Kind::Blue => blue.push(edge),
            Kind::Edge => return Err(syntax(line, "`edge:` lines belong in plain hypergraph files")),
        }
    }
    let n = doc.labels.len();
    let instance = BiInstance::new(
        Hypergraph::new(n, red).expect("labels resolve inside the universe"),
        Hypergraph::new(n, blue).expect("labels resolve inside the universe"),
    )
    .expect("shared universe");
    Ok(LabeledInstance {
        labels: doc.labels,
        instance,
    })
}

/// Parses a plain hypergraph file. An empty edge is reported as
/// [`FormatError::EmptyEdge`].
pub fn parse_hypergraph(text: &str) -> Result<LabeledHypergraph, FormatError> {
    let doc = parse_document(text)?;
    let mut edges = Vec::new();
    for (kind, line, edge) in doc.edges {
        match kind {
            Kind::Edge if edge.is_empty() => return Err(FormatError::EmptyEdge { line }),
            Kind::Edge => edges.push(edge),
            _ => return Err(syntax(line, "plain hypergraph files only take `edge:` lines")),
        }
    }
    let hypergraph = Hypergraph::new(doc.labels.len(), edges).expect("labels resolve inside the universe");
    Ok(LabeledHypergraph {
        labels: doc.labels,
        hypergraph,
    })
}

fn edge_line(key: &str, labels: &[String], edge: &BitSet) -> String {
    let mut line = format!("{key}:");
    for v in edge {
        line.push(' ');
        line.push_str(&labels[v]);
    }
    line.push('\n');
    line
}

pub fn write_instance(inst: &LabeledInstance) -> String {
    let mut out = format!("vertices: {}\n", inst.labels.join(" "));
    for e in inst.instance.red().edges() {
        out.push_str(&edge_line("red", &inst.labels, e));
    }
    for e in inst.instance.blue().edges() {
        out.push_str(&edge_line("blue", &inst.labels, e));
    }
    out
}

pub fn write_hypergraph(h: &LabeledHypergraph) -> String {
    let mut out = format!("vertices: {}\n", h.labels.join(" "));
    for e in h.hypergraph.edges() {
        out.push_str(&edge_line("edge", &h.labels, e));
    }
    out
}

/// Labels of the members of `set`, sorted by label.
pub fn vertex_names(labels: &[String], set: &BitSet) -> Vec<String> {
    let mut names: Vec<String> = set.iter().map(|v| labels[v].clone()).collect();
    names.sort();
    names
}

/// `B1`, `B2`, ... for the members of a blue edge subset.
pub fn blue_names(set: &BitSet) -> Vec<String> {
    set.iter().map(|i| format!("B{}", i + 1)).collect()
}

/// Space-separated names, or `{}` for the empty set.
pub fn join_names(names: &[String]) -> String {
    if names.is_empty() {
        "{}".to_string()
    } else {
        names.join(" ")
    }
}

/// One output record. Absent halves are omitted from JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Record {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<String>>,
}

impl Record {
    pub fn text(&self) -> String {
        match (&self.s, &self.b) {
            (Some(s), Some(b)) => format!("{} | {}", join_names(s), join_names(b)),
            (Some(s), None) => join_names(s),
            (None, Some(b)) => join_names(b),
            (None, None) => String::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

pub fn render(records: &[Record], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => records.iter().map(|r| r.text() + "\n").collect(),
        OutputFormat::Json => serde_json::to_string_pretty(records).expect("records serialize") + "\n",
    }
}

/// Reads a known-solutions file: one vertex set per line, labels separated
/// by spaces, optionally followed by `| <blue names>` (ignored). `{}` stands
/// for the empty set.
pub fn parse_known(text: &str, labels: &[String]) -> Result<Vec<BitSet>, FormatError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let vertices = line.split('|').next().unwrap_or("");
        let mut set = BitSet::new();
        for tok in vertices.split_whitespace().filter(|t| *t != "{}") {
            let v = labels
                .iter()
                .position(|l| l == tok)
                .ok_or_else(|| syntax(idx + 1, format!("unknown vertex `{tok}`")))?;
            set.insert(v);
        }
        out.push(set);
    }
    Ok(out)
}
