//! Text formats and machine-readable results.
//!
//! ```text
//! digraph <n>          graph <n>            coloring <n> <k>
//! u v                  u v      (u < v)     v c
//! ```
//!
//! One record per line, 0-based, single spaces, LF endings. Blank lines are
//! skipped on input and never emitted.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{GraphError, ParseError, ParseErrorKind};
use crate::graph::{BaseGraph, Digraph, DigraphBuilder};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next nonblank line as (1-based number, fields).
    fn next_record(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let fields: Vec<&str> = line.split_whitespace().collect();
            if !fields.is_empty() {
                return Some((i + 1, fields));
            }
        }
        None
    }
}

fn err(line: usize, kind: impl Into<ParseErrorKind>) -> ParseError {
    ParseError {
        line,
        kind: kind.into(),
    }
}

fn int(line: usize, s: &str) -> Result<usize, ParseError> {
    s.parse()
        .map_err(|_| err(line, ParseErrorKind::NotAnInteger(s.to_string())))
}

fn pair(line: usize, fields: &[&str]) -> Result<(usize, usize), ParseError> {
    if fields.len() != 2 {
        return Err(err(
            line,
            ParseErrorKind::FieldCount {
                expected: 2,
                got: fields.len(),
            },
        ));
    }
    Ok((int(line, fields[0])?, int(line, fields[1])?))
}

/// Header `keyword <ints...>`, returning the integers.
fn header(
    lines: &mut Lines,
    keyword: &str,
    expected: &'static str,
    arity: usize,
) -> Result<Vec<usize>, ParseError> {
    let (line, fields) = lines
        .next_record()
        .ok_or_else(|| err(1, ParseErrorKind::Empty))?;
    if fields[0] != keyword || fields.len() != arity + 1 {
        return Err(err(line, ParseErrorKind::Header { expected }));
    }
    fields[1..].iter().map(|f| int(line, f)).collect()
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = Lines::new(text);
    let n = header(&mut lines, "digraph", "digraph <n>", 1)?[0];
    let mut builder = DigraphBuilder::new(n);
    while let Some((line, fields)) = lines.next_record() {
        let (u, v) = pair(line, &fields)?;
        builder.push(u, v).map_err(|e| err(line, e))?;
    }
    Ok(builder.finish())
}

pub fn parse_base(text: &str) -> Result<BaseGraph, ParseError> {
    let mut lines = Lines::new(text);
    let n = header(&mut lines, "graph", "graph <n>", 1)?[0];
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    while let Some((line, fields)) = lines.next_record() {
        let (u, v) = pair(line, &fields)?;
        if u >= n || v >= n {
            return Err(err(
                line,
                GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                },
            ));
        }
        if u == v {
            return Err(err(line, GraphError::Loop { vertex: u }));
        }
        if u > v {
            return Err(err(line, ParseErrorKind::EdgeOrder));
        }
        if !seen.insert((u, v)) {
            return Err(err(line, GraphError::DuplicateEdge { u, v }));
        }
        edges.push((u, v));
    }
    BaseGraph::new(n, edges).map_err(|e| err(lines.last, e))
}

/// Reads a coloring file; labels are canonicalized in vertex order.
pub fn parse_coloring(text: &str) -> Result<Coloring, ParseError> {
    let mut lines = Lines::new(text);
    let h = header(&mut lines, "coloring", "coloring <n> <k>", 2)?;
    let (n, k) = (h[0], h[1]);
    let mut raw: Vec<Option<usize>> = vec![None; n];
    while let Some((line, fields)) = lines.next_record() {
        let (v, c) = pair(line, &fields)?;
        if v >= n {
            return Err(err(line, GraphError::VertexOutOfRange { vertex: v, n }));
        }
        if c >= k {
            return Err(err(line, ParseErrorKind::ColorOutOfRange { color: c, k }));
        }
        if raw[v].replace(c).is_some() {
            return Err(err(line, ParseErrorKind::DuplicateVertex { vertex: v }));
        }
    }
    let end = lines.last.max(1);
    let raw: Vec<usize> = raw
        .iter()
        .enumerate()
        .map(|(v, c)| c.ok_or_else(|| err(end, ParseErrorKind::MissingVertex { vertex: v })))
        .collect::<Result<_, _>>()?;
    let coloring = Coloring::canonicalize(&raw);
    if coloring.k() != k {
        return Err(err(
            1,
            ParseErrorKind::ColorCount {
                declared: k,
                used: coloring.k(),
            },
        ));
    }
    Ok(coloring)
}

pub fn emit_digraph(d: &Digraph) -> String {
    let mut s = format!("digraph {}\n", d.n());
    for &(u, v) in d.arcs() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn emit_base(g: &BaseGraph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn emit_coloring(c: &Coloring) -> String {
    let mut s = format!("coloring {} {}\n", c.len(), c.k());
    for (v, &col) in c.assignment().iter().enumerate() {
        let _ = writeln!(s, "{v} {col}");
    }
    s
}

/// Envelope for every CLI result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub command: String,
    pub inputs: BTreeMap<String, serde_json::Value>,
    pub outputs: serde_json::Value,
}

impl RunResult {
    pub fn new(command: &str, outputs: impl Serialize) -> Self {
        Self {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            outputs: serde_json::to_value(outputs).expect("outputs serialize to JSON"),
        }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        self.inputs.insert(
            key.to_string(),
            serde_json::to_value(value).expect("inputs serialize to JSON"),
        );
        self
    }
}

/// Pretty JSON with object keys sorted at every level.
pub fn emit_json(result: &RunResult) -> String {
    // serde_json's default map is ordered, so a round trip through Value
    // sorts the keys of derived structs as well
    let value = serde_json::to_value(result).expect("RunResult serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("Value serializes");
    s.push('\n');
    s
}

/// One orientation sweep summarized for tabular output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub n: usize,
    pub mode: String,
    pub orientations: u64,
    pub infeasible: u64,
    pub min: Option<usize>,
    pub max: Option<usize>,
    pub formula: Option<usize>,
    pub matches_formula: Option<bool>,
    pub distribution: BTreeMap<usize, u64>,
    pub argmin_codes: Vec<String>,
    pub argmin_overflow: bool,
    pub elapsed_ms: u64,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    family: &'a str,
    n: usize,
    mode: &'a str,
    orientations: u64,
    infeasible: u64,
    min: Option<usize>,
    max: Option<usize>,
    formula: Option<usize>,
    matches_formula: Option<bool>,
    elapsed_ms: u64,
}

/// CSV of sweep rows in the given order; the distribution and code lists
/// are JSON-only.
pub fn emit_csv(rows: &[SweepRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(CsvRow {
            family: &r.family,
            n: r.n,
            mode: &r.mode,
            orientations: r.orientations,
            infeasible: r.infeasible,
            min: r.min,
            max: r.max,
            formula: r.formula,
            matches_formula: r.matches_formula,
            elapsed_ms: r.elapsed_ms,
        })
        .expect("in-memory CSV write");
    }
    if rows.is_empty() {
        return String::new();
    }
    String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
}
