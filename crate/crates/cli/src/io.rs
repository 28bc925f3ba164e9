//! File formats: edge lists, step-graphon documents and CSV numbers.
//!
//! Edge list: UTF-8 text, `#` starts a comment line, an optional first
//! directive `n <N>` fixes the vertex count, every other non-empty line is
//! `<u> <v>` with 0-based ids. Without the directive the vertex count is one
//! more than the largest id.
//!
//! Step graphon: a JSON object `{"sizes": [...], "probs": [[...], ...]}`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use triprofile_core::{Graph, StepGraphon};

use crate::error::{CliError, Result};

/// Shortest form that parses back to the same `f64`, in exponent notation
/// below `1e-4` and from `1e16` on. Negative zero is written as `0`.
pub fn num(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 {
        "0".to_string()
    } else if !(1e-4..1e16).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

/// Comma-joined [`num`]s.
pub fn nums(vs: &[f64]) -> String {
    vs.iter().map(|&v| num(v)).collect::<Vec<_>>().join(",")
}

/// A real written as a decimal or as a fraction `p/q`.
pub fn parse_real(s: &str) -> Option<f64> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((p, q)) => p.trim().parse::<f64>().ok()? / q.trim().parse::<f64>().ok()?,
        None => s.parse().ok()?,
    };
    v.is_finite().then_some(v)
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

/// Parses an edge list. Errors carry the offending line number; `source`
/// names the input in messages.
pub fn parse_edge_list(text: &str, source: &str) -> Result<Graph> {
    let fail = |line: usize, msg: String| CliError::Parse {
        path: source.to_string(),
        msg: format!("line {line}: {msg}"),
    };
    let mut declared: Option<usize> = None;
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    let mut first = true;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if !first {
                return Err(fail(
                    line_no,
                    "the \"n <N>\" directive must come first".into(),
                ));
            }
            first = false;
            let n = match fields[..] {
                [_, v] => v.parse::<usize>().ok(),
                _ => None,
            };
            declared =
                Some(n.ok_or_else(|| fail(line_no, format!("expected \"n <N>\", got {line:?}")))?);
            continue;
        }
        first = false;
        let (u, v) = match fields[..] {
            [a, b] => match (a.parse::<usize>(), b.parse::<usize>()) {
                (Ok(u), Ok(v)) => (u, v),
                _ => {
                    return Err(fail(
                        line_no,
                        format!("expected two vertex ids, got {line:?}"),
                    ))
                }
            },
            _ => return Err(fail(line_no, format!("expected \"<u> <v>\", got {line:?}"))),
        };
        if u == v {
            return Err(fail(line_no, format!("self-loop at vertex {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(fail(
                    line_no,
                    format!("vertex {} is outside [0, {n})", u.max(v)),
                ));
            }
        }
        let key = (u.min(v), u.max(v));
        if let Some(prev) = seen.insert(key, line_no) {
            return Err(fail(
                line_no,
                format!(
                    "duplicate edge ({}, {}), first given on line {prev}",
                    key.0, key.1
                ),
            ));
        }
        max_id = Some(max_id.map_or(key.1, |m| m.max(key.1)));
        edges.push(key);
    }
    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Graph::from_edges(n, edges).map_err(|e| CliError::Parse {
        path: source.to_string(),
        msg: e.to_string(),
    })
}

/// Edge list with the `n <N>` directive and edges in lexicographic order.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * g.m() as usize + 16);
    let _ = writeln!(out, "n {}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphonDoc {
    sizes: Vec<f64>,
    probs: Vec<Vec<f64>>,
}

pub fn parse_graphon(text: &str, source: &str) -> Result<StepGraphon> {
    let fail = |msg: String| CliError::Parse {
        path: source.to_string(),
        msg,
    };
    let doc: GraphonDoc = serde_json::from_str(text).map_err(|e| fail(e.to_string()))?;
    StepGraphon::new(doc.sizes, doc.probs).map_err(|e| fail(e.to_string()))
}

pub fn format_graphon(w: &StepGraphon) -> String {
    let doc = GraphonDoc {
        sizes: w.sizes().to_vec(),
        probs: w.probs().to_vec(),
    };
    serde_json::to_string(&doc).expect("plain numbers serialize") + "\n"
}
