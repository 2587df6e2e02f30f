//! Report documents and their renderings.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::population::GraphDoc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Graphviz,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub pass: bool,
    pub body: Value,
}

impl Report {
    pub fn empty(command: &str, seed: u64) -> Self {
        Report { command: command.into(), seed, pass: true, body: Value::Object(Default::default()) }
    }
    /// The population graph carried by the body, if any.
    pub fn graph(&self) -> Option<GraphDoc> {
        serde_json::from_value(self.body.get("graph")?.clone()).ok()
    }
}

/// `None` when the format does not apply to the report.
pub fn render(r: &Report, format: Format) -> Option<String> {
    match format {
        Format::Json => Some(serde_json::to_string_pretty(r).expect("report serializes") + "\n"),
        Format::Graphviz => r.graph().map(|g| g.to_graphviz()),
        Format::Text => {
            let mut out = String::new();
            if !is_empty(&r.body) {
                let _ = writeln!(out, "{} (seed {}): {}", r.command, r.seed, if r.pass { "PASS" } else { "FAIL" });
                text(&mut out, &r.body, 0);
            }
            Some(out)
        }
    }
}

fn is_empty(v: &Value) -> bool {
    match v {
        Value::Null => true,
        Value::Object(m) => m.is_empty(),
        _ => false,
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

/// Arrays of flat objects become tables; the rest is an indented outline.
fn text(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        text(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(a) => {
            if let Some(t) = table(a) {
                for line in t {
                    let _ = writeln!(out, "{pad}{line}");
                }
            } else {
                for (i, x) in a.iter().enumerate() {
                    match scalar(x) {
                        Some(s) => {
                            let _ = writeln!(out, "{pad}- {s}");
                        }
                        None => {
                            let _ = writeln!(out, "{pad}[{i}]");
                            text(out, x, depth + 1);
                        }
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", scalar(v).unwrap_or_default());
        }
    }
}

fn table(a: &[Value]) -> Option<Vec<String>> {
    let rows: Vec<&serde_json::Map<String, Value>> = a.iter().map(|x| x.as_object()).collect::<Option<_>>()?;
    if rows.is_empty() {
        return None;
    }
    let mut cols: Vec<&String> = Vec::new();
    for r in &rows {
        for k in r.keys() {
            if !cols.contains(&k) {
                cols.push(k);
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| cols.iter().map(|k| r.get(*k).map_or(Some("-".into()), scalar)).collect::<Option<_>>())
        .collect::<Option<_>>()?;
    let width: Vec<usize> = (0..cols.len())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).chain([cols[j].chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |r: Vec<&str>| {
        r.iter().zip(&width).map(|(s, w)| format!("{s:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let mut out = vec![line(cols.iter().map(|s| s.as_str()).collect())];
    out.extend(cells.iter().map(|r| line(r.iter().map(|s| s.as_str()).collect())));
    Some(out)
}
