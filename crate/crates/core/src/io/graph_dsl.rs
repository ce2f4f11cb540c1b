//! Line-oriented graph language.
//!
//! ```text
//! # comment
//! arg A
//! arg B
//! edge A B -1.0
//! phi B sigmoid | step <t> | table <x0>:<v0> <x1>:<v1> ...
//! ```
//!
//! Table values are exact fractions `k/d` or decimals; whether they lie in
//! the session's chain is checked when the semantics is validated.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::model::{ArgId, EdgeSpec, PhiFunction, PhiSpec, PhiTable, WeightedGraph};

use super::lexer::{is_identifier, RESERVED_WORDS};
use super::{parse_exact_rational, DslError};

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedGraph {
    pub graph: WeightedGraph,
    pub overrides: BTreeMap<ArgId, PhiFunction>,
}

impl ParsedGraph {
    /// Combines the file's per-argument overrides with a default function.
    pub fn phi_spec(&self, default: PhiFunction) -> PhiSpec {
        PhiSpec {
            default,
            overrides: self.overrides.clone(),
        }
    }
}

/// Whitespace-separated words with their 1-based columns, comment stripped.
fn words(line: &str) -> Vec<(usize, &str)> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in content.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, byte)),
            (true, Some((c, b))) => {
                out.push((c, &content[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c, &content[b..]));
    }
    out
}

fn is_decimal(s: &str) -> bool {
    let body = s.strip_prefix(['+', '-']).unwrap_or(s);
    !body.is_empty()
        && body
            .chars()
            .all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'))
        && body.starts_with(|c: char| c.is_ascii_digit() || c == '.')
}

fn parse_real(line: usize, column: usize, s: &str, what: &str) -> Result<f64, DslError> {
    if !is_decimal(s) {
        return Err(DslError::syntax(
            line,
            column,
            format!("expected {what}, found `{s}`"),
        ));
    }
    s.parse::<f64>()
        .map_err(|_| DslError::syntax(line, column, format!("expected {what}, found `{s}`")))
}

fn parse_name(line: usize, column: usize, s: &str) -> Result<String, DslError> {
    if !is_identifier(s) {
        return Err(DslError::syntax(
            line,
            column,
            format!("invalid argument name `{s}`"),
        ));
    }
    if RESERVED_WORDS.contains(&s) {
        return Err(DslError::syntax(
            line,
            column,
            format!("`{s}` is a reserved word"),
        ));
    }
    Ok(s.to_string())
}

fn parse_phi(line: usize, rest: &[(usize, &str)], at: usize) -> Result<PhiFunction, DslError> {
    let Some(&(col, kind)) = rest.first() else {
        return Err(DslError::syntax(
            line,
            at,
            "expected `sigmoid`, `step` or `table`",
        ));
    };
    match kind {
        "sigmoid" => {
            if let Some(&(c, extra)) = rest.get(1) {
                return Err(DslError::syntax(line, c, format!("unexpected `{extra}`")));
            }
            Ok(PhiFunction::SigmoidNearest)
        }
        "step" => match rest {
            [_, (c, t)] => Ok(PhiFunction::StepThreshold(parse_real(
                line,
                *c,
                t,
                "a threshold",
            )?)),
            [_] => Err(DslError::syntax(line, col, "`step` needs a threshold")),
            [_, _, (c, extra), ..] => {
                Err(DslError::syntax(line, *c, format!("unexpected `{extra}`")))
            }
            [] => unreachable!(),
        },
        "table" => {
            if rest.len() < 2 {
                return Err(DslError::syntax(
                    line,
                    col,
                    "`table` needs at least one <x>:<value> entry",
                ));
            }
            let mut entries = Vec::new();
            for &(c, entry) in &rest[1..] {
                let Some((x, v)) = entry.split_once(':') else {
                    return Err(DslError::syntax(
                        line,
                        c,
                        format!("expected <x>:<value>, found `{entry}`"),
                    ));
                };
                let x = parse_real(line, c, x, "a breakpoint")?;
                let v = parse_exact_rational(v).ok_or_else(|| {
                    DslError::syntax(line, c, format!("invalid table value `{v}`"))
                })?;
                entries.push((x, v));
            }
            PhiTable::new(entries)
                .map(PhiFunction::ExplicitTable)
                .map_err(|e| DslError::syntax(line, col, e.to_string()))
        }
        other => Err(DslError::syntax(
            line,
            col,
            format!("unknown phi function `{other}`"),
        )),
    }
}

/// Parses the graph language into a validated graph plus φ overrides.
pub fn parse_graph(text: &str) -> Result<ParsedGraph, DslError> {
    let mut arguments = Vec::new();
    let mut edges = Vec::new();
    let mut phis: Vec<(usize, usize, String, PhiFunction)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let ws = words(raw);
        let Some(&(col, keyword)) = ws.first() else {
            continue;
        };
        let end = raw.chars().count() + 1;
        match keyword {
            "arg" => match ws.as_slice() {
                [_, (c, name)] => arguments.push(parse_name(line, *c, name)?),
                [_] => return Err(DslError::syntax(line, end, "expected an argument name")),
                [_, _, (c, extra), ..] => {
                    return Err(DslError::syntax(line, *c, format!("unexpected `{extra}`")))
                }
                [] => unreachable!(),
            },
            "edge" => match ws.as_slice() {
                [_, (cs, src), (cd, dst), (cw, w)] => {
                    let src = parse_name(line, *cs, src)?;
                    let dst = parse_name(line, *cd, dst)?;
                    let weight = parse_real(line, *cw, w, "a weight")?;
                    edges.push(EdgeSpec::new(src, dst, weight));
                }
                [_, _, _, _, (c, extra), ..] => {
                    return Err(DslError::syntax(line, *c, format!("unexpected `{extra}`")))
                }
                _ => {
                    return Err(DslError::syntax(
                        line,
                        col,
                        "expected `edge <source> <target> <weight>`",
                    ))
                }
            },
            "phi" => {
                let Some(&(c, name)) = ws.get(1) else {
                    return Err(DslError::syntax(line, end, "expected an argument name"));
                };
                let name = parse_name(line, c, name)?;
                let phi = parse_phi(line, &ws[2..], end)?;
                phis.push((line, c, name, phi));
            }
            other => {
                return Err(DslError::syntax(
                    line,
                    col,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }

    let graph = WeightedGraph::build(&arguments, &edges)?;
    let mut overrides = BTreeMap::new();
    for (line, column, name, phi) in phis {
        let id = graph.id(&name)?;
        if overrides.insert(id, phi).is_some() {
            return Err(DslError::syntax(
                line,
                column,
                format!("second phi override for `{name}`"),
            ));
        }
    }
    Ok(ParsedGraph { graph, overrides })
}

fn write_phi(out: &mut String, phi: &PhiFunction) {
    match phi {
        PhiFunction::SigmoidNearest => out.push_str("sigmoid"),
        PhiFunction::StepThreshold(t) => {
            let _ = write!(out, "step {t:?}");
        }
        PhiFunction::ExplicitTable(table) => {
            out.push_str("table");
            for (x, v) in table.entries() {
                let _ = write!(out, " {x:?}:{}", fmt_ratio(*v));
            }
        }
    }
}

fn fmt_ratio(v: Ratio<i64>) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Serializes a graph and its overrides back into the graph language.
pub fn write_graph(graph: &WeightedGraph, overrides: &BTreeMap<ArgId, PhiFunction>) -> String {
    let mut out = String::new();
    for name in graph.names() {
        let _ = writeln!(out, "arg {name}");
    }
    for e in graph.edges() {
        let _ = writeln!(
            out,
            "edge {} {} {:?}",
            graph.name(e.source),
            graph.name(e.target),
            e.weight
        );
    }
    for (arg, phi) in overrides {
        let _ = write!(out, "phi {} ", graph.name(*arg));
        write_phi(&mut out, phi);
        out.push('\n');
    }
    out
}
