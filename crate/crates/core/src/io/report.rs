//! Session reports in plain text and JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown output format `{other}` (expected text or json)"
            )),
        }
    }
}

/// Argument name to degree, kept in declaration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(pub Vec<(String, String)>);

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, degree) in &self.0 {
            map.serialize_entry(name, degree)?;
        }
        map.end()
    }
}

impl Assignment {
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|(a, d)| format!("{a}={d}")).collect();
        format!("({})", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    Check,
    Degree,
    Prob,
    ListLabellings,
}

impl RecordKind {
    pub fn name(self) -> &'static str {
        match self {
            RecordKind::Check => "check",
            RecordKind::Degree => "degree",
            RecordKind::Prob => "prob",
            RecordKind::ListLabellings => "list_labellings",
        }
    }
}

/// One graded implication inside a compound `check`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeafRecord {
    pub input_text: String,
    pub satisfied: bool,
    pub degree: String,
    pub preferred_count: Option<usize>,
    pub counterexample: Option<Assignment>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabellingRecord {
    pub index: usize,
    pub values: Assignment,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub kind: RecordKind,
    pub line: usize,
    pub input_text: String,
    pub satisfied: Option<bool>,
    pub degree: Option<String>,
    pub preferred_count: Option<usize>,
    pub counterexample: Option<Assignment>,
    pub probability: Option<f64>,
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub leaves: Option<Vec<LeafRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labellings: Option<Vec<LabellingRecord>>,
}

impl Record {
    pub(crate) fn new(kind: RecordKind, line: usize, input_text: &str) -> Self {
        Self {
            kind,
            line,
            input_text: input_text.to_string(),
            satisfied: None,
            degree: None,
            preferred_count: None,
            counterexample: None,
            probability: None,
            warnings: Vec::new(),
            leaves: None,
            labellings: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaSummary {
    pub cardinality: usize,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub arguments: usize,
    pub edges: usize,
    pub resolution: u32,
    pub semantics: String,
    pub logic: String,
    pub distribution: String,
    pub verified: bool,
    pub sigma: SigmaSummary,
    pub records: Vec<Record>,
}

fn write_verdict(
    out: &mut String,
    indent: &str,
    satisfied: Option<bool>,
    degree: Option<&str>,
    preferred_count: Option<usize>,
    counterexample: Option<&Assignment>,
) {
    if let Some(s) = satisfied {
        let _ = writeln!(out, "{indent}satisfied: {s}");
    }
    if let Some(d) = degree {
        let _ = writeln!(out, "{indent}degree: {d}");
    }
    if let Some(c) = preferred_count {
        let _ = writeln!(out, "{indent}preferred labellings: {c}");
    }
    if let Some(cx) = counterexample {
        let _ = writeln!(out, "{indent}counterexample: {}", cx.render());
    }
}

impl Report {
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => self.to_json(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "arguments: {}", self.arguments);
        let _ = writeln!(out, "edges: {}", self.edges);
        let _ = writeln!(out, "resolution: {}", self.resolution);
        let _ = writeln!(out, "semantics: {}", self.semantics);
        let _ = writeln!(out, "logic: {}", self.logic);
        let _ = writeln!(out, "distribution: {}", self.distribution);
        let verified = if self.verified {
            " (verified by exhaustive search)"
        } else {
            ""
        };
        let _ = writeln!(out, "labellings: {}{verified}", self.sigma.cardinality);
        for w in &self.sigma.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        for r in &self.records {
            let _ = writeln!(out, "\n[line {}] {}", r.line, r.input_text);
            write_verdict(
                &mut out,
                "  ",
                r.satisfied,
                r.degree.as_deref(),
                r.preferred_count,
                r.counterexample.as_ref(),
            );
            for leaf in r.leaves.iter().flatten() {
                let _ = writeln!(out, "  - {}", leaf.input_text);
                write_verdict(
                    &mut out,
                    "    ",
                    Some(leaf.satisfied),
                    Some(&leaf.degree),
                    leaf.preferred_count,
                    leaf.counterexample.as_ref(),
                );
            }
            if let Some(p) = r.probability {
                let _ = writeln!(out, "  probability: {p}");
            }
            for l in r.labellings.iter().flatten() {
                let _ = writeln!(out, "  {}: {}", l.index, l.values.render());
            }
            for w in &r.warnings {
                let _ = writeln!(out, "  warning: {w}");
            }
        }
        out
    }
}
