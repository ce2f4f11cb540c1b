//! Text formats, session orchestration and report rendering.

mod graph_dsl;
mod lexer;
mod query_dsl;
mod report;
mod session;

use num_rational::Ratio;
use thiserror::Error;

use crate::model::ModelError;

pub use graph_dsl::{parse_graph, write_graph, ParsedGraph};
pub use lexer::RESERVED_WORDS;
pub use query_dsl::{parse_formula, parse_queries, Statement, StatementKind};
pub use report::{
    Assignment, LabellingRecord, LeafRecord, OutputFormat, Record, RecordKind, Report, SigmaSummary,
};
pub use session::{
    run_session, DistributionMode, SemanticsKind, Session, SessionError, SessionOptions,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: typicality operators cannot be nested")]
    NestedTypicality { line: usize, column: usize },
    #[error("line {line}, column {column}: bound `{value}` is not a degree of C_{resolution}")]
    BoundOutOfRange {
        line: usize,
        column: usize,
        value: String,
        resolution: u32,
    },
    #[error("line {line}, column {column}: unknown argument `{name}`")]
    UnknownArgument {
        line: usize,
        column: usize,
        name: String,
    },
    #[error(transparent)]
    Graph(#[from] ModelError),
}

impl DslError {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        DslError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

/// Reads `k/d` or a plain decimal such as `0.25` as an exact rational.
pub(crate) fn parse_exact_rational(text: &str) -> Option<Ratio<i64>> {
    if let Some((k, d)) = text.split_once('/') {
        let k: i64 = k.trim().parse().ok()?;
        let d: i64 = d.trim().parse().ok()?;
        return (d != 0).then(|| Ratio::new(k, d));
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty()
        || !int.chars().all(|c| c.is_ascii_digit())
        || !frac.chars().all(|c| c.is_ascii_digit())
    {
        return None;
    }
    if frac.len() > 18 {
        return None;
    }
    let denom = 10i64.checked_pow(frac.len() as u32)?;
    let digits: i64 = format!("{int}{frac}").parse().ok()?;
    let r = Ratio::new(digits, denom);
    Some(if negative { -r } else { r })
}
