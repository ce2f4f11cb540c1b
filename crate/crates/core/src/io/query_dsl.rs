//! Query language: one statement per line.
//!
//! ```text
//! check T(A & B) -> C >= 4/5
//! check (T(A) -> B <= 0.3) and (T(C | A) -> D >= 0.6)
//! degree T(B) -> A
//! prob A given B
//! list_labellings
//! ```
//!
//! Formulas use `~ & | ->` (tightest first, `->` right-associative), with
//! `T(...)`, `true`, `false` and `label(i)`. Queries combine graded
//! implications with the words `not and or implies`, in the same order.

use num_rational::Ratio;

use crate::logic::Formula;
use crate::model::{TruthDegree, WeightedGraph};
use crate::preferential::{BoundKind, GradedImplication, Query};

use super::lexer::{tokenize, Tok, Token};
use super::{parse_exact_rational, DslError};

#[derive(Debug, Clone, PartialEq)]
pub enum StatementKind {
    Check(Query),
    Degree {
        antecedent: Formula,
        consequent: Formula,
    },
    Prob {
        event: Formula,
        given: Option<Formula>,
    },
    ListLabellings,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statement {
    pub line: usize,
    /// The statement as written, comment and surrounding blanks removed.
    pub text: String,
    pub kind: StatementKind,
}

/// Semantic errors abort backtracking; syntax errors allow another parse.
fn is_syntax(e: &DslError) -> bool {
    matches!(e, DslError::Syntax { .. })
}

fn furthest(a: DslError, b: DslError) -> DslError {
    match (&a, &b) {
        (DslError::Syntax { column: ca, .. }, DslError::Syntax { column: cb, .. }) if cb > ca => b,
        _ => a,
    }
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    line: usize,
    end_column: usize,
    graph: &'a WeightedGraph,
    resolution: u32,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn peek_word(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(w)) if w == word)
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        let found = self
            .peek()
            .map_or_else(|| "end of line".to_string(), Tok::describe);
        DslError::syntax(
            self.line,
            self.column(),
            format!("expected {wanted}, found {found}"),
        )
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), DslError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn expect_end(&self) -> Result<(), DslError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of line")),
        }
    }

    fn formula(&mut self, in_typ: bool) -> Result<Formula, DslError> {
        let lhs = self.disjunction(in_typ)?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.formula(in_typ)?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self, in_typ: bool) -> Result<Formula, DslError> {
        let mut f = self.conjunction(in_typ)?;
        while self.eat(&Tok::Pipe) {
            f = Formula::or(f, self.conjunction(in_typ)?);
        }
        Ok(f)
    }

    fn conjunction(&mut self, in_typ: bool) -> Result<Formula, DslError> {
        let mut f = self.unary(in_typ)?;
        while self.eat(&Tok::Amp) {
            f = Formula::and(f, self.unary(in_typ)?);
        }
        Ok(f)
    }

    fn unary(&mut self, in_typ: bool) -> Result<Formula, DslError> {
        if self.eat(&Tok::Tilde) {
            return Ok(Formula::not(self.unary(in_typ)?));
        }
        self.primary(in_typ)
    }

    fn primary(&mut self, in_typ: bool) -> Result<Formula, DslError> {
        let column = self.column();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula(in_typ)?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Some(Tok::Ident(word)) => {
                self.pos += 1;
                match word.as_str() {
                    "true" => Ok(Formula::Top),
                    "false" => Ok(Formula::Bot),
                    "label" => {
                        self.expect(Tok::LParen)?;
                        let index = match self.peek().cloned() {
                            Some(Tok::Number(s)) if !s.contains('.') => s
                                .parse::<usize>()
                                .map_err(|_| self.unexpected("a labelling index"))?,
                            _ => return Err(self.unexpected("a labelling index")),
                        };
                        self.pos += 1;
                        self.expect(Tok::RParen)?;
                        Ok(Formula::LabelAtom(index))
                    }
                    "T" => {
                        if in_typ {
                            return Err(DslError::NestedTypicality {
                                line: self.line,
                                column,
                            });
                        }
                        self.expect(Tok::LParen)?;
                        let body = self.formula(true)?;
                        self.expect(Tok::RParen)?;
                        Ok(Formula::Typ(Box::new(body)))
                    }
                    "and" | "or" | "not" | "implies" | "given" => {
                        self.pos -= 1;
                        Err(self.unexpected("a formula"))
                    }
                    name => match self.graph.id(name) {
                        Ok(id) => Ok(Formula::Arg(id)),
                        Err(_) => Err(DslError::UnknownArgument {
                            line: self.line,
                            column,
                            name: name.to_string(),
                        }),
                    },
                }
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn bound(&mut self) -> Result<TruthDegree, DslError> {
        let column = self.column();
        let Some(Tok::Number(first)) = self.peek().cloned() else {
            return Err(self.unexpected("a bound"));
        };
        self.pos += 1;
        let mut text = first;
        if self.eat(&Tok::Slash) {
            let Some(Tok::Number(den)) = self.peek().cloned() else {
                return Err(self.unexpected("a denominator"));
            };
            self.pos += 1;
            text = format!("{text}/{den}");
        }
        let out_of_range = || DslError::BoundOutOfRange {
            line: self.line,
            column,
            value: text.clone(),
            resolution: self.resolution,
        };
        let value = parse_exact_rational(&text).ok_or_else(out_of_range)?;
        let scaled = value * Ratio::from_integer(i64::from(self.resolution));
        if !scaled.is_integer()
            || scaled < Ratio::from_integer(0)
            || scaled > Ratio::from_integer(i64::from(self.resolution))
        {
            return Err(out_of_range());
        }
        TruthDegree::from_ratio(value, self.resolution).map_err(|_| out_of_range())
    }

    /// `<formula> -> <formula>` split at its outermost implication.
    fn implication(&mut self) -> Result<(Formula, Formula), DslError> {
        let column = self.column();
        match self.formula(false)? {
            Formula::Impl(lhs, rhs) => Ok((*lhs, *rhs)),
            _ => Err(DslError::syntax(
                self.line,
                column,
                "expected an implication `<formula> -> <formula>`",
            )),
        }
    }

    fn graded(&mut self) -> Result<GradedImplication, DslError> {
        let (antecedent, consequent) = self.implication()?;
        let kind = if self.eat(&Tok::Ge) {
            BoundKind::AtLeast
        } else if self.eat(&Tok::Le) {
            BoundKind::AtMost
        } else {
            return Err(self.unexpected("`>=` or `<=`"));
        };
        let bound = self.bound()?;
        Ok(GradedImplication {
            antecedent,
            consequent,
            kind,
            bound,
        })
    }

    fn query(&mut self) -> Result<Query, DslError> {
        let lhs = self.query_or()?;
        if self.peek_word("implies") {
            self.pos += 1;
            let rhs = self.query()?;
            return Ok(Query::Implies(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn query_or(&mut self) -> Result<Query, DslError> {
        let mut q = self.query_and()?;
        while self.peek_word("or") {
            self.pos += 1;
            q = Query::Or(Box::new(q), Box::new(self.query_and()?));
        }
        Ok(q)
    }

    fn query_and(&mut self) -> Result<Query, DslError> {
        let mut q = self.query_not()?;
        while self.peek_word("and") {
            self.pos += 1;
            q = Query::And(Box::new(q), Box::new(self.query_not()?));
        }
        Ok(q)
    }

    fn query_not(&mut self) -> Result<Query, DslError> {
        if self.peek_word("not") {
            self.pos += 1;
            return Ok(Query::Not(Box::new(self.query_not()?)));
        }
        self.query_atom()
    }

    fn query_atom(&mut self) -> Result<Query, DslError> {
        let start = self.pos;
        if self.peek() == Some(&Tok::LParen) {
            // a parenthesized query, or a leaf whose formula opens with `(`
            self.pos += 1;
            let grouped = self
                .query()
                .and_then(|q| self.expect(Tok::RParen).map(|()| q));
            match grouped {
                Ok(q) => return Ok(q),
                Err(e) if !is_syntax(&e) => return Err(e),
                Err(first) => {
                    self.pos = start;
                    return self.graded().map(Query::Leaf).map_err(|second| {
                        if is_syntax(&second) {
                            furthest(first, second)
                        } else {
                            second
                        }
                    });
                }
            }
        }
        self.graded().map(Query::Leaf)
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_statement(
    graph: &WeightedGraph,
    resolution: u32,
    line: usize,
    raw: &str,
) -> Result<Option<Statement>, DslError> {
    let content = strip_comment(raw);
    let text = content.trim();
    if text.is_empty() {
        return Ok(None);
    }
    let lead = content.chars().take_while(|c| c.is_whitespace()).count();
    let keyword: String = text
        .chars()
        .take_while(|c| !c.is_whitespace() && *c != '(')
        .collect();
    let rest_offset = lead + keyword.chars().count();
    let rest: String = content.chars().skip(rest_offset).collect();
    let mut p = Parser {
        tokens: tokenize(&rest, line, rest_offset)?,
        pos: 0,
        line,
        end_column: content.trim_end().chars().count() + 1,
        graph,
        resolution,
    };
    let kind = match keyword.as_str() {
        "check" => StatementKind::Check(p.query()?),
        "degree" => {
            let (antecedent, consequent) = p.implication()?;
            StatementKind::Degree {
                antecedent,
                consequent,
            }
        }
        "prob" => {
            let event = p.formula(false)?;
            let given = if p.peek_word("given") {
                p.pos += 1;
                Some(p.formula(false)?)
            } else {
                None
            };
            StatementKind::Prob { event, given }
        }
        "list_labellings" => StatementKind::ListLabellings,
        other => {
            return Err(DslError::syntax(
                line,
                lead + 1,
                format!("unknown statement `{other}`"),
            ))
        }
    };
    p.expect_end()?;
    Ok(Some(Statement {
        line,
        text: text.to_string(),
        kind,
    }))
}

/// Parses a query file against `graph` with every bound taken in `C_n`.
pub fn parse_queries(
    text: &str,
    graph: &WeightedGraph,
    resolution: u32,
) -> Result<Vec<Statement>, DslError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        if let Some(s) = parse_statement(graph, resolution, i + 1, raw)? {
            out.push(s);
        }
    }
    Ok(out)
}

/// Parses a single formula, reporting positions on line 1.
pub fn parse_formula(text: &str, graph: &WeightedGraph) -> Result<Formula, DslError> {
    let mut p = Parser {
        tokens: tokenize(text, 1, 0)?,
        pos: 0,
        line: 1,
        end_column: text.trim_end().chars().count() + 1,
        graph,
        resolution: 1,
    };
    let f = p.formula(false)?;
    p.expect_end()?;
    Ok(f)
}
