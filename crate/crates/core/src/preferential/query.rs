//! Graded implications and their classical boolean combinations.

use crate::logic::Formula;
use crate::model::{Labelling, ModelError, TruthDegree};

use super::{PreferentialError, PreferentialInterpretation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    AtLeast,
    AtMost,
}

impl BoundKind {
    pub fn symbol(self) -> &'static str {
        match self {
            BoundKind::AtLeast => ">=",
            BoundKind::AtMost => "<=",
        }
    }
}

/// `antecedent → consequent ≥ l` or `antecedent → consequent ≤ u`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedImplication {
    pub antecedent: Formula,
    pub consequent: Formula,
    pub kind: BoundKind,
    pub bound: TruthDegree,
}

impl GradedImplication {
    pub fn new(
        antecedent: Formula,
        consequent: Formula,
        kind: BoundKind,
        bound: TruthDegree,
    ) -> Result<Self, PreferentialError> {
        antecedent.validate()?;
        consequent.validate()?;
        Ok(Self {
            antecedent,
            consequent,
            kind,
            bound,
        })
    }

    pub fn at_least(
        antecedent: Formula,
        consequent: Formula,
        bound: TruthDegree,
    ) -> Result<Self, PreferentialError> {
        Self::new(antecedent, consequent, BoundKind::AtLeast, bound)
    }

    pub fn at_most(
        antecedent: Formula,
        consequent: Formula,
        bound: TruthDegree,
    ) -> Result<Self, PreferentialError> {
        Self::new(antecedent, consequent, BoundKind::AtMost, bound)
    }

    /// The antecedent's body when it is exactly `T(γ)`.
    pub fn defeasible_body(&self) -> Option<&Formula> {
        match &self.antecedent {
            Formula::Typ(body) => Some(body),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Query {
    Leaf(GradedImplication),
    And(Box<Query>, Box<Query>),
    Or(Box<Query>, Box<Query>),
    Not(Box<Query>),
    Implies(Box<Query>, Box<Query>),
}

impl Query {
    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&GradedImplication> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a GradedImplication>) {
        match self {
            Query::Leaf(g) => out.push(g),
            Query::Not(q) => q.collect(out),
            Query::And(p, q) | Query::Or(p, q) | Query::Implies(p, q) => {
                p.collect(out);
                q.collect(out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub satisfied: bool,
    pub degree: TruthDegree,
    /// Size of `min_{<γ}(Σ)` when the antecedent is `T(γ)`.
    pub preferred_count: Option<usize>,
    /// First canonical labelling realizing the violating infimum of a failed
    /// `≥` bound, with its index in Σ.
    pub counterexample: Option<(usize, Labelling)>,
}

/// Model-checks one graded implication.
pub fn check_graded(
    interp: &PreferentialInterpretation,
    implication: &GradedImplication,
) -> Result<Verdict, PreferentialError> {
    if implication.bound.resolution() != interp.resolution() {
        return Err(ModelError::ResolutionMismatch {
            left: interp.resolution(),
            right: implication.bound.resolution(),
        }
        .into());
    }
    let formula = Formula::implies(
        implication.antecedent.clone(),
        implication.consequent.clone(),
    );
    let table = interp.typicality_table(&[&formula])?;
    let terms = (0..interp.len())
        .map(|i| interp.eval_at(&table, i, &formula))
        .collect::<Result<Vec<_>, _>>()?;
    let degree = interp.infimum(&terms);

    let satisfied = match implication.kind {
        BoundKind::AtLeast => degree.numerator() >= implication.bound.numerator(),
        BoundKind::AtMost => degree.numerator() <= implication.bound.numerator(),
    };
    let counterexample = if implication.kind == BoundKind::AtLeast && !satisfied {
        terms
            .iter()
            .position(|t| *t == degree)
            .map(|i| (i, interp.sigma().labellings()[i].clone()))
    } else {
        None
    };
    let preferred_count = implication
        .defeasible_body()
        .and_then(|body| table.preferred_count(body));

    Ok(Verdict {
        satisfied,
        degree,
        preferred_count,
        counterexample,
    })
}

/// Verdicts of every leaf together with the classical value of the query.
#[derive(Debug, Clone, PartialEq)]
pub struct QueryOutcome {
    pub satisfied: bool,
    pub leaves: Vec<(GradedImplication, Verdict)>,
}

pub fn evaluate_query(
    interp: &PreferentialInterpretation,
    query: &Query,
) -> Result<QueryOutcome, PreferentialError> {
    let mut leaves = Vec::new();
    let satisfied = eval_rec(interp, query, &mut leaves)?;
    Ok(QueryOutcome { satisfied, leaves })
}

fn eval_rec(
    interp: &PreferentialInterpretation,
    query: &Query,
    leaves: &mut Vec<(GradedImplication, Verdict)>,
) -> Result<bool, PreferentialError> {
    // both operands are always evaluated so the leaf list is complete
    Ok(match query {
        Query::Leaf(g) => {
            let v = check_graded(interp, g)?;
            let sat = v.satisfied;
            leaves.push((g.clone(), v));
            sat
        }
        Query::Not(q) => !eval_rec(interp, q, leaves)?,
        Query::And(p, q) => {
            let (a, b) = (eval_rec(interp, p, leaves)?, eval_rec(interp, q, leaves)?);
            a && b
        }
        Query::Or(p, q) => {
            let (a, b) = (eval_rec(interp, p, leaves)?, eval_rec(interp, q, leaves)?);
            a || b
        }
        Query::Implies(p, q) => {
            let (a, b) = (eval_rec(interp, p, leaves)?, eval_rec(interp, q, leaves)?);
            !a || b
        }
    })
}

/// Classical two-valued satisfaction of a boolean combination of graded
/// implications.
pub fn eval_query(
    interp: &PreferentialInterpretation,
    query: &Query,
) -> Result<bool, PreferentialError> {
    Ok(evaluate_query(interp, query)?.satisfied)
}
