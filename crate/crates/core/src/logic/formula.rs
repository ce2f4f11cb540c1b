use std::fmt;

use crate::model::{ArgId, WeightedGraph};

use super::LogicError;

/// Boolean combinations of arguments, extended with unnested typicality and
/// labelling-indicator atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Arg(ArgId),
    Top,
    Bot,
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Impl(Box<Formula>, Box<Formula>),
    Typ(Box<Formula>),
    /// Holds with degree 1 in the labelling at this canonical index of Σ and
    /// 0 everywhere else.
    LabelAtom(usize),
}

impl Formula {
    pub fn arg(graph: &WeightedGraph, name: &str) -> Result<Self, LogicError> {
        Ok(Formula::Arg(
            graph
                .id(name)
                .map_err(|_| LogicError::UnknownArgument(name.into()))?,
        ))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn and(f: Formula, g: Formula) -> Self {
        Formula::And(Box::new(f), Box::new(g))
    }

    pub fn or(f: Formula, g: Formula) -> Self {
        Formula::Or(Box::new(f), Box::new(g))
    }

    pub fn implies(f: Formula, g: Formula) -> Self {
        Formula::Impl(Box::new(f), Box::new(g))
    }

    /// Wraps `f` in typicality; rejects `f` that already contains one.
    pub fn typ(f: Formula) -> Result<Self, LogicError> {
        if f.contains_typicality() {
            return Err(LogicError::NestedTypicality);
        }
        Ok(Formula::Typ(Box::new(f)))
    }

    pub fn contains_typicality(&self) -> bool {
        match self {
            Formula::Typ(_) => true,
            Formula::Arg(_) | Formula::Top | Formula::Bot | Formula::LabelAtom(_) => false,
            Formula::Neg(f) => f.contains_typicality(),
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Impl(f, g) => {
                f.contains_typicality() || g.contains_typicality()
            }
        }
    }

    /// Checks the no-nesting rule for typicality.
    pub fn validate(&self) -> Result<(), LogicError> {
        match self {
            Formula::Typ(inner) if inner.contains_typicality() => Err(LogicError::NestedTypicality),
            Formula::Typ(_)
            | Formula::Arg(_)
            | Formula::Top
            | Formula::Bot
            | Formula::LabelAtom(_) => Ok(()),
            Formula::Neg(f) => f.validate(),
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Impl(f, g) => {
                f.validate()?;
                g.validate()
            }
        }
    }

    /// Bodies of the distinct `Typ` subformulas, in first-occurrence order.
    pub fn typicality_bodies(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_typ(&mut out);
        out
    }

    fn collect_typ<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Formula::Typ(inner) => {
                if !out.contains(&inner.as_ref()) {
                    out.push(inner);
                }
            }
            Formula::Arg(_) | Formula::Top | Formula::Bot | Formula::LabelAtom(_) => {}
            Formula::Neg(f) => f.collect_typ(out),
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Impl(f, g) => {
                f.collect_typ(out);
                g.collect_typ(out);
            }
        }
    }

    /// Largest labelling-indicator index mentioned, if any.
    pub fn max_label_index(&self) -> Option<usize> {
        match self {
            Formula::LabelAtom(i) => Some(*i),
            Formula::Arg(_) | Formula::Top | Formula::Bot => None,
            Formula::Neg(f) | Formula::Typ(f) => f.max_label_index(),
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Impl(f, g) => {
                f.max_label_index().max(g.max_label_index())
            }
        }
    }

    pub fn arguments(&self) -> Vec<ArgId> {
        let mut out = Vec::new();
        self.collect_args(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_args(&self, out: &mut Vec<ArgId>) {
        match self {
            Formula::Arg(a) => out.push(*a),
            Formula::Top | Formula::Bot | Formula::LabelAtom(_) => {}
            Formula::Neg(f) | Formula::Typ(f) => f.collect_args(out),
            Formula::And(f, g) | Formula::Or(f, g) | Formula::Impl(f, g) => {
                f.collect_args(out);
                g.collect_args(out);
            }
        }
    }

    /// Renders in the query-DSL syntax, fully parenthesizing binary nodes.
    pub fn display<'a>(&'a self, graph: &'a WeightedGraph) -> FormulaDisplay<'a> {
        FormulaDisplay {
            formula: self,
            graph,
        }
    }
}

pub struct FormulaDisplay<'a> {
    formula: &'a Formula,
    graph: &'a WeightedGraph,
}

impl fmt::Display for FormulaDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |g: &'_ Formula| -> String {
            FormulaDisplay {
                formula: g,
                graph: self.graph,
            }
            .to_string()
        };
        match self.formula {
            Formula::Arg(a) if self.graph.contains(*a) => write!(f, "{}", self.graph.name(*a)),
            Formula::Arg(a) => write!(f, "{a}"),
            Formula::Top => write!(f, "true"),
            Formula::Bot => write!(f, "false"),
            Formula::LabelAtom(i) => write!(f, "label({i})"),
            Formula::Neg(g) => write!(f, "~{}", sub(g)),
            Formula::Typ(g) => write!(f, "T({})", sub(g)),
            Formula::And(g, h) => write!(f, "({} & {})", sub(g), sub(h)),
            Formula::Or(g, h) => write!(f, "({} | {})", sub(g), sub(h)),
            Formula::Impl(g, h) => write!(f, "({} -> {})", sub(g), sub(h)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph() -> WeightedGraph {
        WeightedGraph::build(&["A", "B"], &[]).unwrap()
    }

    #[test]
    fn nested_typicality_rejected() {
        let g = graph();
        let a = Formula::arg(&g, "A").unwrap();
        let t = Formula::typ(a.clone()).unwrap();
        assert_eq!(Formula::typ(t.clone()), Err(LogicError::NestedTypicality));
        let nested = Formula::Typ(Box::new(Formula::and(t, a)));
        assert_eq!(nested.validate(), Err(LogicError::NestedTypicality));
    }

    #[test]
    fn typicality_bodies_are_distinct() {
        let g = graph();
        let a = Formula::arg(&g, "A").unwrap();
        let b = Formula::arg(&g, "B").unwrap();
        let ta = Formula::typ(a.clone()).unwrap();
        let f = Formula::implies(
            Formula::and(ta.clone(), Formula::typ(b.clone()).unwrap()),
            Formula::or(ta, b.clone()),
        );
        assert_eq!(f.typicality_bodies(), vec![&a, &b]);
        assert_eq!(f.display(&g).to_string(), "((T(A) & T(B)) -> (T(A) | B))");
    }
}
