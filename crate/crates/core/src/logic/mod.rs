//! Many-valued evaluation of boolean combinations of arguments.
//!
//! Evaluation here is purely truth-functional: the value of `T(α)` in a
//! labelling depends on all of Σ and is supplied through a
//! [`TypicalityContext`] computed by the preferential layer.

mod eval;
mod formula;
mod system;

pub use eval::{eval_plain, TypicalityContext};
pub use formula::{Formula, FormulaDisplay};
pub use system::{closure_check, LogicSystem, Rational, TruthFunctions};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("unknown argument `{0}`")]
    UnknownArgument(String),
    #[error("typicality subformula evaluated without a typicality context")]
    MissingTypicalityContext,
    #[error("label({0}) evaluated outside a labelling set")]
    MissingLabelIndex(usize),
    #[error("the typicality operator cannot be nested")]
    NestedTypicality,
}
