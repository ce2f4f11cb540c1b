//! Conditional and probabilistic reasoning over finitely-valued gradual
//! semantics of weighted argumentation graphs.
//!
//! The pipeline is: build a [`model::WeightedGraph`], enumerate its admitted
//! labellings Σ under a [`semantics::SemanticsChoice`] at resolution `n`,
//! wrap Σ in a [`preferential::PreferentialInterpretation`], then model-check
//! graded implications or compute [`probability`] of fuzzy argument events.
//! The [`io`] module provides the graph and query languages and the report
//! format used by the `gradarg` command-line tool.

pub mod io;
pub mod logic;
pub mod model;
pub mod preferential;
pub mod probability;
pub mod semantics;

pub use logic::{Formula, LogicSystem};
pub use model::{ArgId, EdgeSpec, Labelling, PhiFunction, PhiSpec, TruthDegree, WeightedGraph};
pub use preferential::{BoundKind, GradedImplication, PreferentialInterpretation, Query, Verdict};
pub use probability::Distribution;
pub use semantics::{LabellingSet, SemanticsChoice};
