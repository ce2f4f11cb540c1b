//! The preferential interpretation `(C_n, Σ)` of a graph.
//!
//! Each typicality-free formula `α` induces the modular preference
//! `σ <_α σ'  iff  σ'(α) < σ(α)` on Σ. Since `C_n` is a finite chain, the
//! `<_α`-minimal labellings are exactly those attaining the maximum of
//! `σ(α)` over Σ, so `min_{<α}(Σ)` is computed as an argmax. `T(α)` keeps
//! the degree of `α` on that set and is `0` everywhere else.

mod query;

pub use query::{
    check_graded, eval_query, evaluate_query, BoundKind, GradedImplication, Query, QueryOutcome,
    Verdict,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use log::warn;
use thiserror::Error;

use crate::logic::{eval_plain, Formula, LogicError, LogicSystem, TypicalityContext};
use crate::model::{Labelling, ModelError, TruthDegree};
use crate::semantics::LabellingSet;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PreferentialError {
    #[error("preference formulas must not contain the typicality operator")]
    TypicalityInPreferenceFormula,
    #[error("labelling is not a member of Σ")]
    LabellingNotInSigma,
    #[error("label({index}) refers past the end of Σ ({len} labellings)")]
    LabelIndexOutOfRange { index: usize, len: usize },
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Σ together with the logic used to evaluate formulas in it.
///
/// Degrees of typicality bodies across Σ are memoized per formula, so
/// repeated queries about the same `T(α)` cost one pass over Σ.
pub struct PreferentialInterpretation {
    sigma: LabellingSet,
    logic: LogicSystem,
    profiles: Mutex<HashMap<Formula, Arc<TypProfile>>>,
}

impl Clone for PreferentialInterpretation {
    fn clone(&self) -> Self {
        Self::new(self.sigma.clone(), self.logic)
    }
}

impl PartialEq for PreferentialInterpretation {
    fn eq(&self, other: &Self) -> bool {
        self.sigma == other.sigma && self.logic == other.logic
    }
}

impl fmt::Debug for PreferentialInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PreferentialInterpretation")
            .field("sigma", &self.sigma)
            .field("logic", &self.logic)
            .finish_non_exhaustive()
    }
}

impl PreferentialInterpretation {
    pub fn new(sigma: LabellingSet, logic: LogicSystem) -> Self {
        Self {
            sigma,
            logic,
            profiles: Mutex::new(HashMap::new()),
        }
    }

    pub fn sigma(&self) -> &LabellingSet {
        &self.sigma
    }

    pub fn logic(&self) -> LogicSystem {
        self.logic
    }

    pub fn resolution(&self) -> u32 {
        self.sigma.resolution()
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    fn index_of(&self, labelling: &Labelling) -> Result<usize, PreferentialError> {
        self.sigma
            .index_of(labelling)
            .ok_or(PreferentialError::LabellingNotInSigma)
    }

    fn check_labels(&self, formula: &Formula) -> Result<(), PreferentialError> {
        match formula.max_label_index() {
            Some(index) if index >= self.sigma.len() => {
                Err(PreferentialError::LabelIndexOutOfRange {
                    index,
                    len: self.sigma.len(),
                })
            }
            _ => Ok(()),
        }
    }

    fn eval_typ_free(
        &self,
        index: usize,
        alpha: &Formula,
    ) -> Result<TruthDegree, PreferentialError> {
        let labelling = &self.sigma.labellings()[index];
        Ok(eval_plain(labelling, alpha, self.logic, None, Some(index))?)
    }

    fn typ_free(alpha: &Formula) -> Result<(), PreferentialError> {
        if alpha.contains_typicality() {
            Err(PreferentialError::TypicalityInPreferenceFormula)
        } else {
            Ok(())
        }
    }

    /// `σ <_α σ'`: `σ` is strictly more plausible than `σ'` for `α`.
    pub fn prefers(
        &self,
        alpha: &Formula,
        sigma: &Labelling,
        sigma_prime: &Labelling,
    ) -> Result<bool, PreferentialError> {
        Self::typ_free(alpha)?;
        let (i, j) = (self.index_of(sigma)?, self.index_of(sigma_prime)?);
        Ok(self.eval_typ_free(j, alpha)? < self.eval_typ_free(i, alpha)?)
    }

    /// Canonical indices of `min_{<α}(Σ)`.
    pub fn preferred_indices(&self, alpha: &Formula) -> Result<Vec<usize>, PreferentialError> {
        Self::typ_free(alpha)?;
        self.check_labels(alpha)?;
        let profile = self.profile(alpha)?;
        Ok(profile.preferred_indices())
    }

    /// `min_{<α}(Σ)` as a subsequence of Σ.
    pub fn preferred_labellings(
        &self,
        alpha: &Formula,
    ) -> Result<Vec<&Labelling>, PreferentialError> {
        Ok(self
            .preferred_indices(alpha)?
            .into_iter()
            .map(|i| &self.sigma.labellings()[i])
            .collect())
    }

    /// Degree of `T(α)` in `σ`.
    pub fn typicality_value(
        &self,
        sigma: &Labelling,
        alpha: &Formula,
    ) -> Result<TruthDegree, PreferentialError> {
        Self::typ_free(alpha)?;
        self.check_labels(alpha)?;
        let index = self.index_of(sigma)?;
        Ok(self.profile(alpha)?.typicality(index, self.resolution()))
    }

    fn profile(&self, alpha: &Formula) -> Result<Arc<TypProfile>, PreferentialError> {
        if let Some(p) = self
            .profiles
            .lock()
            .expect("profile cache poisoned")
            .get(alpha)
        {
            return Ok(Arc::clone(p));
        }
        let values = (0..self.sigma.len())
            .map(|i| self.eval_typ_free(i, alpha))
            .collect::<Result<Vec<_>, _>>()?;
        let profile = Arc::new(TypProfile::new(values));
        self.profiles
            .lock()
            .expect("profile cache poisoned")
            .insert(alpha.clone(), Arc::clone(&profile));
        Ok(profile)
    }

    /// Precomputes the typicality values every `T(..)` in `formulas` needs.
    pub(crate) fn typicality_table(
        &self,
        formulas: &[&Formula],
    ) -> Result<TypTable, PreferentialError> {
        let mut profiles = HashMap::new();
        for f in formulas {
            f.validate()?;
            self.check_labels(f)?;
            for body in f.typicality_bodies() {
                if !profiles.contains_key(body) {
                    profiles.insert(body.clone(), self.profile(body)?);
                }
            }
        }
        Ok(TypTable {
            profiles,
            resolution: self.resolution(),
        })
    }

    /// Evaluates a formula that may contain unnested typicality in the
    /// labelling at `index`, using a prepared table.
    pub(crate) fn eval_at(
        &self,
        table: &TypTable,
        index: usize,
        formula: &Formula,
    ) -> Result<TruthDegree, PreferentialError> {
        let ctx = TableContext { table, index };
        Ok(eval_plain(
            &self.sigma.labellings()[index],
            formula,
            self.logic,
            Some(&ctx),
            Some(index),
        )?)
    }

    /// Degree of `formula` in every labelling of Σ, in canonical order.
    pub fn degrees(&self, formula: &Formula) -> Result<Vec<TruthDegree>, PreferentialError> {
        let table = self.typicality_table(&[formula])?;
        (0..self.sigma.len())
            .map(|i| self.eval_at(&table, i, formula))
            .collect()
    }

    /// Per-labelling values `σ(lhs) ▷ σ(rhs)`.
    pub(crate) fn implication_terms(
        &self,
        lhs: &Formula,
        rhs: &Formula,
    ) -> Result<Vec<TruthDegree>, PreferentialError> {
        self.degrees(&Formula::implies(lhs.clone(), rhs.clone()))
    }

    /// `(lhs → rhs)^I = min_{σ∈Σ} σ(lhs) ▷ σ(rhs)`; `1` on an empty Σ.
    pub fn implication_degree(
        &self,
        lhs: &Formula,
        rhs: &Formula,
    ) -> Result<TruthDegree, PreferentialError> {
        let terms = self.implication_terms(lhs, rhs)?;
        Ok(self.infimum(&terms))
    }

    pub(crate) fn infimum(&self, terms: &[TruthDegree]) -> TruthDegree {
        match terms.iter().min_by_key(|d| d.numerator()) {
            Some(d) => *d,
            None => {
                warn!("implication degree over an empty set of labellings is vacuously 1");
                TruthDegree::one(self.resolution())
            }
        }
    }
}

/// Values of one typicality body across Σ.
#[derive(Debug, Clone)]
struct TypProfile {
    values: Vec<TruthDegree>,
    max: Option<u32>,
}

impl TypProfile {
    fn new(values: Vec<TruthDegree>) -> Self {
        let max = values.iter().map(|d| d.numerator()).max();
        Self { values, max }
    }

    fn is_preferred(&self, index: usize) -> bool {
        Some(self.values[index].numerator()) == self.max
    }

    fn preferred_indices(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&i| self.is_preferred(i))
            .collect()
    }

    fn typicality(&self, index: usize, resolution: u32) -> TruthDegree {
        if self.is_preferred(index) {
            self.values[index]
        } else {
            TruthDegree::zero(resolution)
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct TypTable {
    profiles: HashMap<Formula, Arc<TypProfile>>,
    resolution: u32,
}

impl TypTable {
    pub(crate) fn preferred_count(&self, body: &Formula) -> Option<usize> {
        self.profiles.get(body).map(|p| p.preferred_indices().len())
    }
}

struct TableContext<'t> {
    table: &'t TypTable,
    index: usize,
}

impl TypicalityContext for TableContext<'_> {
    fn typicality(&self, body: &Formula) -> Option<TruthDegree> {
        self.table
            .profiles
            .get(body)
            .map(|p| p.typicality(self.index, self.table.resolution))
    }
}
