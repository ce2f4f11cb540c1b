//! Weighted support, the coherent / faithful / φ-coherent labelling classes,
//! and enumeration of the admitted labellings of a graph.

mod brute;
mod predicates;
mod search;
mod weight;

pub use brute::{brute_force, DEFAULT_BRUTE_FORCE_CAP};
pub use predicates::{is_coherent, is_faithful, is_phi_coherent, satisfies};
pub use search::{enumerate, enumerate_with_limit, search_order};
pub use weight::weight_of;

use std::fmt;

use thiserror::Error;

use crate::model::{Labelling, ModelError, PhiFunction, PhiSpec};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SemanticsError {
    #[error("unknown argument {0}")]
    UnknownArgument(String),
    #[error("labelling has {found} values but the graph has {expected} arguments")]
    LabellingShape { expected: usize, found: usize },
    #[error("search space exceeds the configured cap of {limit}")]
    SizeLimitExceeded { limit: u128 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum SemanticsChoice {
    Coherent,
    Faithful,
    PhiCoherent(PhiSpec),
}

impl SemanticsChoice {
    /// φ-coherence with the nearest-to-sigmoid function for every argument.
    pub fn phi_sigmoid() -> Self {
        SemanticsChoice::PhiCoherent(PhiSpec::uniform(PhiFunction::SigmoidNearest))
    }

    pub fn name(&self) -> &'static str {
        match self {
            SemanticsChoice::Coherent => "coherent",
            SemanticsChoice::Faithful => "faithful",
            SemanticsChoice::PhiCoherent(_) => "phi-coherent",
        }
    }

    pub fn validate(&self, resolution: u32) -> Result<(), SemanticsError> {
        if resolution == 0 {
            return Err(ModelError::ZeroResolution.into());
        }
        if let SemanticsChoice::PhiCoherent(spec) = self {
            spec.check_range(resolution)?;
        }
        Ok(())
    }
}

impl fmt::Display for SemanticsChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The admitted labellings Σ of a graph, distinct and in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct LabellingSet {
    labellings: Vec<Labelling>,
    semantics: SemanticsChoice,
    resolution: u32,
}

impl LabellingSet {
    pub(crate) fn from_sorted(
        labellings: Vec<Labelling>,
        semantics: SemanticsChoice,
        resolution: u32,
    ) -> Self {
        debug_assert!(labellings.windows(2).all(|w| w[0] < w[1]));
        Self {
            labellings,
            semantics,
            resolution,
        }
    }

    pub(crate) fn from_unsorted(
        mut labellings: Vec<Labelling>,
        semantics: SemanticsChoice,
        resolution: u32,
    ) -> Self {
        labellings.sort_unstable();
        labellings.dedup();
        Self::from_sorted(labellings, semantics, resolution)
    }

    /// Builds a set from arbitrary labellings, e.g. a hand-picked Σ. Sorts
    /// and deduplicates; does not check membership in `semantics`.
    pub fn new(
        labellings: Vec<Labelling>,
        semantics: SemanticsChoice,
        resolution: u32,
    ) -> Result<Self, SemanticsError> {
        if resolution == 0 {
            return Err(ModelError::ZeroResolution.into());
        }
        if let Some(l) = labellings.iter().find(|l| l.resolution() != resolution) {
            return Err(ModelError::ResolutionMismatch {
                left: resolution,
                right: l.resolution(),
            }
            .into());
        }
        Ok(Self::from_unsorted(labellings, semantics, resolution))
    }

    pub fn len(&self) -> usize {
        self.labellings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labellings.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Labelling> {
        self.labellings.iter()
    }

    pub fn get(&self, index: usize) -> Option<&Labelling> {
        self.labellings.get(index)
    }

    pub fn labellings(&self) -> &[Labelling] {
        &self.labellings
    }

    /// Canonical index of `labelling` in Σ.
    pub fn index_of(&self, labelling: &Labelling) -> Option<usize> {
        self.labellings.binary_search(labelling).ok()
    }

    pub fn semantics(&self) -> &SemanticsChoice {
        &self.semantics
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }
}

impl<'a> IntoIterator for &'a LabellingSet {
    type Item = &'a Labelling;
    type IntoIter = std::slice::Iter<'a, Labelling>;

    fn into_iter(self) -> Self::IntoIter {
        self.labellings.iter()
    }
}
