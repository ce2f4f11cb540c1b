//! Probabilities of boolean combinations of arguments, read as fuzzy events
//! over Σ: the membership of `α` in labelling `σ` is `σ(α)`, and
//! `P(α) = Σ_σ σ(α) · p(σ)` for a distribution `p` on Σ.

use std::path::Path;

use thiserror::Error;

use crate::logic::Formula;
use crate::preferential::{PreferentialError, PreferentialInterpretation};

pub const NORMALIZATION_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum ProbabilityError {
    #[error("no distribution exists over an empty set of labellings")]
    EmptySigma,
    #[error("conditioning event has probability 0")]
    ConditioningOnNullEvent,
    #[error("distribution weights must be finite and nonnegative (index {index}: {weight})")]
    InvalidWeight { index: usize, weight: f64 },
    #[error("distribution assigns no mass to any labelling")]
    ZeroMass,
    #[error("distribution index {index} outside Σ (size {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("distribution covers {found} labellings but Σ has {expected}")]
    DomainMismatch { expected: usize, found: usize },
    #[error("distribution file line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read distribution file: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Preferential(#[from] PreferentialError),
}

/// A normalized probability distribution over the canonical indices of Σ.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    weights: Vec<f64>,
}

impl Distribution {
    pub fn uniform(len: usize) -> Result<Self, ProbabilityError> {
        if len == 0 {
            return Err(ProbabilityError::EmptySigma);
        }
        Ok(Self {
            weights: vec![1.0 / len as f64; len],
        })
    }

    /// Normalizes raw nonnegative weights.
    pub fn explicit(raw: Vec<f64>) -> Result<Self, ProbabilityError> {
        if raw.is_empty() {
            return Err(ProbabilityError::EmptySigma);
        }
        if let Some((index, &weight)) = raw
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(ProbabilityError::InvalidWeight { index, weight });
        }
        let total: f64 = raw.iter().sum();
        if total <= 0.0 {
            return Err(ProbabilityError::ZeroMass);
        }
        let weights: Vec<f64> = raw.into_iter().map(|w| w / total).collect();
        debug_assert!((weights.iter().sum::<f64>() - 1.0).abs() <= 1e3 * NORMALIZATION_TOLERANCE);
        Ok(Self { weights })
    }

    /// Parses `<index> <weight>` lines; `#` starts a comment and unlisted
    /// indices get weight 0.
    pub fn parse(text: &str, len: usize) -> Result<Self, ProbabilityError> {
        let mut raw = vec![0.0; len];
        let mut seen = vec![false; len];
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| ProbabilityError::Parse {
                line: lineno + 1,
                message,
            };
            let mut parts = line.split_whitespace();
            let (Some(idx), Some(weight), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(parse_err("expected `<index> <weight>`".into()));
            };
            let index: usize = idx
                .parse()
                .map_err(|_| parse_err(format!("invalid index `{idx}`")))?;
            let weight: f64 = weight
                .parse()
                .map_err(|_| parse_err(format!("invalid weight `{weight}`")))?;
            if index >= len {
                return Err(ProbabilityError::IndexOutOfRange { index, len });
            }
            if std::mem::replace(&mut seen[index], true) {
                return Err(parse_err(format!("index {index} listed twice")));
            }
            raw[index] = weight;
        }
        Self::explicit(raw)
    }

    pub fn from_file(path: &Path, len: usize) -> Result<Self, ProbabilityError> {
        Self::parse(&std::fs::read_to_string(path)?, len)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weight(&self, index: usize) -> f64 {
        self.weights[index]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

fn check_domain(
    interp: &PreferentialInterpretation,
    p: &Distribution,
) -> Result<(), ProbabilityError> {
    if interp.is_empty() {
        return Err(ProbabilityError::EmptySigma);
    }
    if p.len() != interp.len() {
        return Err(ProbabilityError::DomainMismatch {
            expected: interp.len(),
            found: p.len(),
        });
    }
    Ok(())
}

/// `P(α) = Σ_σ σ(α) p(σ)`, summed in canonical order.
pub fn probability(
    interp: &PreferentialInterpretation,
    p: &Distribution,
    alpha: &Formula,
) -> Result<f64, ProbabilityError> {
    check_domain(interp, p)?;
    let degrees = interp.degrees(alpha)?;
    Ok(degrees
        .iter()
        .zip(p.weights())
        .map(|(d, w)| d.to_f64() * w)
        .sum())
}

/// `P(α | β) = P(α ∧ β) / P(β)`, with `∧` the session logic's t-norm.
pub fn conditional_probability(
    interp: &PreferentialInterpretation,
    p: &Distribution,
    alpha: &Formula,
    beta: &Formula,
) -> Result<f64, ProbabilityError> {
    let given = probability(interp, p, beta)?;
    if given == 0.0 {
        return Err(ProbabilityError::ConditioningOnNullEvent);
    }
    let joint = probability(interp, p, &Formula::and(alpha.clone(), beta.clone()))?;
    Ok(joint / given)
}

/// `M(α) = Σ_σ σ(α)`, the size of the fuzzy event; `0` on an empty Σ.
pub fn fuzzy_size(
    interp: &PreferentialInterpretation,
    alpha: &Formula,
) -> Result<f64, ProbabilityError> {
    let degrees = interp.degrees(alpha)?;
    let numerators: u64 = degrees.iter().map(|d| u64::from(d.numerator())).sum();
    Ok(numerators as f64 / f64::from(interp.resolution()))
}
