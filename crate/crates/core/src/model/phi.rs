//! Activation functions `φ: ℝ → C_n` used by the φ-coherent semantics,
//! with optional per-argument overrides.

use std::collections::BTreeMap;

use num_rational::Ratio;
use num_traits::{One, Zero};

use super::{ArgId, ModelError, TruthDegree};

/// Distances closer than this are treated as an exact midpoint.
pub const SIGMOID_TIE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum PhiFunction {
    /// Member of `C_n` nearest to the logistic sigmoid; midpoints round up.
    SigmoidNearest,
    /// `1` if `x > threshold`, else `0`.
    StepThreshold(f64),
    ExplicitTable(PhiTable),
}

/// A piecewise-constant function given by breakpoints `x_0 < ... < x_m`.
///
/// The value attached to `x_i` holds on `[x_i, x_{i+1})`; inputs below `x_0`
/// map to `0`. Values are exact rationals and must belong to the session's
/// chain, see [`PhiSpec::check_range`].
#[derive(Debug, Clone, PartialEq)]
pub struct PhiTable {
    entries: Vec<(f64, Ratio<i64>)>,
    monotone: bool,
}

impl PhiTable {
    pub fn new(entries: Vec<(f64, Ratio<i64>)>) -> Result<Self, ModelError> {
        if entries.is_empty() {
            return Err(ModelError::InvalidPhiTable(
                "table needs at least one breakpoint".into(),
            ));
        }
        for (x, v) in &entries {
            if !x.is_finite() {
                return Err(ModelError::InvalidPhiTable(format!(
                    "breakpoint {x} is not finite"
                )));
            }
            if *v < Ratio::zero() || *v > Ratio::one() {
                return Err(ModelError::InvalidPhiTable(format!(
                    "value {v} outside [0,1]"
                )));
            }
        }
        if entries.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(ModelError::InvalidPhiTable(
                "breakpoints must be strictly increasing".into(),
            ));
        }
        let monotone = entries.windows(2).all(|w| w[0].1 <= w[1].1);
        Ok(Self { entries, monotone })
    }

    pub fn entries(&self) -> &[(f64, Ratio<i64>)] {
        &self.entries
    }

    /// Non-decreasing over the whole real line (the implicit `0` below
    /// `x_0` never breaks monotonicity).
    pub fn is_monotone(&self) -> bool {
        self.monotone
    }

    fn value_at(&self, x: f64) -> Ratio<i64> {
        // last breakpoint <= x
        let pos = self.entries.partition_point(|(b, _)| *b <= x);
        if pos == 0 {
            Ratio::zero()
        } else {
            self.entries[pos - 1].1
        }
    }
}

pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// Nearest member of `C_n` to `s ∈ [0,1]`, midpoints resolved upward.
pub(crate) fn nearest_in_chain(s: f64, resolution: u32) -> u32 {
    let n = f64::from(resolution);
    let scaled = s * n;
    let lower = scaled.floor().clamp(0.0, n);
    if lower >= n {
        return resolution;
    }
    let below = s - lower / n;
    let above = (lower + 1.0) / n - s;
    let k = lower as u32;
    if (below - above).abs() <= SIGMOID_TIE_TOLERANCE || above < below {
        k + 1
    } else {
        k
    }
}

impl PhiFunction {
    pub fn is_monotone(&self) -> bool {
        match self {
            PhiFunction::SigmoidNearest | PhiFunction::StepThreshold(_) => true,
            PhiFunction::ExplicitTable(t) => t.is_monotone(),
        }
    }

    /// Evaluates at resolution `n`.
    ///
    /// Panics if a table value is not in `C_n`; callers validate with
    /// [`PhiSpec::check_range`] first.
    pub fn apply(&self, x: f64, resolution: u32) -> TruthDegree {
        match self {
            PhiFunction::SigmoidNearest => {
                TruthDegree::new(nearest_in_chain(sigmoid(x), resolution), resolution)
                    .expect("nearest member lies in the chain")
            }
            PhiFunction::StepThreshold(t) => {
                if x > *t {
                    TruthDegree::one(resolution)
                } else {
                    TruthDegree::zero(resolution)
                }
            }
            PhiFunction::ExplicitTable(table) => {
                TruthDegree::from_ratio(table.value_at(x), resolution)
                    .expect("table values validated against the resolution")
            }
        }
    }

    fn check_range(&self, resolution: u32) -> Result<(), ModelError> {
        match self {
            PhiFunction::ExplicitTable(table) => {
                for (_, v) in table.entries() {
                    TruthDegree::from_ratio(*v, resolution)?;
                }
                Ok(())
            }
            PhiFunction::StepThreshold(t) if !t.is_finite() => Err(ModelError::InvalidPhiTable(
                format!("step threshold {t} is not finite"),
            )),
            _ => Ok(()),
        }
    }
}

/// One default function plus per-argument overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiSpec {
    pub default: PhiFunction,
    pub overrides: BTreeMap<ArgId, PhiFunction>,
}

impl Default for PhiSpec {
    fn default() -> Self {
        Self::uniform(PhiFunction::SigmoidNearest)
    }
}

impl PhiSpec {
    pub fn uniform(default: PhiFunction) -> Self {
        Self {
            default,
            overrides: BTreeMap::new(),
        }
    }

    pub fn with_override(mut self, arg: ArgId, phi: PhiFunction) -> Self {
        self.overrides.insert(arg, phi);
        self
    }

    pub fn function_for(&self, arg: ArgId) -> &PhiFunction {
        self.overrides.get(&arg).unwrap_or(&self.default)
    }

    /// Every function in the spec ranges in `C_n`.
    pub fn check_range(&self, resolution: u32) -> Result<(), ModelError> {
        if resolution == 0 {
            return Err(ModelError::ZeroResolution);
        }
        self.default.check_range(resolution)?;
        self.overrides
            .values()
            .try_for_each(|f| f.check_range(resolution))
    }

    pub fn is_monotone(&self) -> bool {
        self.default.is_monotone() && self.overrides.values().all(PhiFunction::is_monotone)
    }
}

/// The φ evaluation step: the function assigned to `arg` applied to `x`.
pub fn apply_phi(spec: &PhiSpec, arg: ArgId, x: f64, resolution: u32) -> TruthDegree {
    spec.function_for(arg).apply(x, resolution)
}
