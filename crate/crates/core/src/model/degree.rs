//! Exact truth degrees in the finite chain `C_n = {0, 1/n, ..., 1}`.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use super::ModelError;

/// A degree `numerator / resolution` with `0 <= numerator <= resolution`.
///
/// Degrees carry their resolution so that mixing chains can be detected.
/// `PartialOrd` returns `None` across resolutions; use [`TruthDegree::try_cmp`]
/// when the mismatch must surface as an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruthDegree {
    numerator: u32,
    resolution: u32,
}

impl TruthDegree {
    pub fn new(numerator: u32, resolution: u32) -> Result<Self, ModelError> {
        if resolution == 0 {
            return Err(ModelError::ZeroResolution);
        }
        if numerator > resolution {
            return Err(ModelError::DegreeOutOfRange {
                numerator,
                resolution,
            });
        }
        Ok(Self {
            numerator,
            resolution,
        })
    }

    pub fn zero(resolution: u32) -> Self {
        assert!(resolution > 0, "resolution must be positive");
        Self {
            numerator: 0,
            resolution,
        }
    }

    pub fn one(resolution: u32) -> Self {
        assert!(resolution > 0, "resolution must be positive");
        Self {
            numerator: resolution,
            resolution,
        }
    }

    /// Every member of `C_n` in ascending order.
    pub fn chain(resolution: u32) -> impl Iterator<Item = TruthDegree> {
        assert!(resolution > 0, "resolution must be positive");
        (0..=resolution).map(move |k| TruthDegree {
            numerator: k,
            resolution,
        })
    }

    /// Converts an exact rational into `C_n`, failing if it is not a member.
    pub fn from_ratio(value: Ratio<i64>, resolution: u32) -> Result<Self, ModelError> {
        if resolution == 0 {
            return Err(ModelError::ZeroResolution);
        }
        let scaled = value * Ratio::from_integer(i64::from(resolution));
        if !scaled.is_integer()
            || scaled < Ratio::zero()
            || scaled.to_integer() > i64::from(resolution)
        {
            return Err(ModelError::NotInChain {
                value: value.to_string(),
                resolution,
            });
        }
        Ok(Self {
            numerator: scaled.to_integer() as u32,
            resolution,
        })
    }

    pub fn numerator(self) -> u32 {
        self.numerator
    }

    pub fn resolution(self) -> u32 {
        self.resolution
    }

    pub fn ratio(self) -> Ratio<i64> {
        Ratio::new(i64::from(self.numerator), i64::from(self.resolution))
    }

    pub fn to_f64(self) -> f64 {
        self.ratio().to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(self) -> bool {
        self.numerator == 0
    }

    pub fn is_one(self) -> bool {
        self.numerator == self.resolution
    }

    /// Exact comparison; rejects degrees drawn from different chains.
    pub fn try_cmp(self, other: TruthDegree) -> Result<Ordering, ModelError> {
        if self.resolution != other.resolution {
            return Err(ModelError::ResolutionMismatch {
                left: self.resolution,
                right: other.resolution,
            });
        }
        Ok(self.numerator.cmp(&other.numerator))
    }

    /// `k/n` with the session resolution kept as denominator.
    pub fn to_fraction_string(self) -> String {
        format!("{}/{}", self.numerator, self.resolution)
    }
}

impl PartialOrd for TruthDegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(*other).ok()
    }
}

impl fmt::Display for TruthDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.resolution)
    }
}
