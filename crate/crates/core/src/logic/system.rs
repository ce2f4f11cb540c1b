//! Truth functions for the connectives over `C_n`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::model::TruthDegree;

pub type Rational = Ratio<i64>;

/// The four truth functions of a many-valued logic, stated over exact
/// rationals so that closure on a chain can be checked independently.
pub trait TruthFunctions {
    fn tnorm(&self, a: Rational, b: Rational) -> Rational;
    fn snorm(&self, a: Rational, b: Rational) -> Rational;
    fn implication(&self, a: Rational, b: Rational) -> Rational;
    fn negation(&self, a: Rational) -> Rational;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LogicSystem {
    /// min / max / Gödel residuum, with involutive negation `1 - a`.
    #[default]
    Goedel,
    /// Truncated sums with `min(1, 1 - a + b)` implication.
    Lukasiewicz,
}

impl TruthFunctions for LogicSystem {
    fn tnorm(&self, a: Rational, b: Rational) -> Rational {
        match self {
            LogicSystem::Goedel => a.min(b),
            LogicSystem::Lukasiewicz => (a + b - Rational::one()).max(Rational::zero()),
        }
    }

    fn snorm(&self, a: Rational, b: Rational) -> Rational {
        match self {
            LogicSystem::Goedel => a.max(b),
            LogicSystem::Lukasiewicz => (a + b).min(Rational::one()),
        }
    }

    fn implication(&self, a: Rational, b: Rational) -> Rational {
        match self {
            LogicSystem::Goedel => {
                if a <= b {
                    Rational::one()
                } else {
                    b
                }
            }
            LogicSystem::Lukasiewicz => (Rational::one() - a + b).min(Rational::one()),
        }
    }

    fn negation(&self, a: Rational) -> Rational {
        Rational::one() - a
    }
}

impl LogicSystem {
    pub const ALL: [LogicSystem; 2] = [LogicSystem::Goedel, LogicSystem::Lukasiewicz];

    pub fn name(self) -> &'static str {
        match self {
            LogicSystem::Goedel => "goedel",
            LogicSystem::Lukasiewicz => "lukasiewicz",
        }
    }

    fn lift(result: Rational, resolution: u32) -> TruthDegree {
        TruthDegree::from_ratio(result, resolution).expect("built-in logics are closed on C_n")
    }

    pub fn and(self, a: TruthDegree, b: TruthDegree) -> TruthDegree {
        debug_assert_eq!(a.resolution(), b.resolution());
        Self::lift(self.tnorm(a.ratio(), b.ratio()), a.resolution())
    }

    pub fn or(self, a: TruthDegree, b: TruthDegree) -> TruthDegree {
        debug_assert_eq!(a.resolution(), b.resolution());
        Self::lift(self.snorm(a.ratio(), b.ratio()), a.resolution())
    }

    pub fn implies(self, a: TruthDegree, b: TruthDegree) -> TruthDegree {
        debug_assert_eq!(a.resolution(), b.resolution());
        Self::lift(self.implication(a.ratio(), b.ratio()), a.resolution())
    }

    pub fn not(self, a: TruthDegree) -> TruthDegree {
        Self::lift(self.negation(a.ratio()), a.resolution())
    }
}

impl fmt::Display for LogicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LogicSystem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "goedel" | "godel" | "gödel" => Ok(LogicSystem::Goedel),
            "lukasiewicz" | "łukasiewicz" => Ok(LogicSystem::Lukasiewicz),
            other => Err(format!("unknown logic `{other}`")),
        }
    }
}

fn in_chain(value: Rational, n: i64) -> bool {
    let scaled = value * Rational::from_integer(n);
    scaled.is_integer() && value >= Rational::zero() && value <= Rational::one()
}

/// Exhaustively checks that all four truth functions map `C_n` into `C_n`.
pub fn closure_check<L: TruthFunctions + ?Sized>(logic: &L, resolution: u32) -> bool {
    if resolution == 0 {
        return false;
    }
    let n = i64::from(resolution);
    let chain: Vec<Rational> = (0..=n).map(|k| Rational::new(k, n)).collect();
    chain.iter().all(|&a| in_chain(logic.negation(a), n))
        && chain.iter().all(|&a| {
            chain.iter().all(|&b| {
                in_chain(logic.tnorm(a, b), n)
                    && in_chain(logic.snorm(a, b), n)
                    && in_chain(logic.implication(a, b), n)
            })
        })
}
