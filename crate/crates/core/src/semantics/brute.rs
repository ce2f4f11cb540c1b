use crate::model::{Labelling, WeightedGraph};

use super::predicates::satisfies;
use super::{LabellingSet, SemanticsChoice, SemanticsError};

pub const DEFAULT_BRUTE_FORCE_CAP: u128 = 10_000_000;

/// Filters every one of the `(n+1)^|A|` total assignments through the class
/// predicate. Independent of the search in [`super::enumerate`]; meant as an
/// oracle for small graphs.
pub fn brute_force(
    graph: &WeightedGraph,
    resolution: u32,
    semantics: &SemanticsChoice,
    cap: u128,
) -> Result<LabellingSet, SemanticsError> {
    semantics.validate(resolution)?;
    let base = u128::from(resolution) + 1;
    let total = u32::try_from(graph.len())
        .ok()
        .and_then(|k| base.checked_pow(k))
        .unwrap_or(u128::MAX);
    if total > cap {
        return Err(SemanticsError::SizeLimitExceeded { limit: cap });
    }

    let mut found = Vec::new();
    let mut digits = vec![0u32; graph.len()];
    loop {
        let candidate =
            Labelling::from_numerators(digits.clone(), resolution).expect("digits in range");
        if satisfies(graph, &candidate, semantics) {
            found.push(candidate);
        }
        // odometer, last position fastest: yields canonical order directly
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return Ok(LabellingSet::from_sorted(
                    found,
                    semantics.clone(),
                    resolution,
                ));
            }
            pos -= 1;
            if digits[pos] < resolution {
                digits[pos] += 1;
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::EdgeSpec;

    #[test]
    fn self_attack() {
        let g = WeightedGraph::build(&["A"], &[EdgeSpec::new("A", "A", -10.0)]).unwrap();
        // σ(A)=1 gives φ(-10)=0; σ(A)=0 gives W=0 and φ(0)=sigmoid 0.5, which
        // rounds up to 1. Neither candidate is a fixpoint.
        let set = brute_force(
            &g,
            1,
            &SemanticsChoice::phi_sigmoid(),
            DEFAULT_BRUTE_FORCE_CAP,
        )
        .unwrap();
        assert!(set.is_empty());

        // with a strict step at 0 the zero labelling is a fixpoint
        let step = SemanticsChoice::PhiCoherent(crate::model::PhiSpec::uniform(
            crate::model::PhiFunction::StepThreshold(0.0),
        ));
        let set = brute_force(&g, 1, &step, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set.get(0).unwrap().numerators(), &[0]);
    }

    #[test]
    fn cap_exceeded() {
        let names: Vec<String> = (0..8).map(|i| format!("A{i}")).collect();
        let g = WeightedGraph::build(&names, &[]).unwrap();
        assert!(matches!(
            brute_force(&g, 9, &SemanticsChoice::Coherent, DEFAULT_BRUTE_FORCE_CAP),
            Err(SemanticsError::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn empty_graph_has_one_labelling() {
        let g = WeightedGraph::build::<&str>(&[], &[]).unwrap();
        let set = brute_force(&g, 3, &SemanticsChoice::Faithful, 10).unwrap();
        assert_eq!(set.len(), 1);
    }
}
