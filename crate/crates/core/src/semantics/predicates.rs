//! Membership tests for the three labelling classes.
//!
//! Arguments without incoming edges are never constrained. Weight
//! comparisons are exact comparisons of the computed double sums.

use crate::model::{apply_phi, Labelling, PhiSpec, WeightedGraph};

use super::weight::all_weights;
use super::SemanticsChoice;

/// Pair condition between two constrained arguments, given their labels and
/// weights. `biconditional` selects coherence, otherwise faithfulness.
pub(crate) fn pair_ok(la: u32, wa: f64, lb: u32, wb: f64, biconditional: bool) -> bool {
    let forward = |l1: u32, w1: f64, l2: u32, w2: f64| {
        if biconditional {
            (l1 < l2) == (w1 < w2)
        } else {
            !(l1 < l2) || w1 < w2
        }
    };
    forward(la, wa, lb, wb) && forward(lb, wb, la, wa)
}

fn pairwise(graph: &WeightedGraph, labelling: &Labelling, biconditional: bool) -> bool {
    let weights = all_weights(graph, labelling);
    let labels = labelling.numerators();
    let constrained: Vec<(u32, f64)> = weights
        .iter()
        .enumerate()
        .filter_map(|(i, w)| w.map(|w| (labels[i], w)))
        .collect();
    constrained.iter().enumerate().all(|(i, &(la, wa))| {
        constrained[i + 1..]
            .iter()
            .all(|&(lb, wb)| pair_ok(la, wa, lb, wb, biconditional))
    })
}

/// `σ(A) < σ(B) ⟺ W(A) < W(B)` for all constrained pairs.
pub fn is_coherent(graph: &WeightedGraph, labelling: &Labelling) -> bool {
    labelling.fits(graph) && pairwise(graph, labelling, true)
}

/// `σ(A) < σ(B) ⟹ W(A) < W(B)` for all constrained pairs.
pub fn is_faithful(graph: &WeightedGraph, labelling: &Labelling) -> bool {
    labelling.fits(graph) && pairwise(graph, labelling, false)
}

/// `σ(A) = φ_A(W(A))` for every constrained argument.
///
/// `spec` must range in the labelling's chain (see [`PhiSpec::check_range`]).
pub fn is_phi_coherent(graph: &WeightedGraph, labelling: &Labelling, spec: &PhiSpec) -> bool {
    if !labelling.fits(graph) {
        return false;
    }
    let n = labelling.resolution();
    all_weights(graph, labelling)
        .into_iter()
        .zip(graph.arguments())
        .all(|(w, a)| match w {
            None => true,
            Some(w) => labelling.numerators()[a.index()] == apply_phi(spec, a, w, n).numerator(),
        })
}

/// Dispatches to the predicate of `semantics`.
pub fn satisfies(
    graph: &WeightedGraph,
    labelling: &Labelling,
    semantics: &SemanticsChoice,
) -> bool {
    match semantics {
        SemanticsChoice::Coherent => is_coherent(graph, labelling),
        SemanticsChoice::Faithful => is_faithful(graph, labelling),
        SemanticsChoice::PhiCoherent(spec) => is_phi_coherent(graph, labelling, spec),
    }
}
