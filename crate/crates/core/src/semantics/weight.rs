use crate::model::{ArgId, Labelling, WeightedGraph};

use super::SemanticsError;

/// `Σ π(B, arg) · value(B)` over the edges entering `arg`, taken in edge
/// declaration order. Every path that needs a weight goes through here so
/// that identical assignments give bit-identical sums.
pub(crate) fn weighted_sum(
    graph: &WeightedGraph,
    arg: ArgId,
    resolution: u32,
    value: impl Fn(ArgId) -> u32,
) -> Option<f64> {
    if !graph.is_constrained(arg) {
        return None;
    }
    let n = f64::from(resolution);
    Some(
        graph
            .incoming(arg)
            .map(|e| e.weight * (f64::from(value(e.source)) / n))
            .sum(),
    )
}

/// Weighted support of `arg` under `labelling`; `None` when no edge enters
/// `arg`.
pub fn weight_of(
    graph: &WeightedGraph,
    labelling: &Labelling,
    arg: ArgId,
) -> Result<Option<f64>, SemanticsError> {
    if !graph.contains(arg) {
        return Err(SemanticsError::UnknownArgument(arg.to_string()));
    }
    if !labelling.fits(graph) {
        return Err(SemanticsError::LabellingShape {
            expected: graph.len(),
            found: labelling.len(),
        });
    }
    let values = labelling.numerators();
    Ok(weighted_sum(graph, arg, labelling.resolution(), |b| {
        values[b.index()]
    }))
}

/// Weights of every argument, indexed canonically.
pub(crate) fn all_weights(graph: &WeightedGraph, labelling: &Labelling) -> Vec<Option<f64>> {
    let values = labelling.numerators();
    graph
        .arguments()
        .map(|a| weighted_sum(graph, a, labelling.resolution(), |b| values[b.index()]))
        .collect()
}
