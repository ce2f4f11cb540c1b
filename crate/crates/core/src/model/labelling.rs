use std::fmt;

use super::{ArgId, ModelError, TruthDegree, WeightedGraph};

/// A total assignment of degrees to the arguments of a graph, stored by
/// canonical argument position.
///
/// The derived ordering is lexicographic over canonical positions with
/// degrees ascending, which is the canonical order of labelling sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Labelling {
    values: Vec<u32>,
    resolution: u32,
}

impl Labelling {
    pub fn new(values: Vec<TruthDegree>, resolution: u32) -> Result<Self, ModelError> {
        if resolution == 0 {
            return Err(ModelError::ZeroResolution);
        }
        let mut raw = Vec::with_capacity(values.len());
        for v in values {
            if v.resolution() != resolution {
                return Err(ModelError::ResolutionMismatch {
                    left: resolution,
                    right: v.resolution(),
                });
            }
            raw.push(v.numerator());
        }
        Ok(Self {
            values: raw,
            resolution,
        })
    }

    /// Builds from raw numerators over `resolution`.
    pub fn from_numerators(values: Vec<u32>, resolution: u32) -> Result<Self, ModelError> {
        if resolution == 0 {
            return Err(ModelError::ZeroResolution);
        }
        if let Some(&bad) = values.iter().find(|&&v| v > resolution) {
            return Err(ModelError::DegreeOutOfRange {
                numerator: bad,
                resolution,
            });
        }
        Ok(Self { values, resolution })
    }

    /// Builds a labelling for `graph` from `(name, numerator)` pairs covering
    /// every argument exactly once.
    pub fn from_named(
        graph: &WeightedGraph,
        pairs: &[(&str, u32)],
        resolution: u32,
    ) -> Result<Self, ModelError> {
        let mut values = vec![None; graph.len()];
        for &(name, k) in pairs {
            let id = graph.id(name)?;
            values[id.index()] = Some(TruthDegree::new(k, resolution)?.numerator());
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| ModelError::IncompleteLabelling(graph.name(ArgId(i)).into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { values, resolution })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn resolution(&self) -> u32 {
        self.resolution
    }

    pub fn numerators(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, arg: ArgId) -> Option<TruthDegree> {
        self.values.get(arg.index()).map(|&k| {
            TruthDegree::new(k, self.resolution).expect("labelling numerators are in range")
        })
    }

    pub fn degree(&self, arg: ArgId) -> TruthDegree {
        self.get(arg).expect("argument belongs to this labelling")
    }

    /// Whether this labelling is defined for exactly the arguments of `graph`.
    pub fn fits(&self, graph: &WeightedGraph) -> bool {
        self.values.len() == graph.len()
    }

    pub fn display<'a>(&'a self, graph: &'a WeightedGraph) -> LabellingDisplay<'a> {
        LabellingDisplay {
            labelling: self,
            graph,
        }
    }
}

/// Renders `(A=k/n, B=k/n, ...)` in canonical order.
pub struct LabellingDisplay<'a> {
    labelling: &'a Labelling,
    graph: &'a WeightedGraph,
}

impl fmt::Display for LabellingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.labelling.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(
                f,
                "{}={}/{}",
                self.graph.name(ArgId(i)),
                k,
                self.labelling.resolution
            )?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_lexicographic() {
        let a = Labelling::from_numerators(vec![0, 2], 2).unwrap();
        let b = Labelling::from_numerators(vec![1, 0], 2).unwrap();
        let c = Labelling::from_numerators(vec![1, 1], 2).unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn from_named_requires_total_assignment() {
        let g = WeightedGraph::build(&["A", "B"], &[]).unwrap();
        assert!(matches!(
            Labelling::from_named(&g, &[("A", 1)], 2),
            Err(ModelError::IncompleteLabelling(_))
        ));
        let l = Labelling::from_named(&g, &[("B", 2), ("A", 1)], 2).unwrap();
        assert_eq!(l.numerators(), &[1, 2]);
        assert_eq!(l.display(&g).to_string(), "(A=1/2, B=2/2)");
    }
}
