//! Weighted bipolar argumentation graphs.
//!
//! Negative edge weights are attacks, positive weights are supports. The
//! declaration order of arguments is the canonical order used for labelling
//! serialization, enumeration output and labelling-indicator indices.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use super::ModelError;

/// Position of an argument in canonical (declaration) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgId(pub usize);

impl ArgId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ArgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// An edge as supplied by the caller, by argument name.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSpec {
    pub source: String,
    pub target: String,
    pub weight: f64,
}

impl EdgeSpec {
    pub fn new(source: impl Into<String>, target: impl Into<String>, weight: f64) -> Self {
        Self {
            source: source.into(),
            target: target.into(),
            weight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub source: ArgId,
    pub target: ArgId,
    pub weight: f64,
}

impl Edge {
    pub fn is_attack(&self) -> bool {
        self.weight < 0.0
    }

    pub fn is_support(&self) -> bool {
        self.weight > 0.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    names: Vec<String>,
    index: HashMap<String, ArgId>,
    edges: Vec<Edge>,
    // per target: indices into `edges`, in edge declaration order
    incoming: Vec<Vec<usize>>,
    // per source: distinct targets, ascending
    outgoing: Vec<Vec<ArgId>>,
}

impl WeightedGraph {
    /// Validates arguments and edges and builds the graph.
    pub fn build<S: AsRef<str>>(arguments: &[S], edges: &[EdgeSpec]) -> Result<Self, ModelError> {
        let mut names = Vec::with_capacity(arguments.len());
        let mut index = HashMap::with_capacity(arguments.len());
        for (i, name) in arguments.iter().enumerate() {
            let name = name.as_ref().to_string();
            if index.insert(name.clone(), ArgId(i)).is_some() {
                return Err(ModelError::DuplicateArgument(name));
            }
            names.push(name);
        }

        let mut seen = HashSet::with_capacity(edges.len());
        let mut resolved = Vec::with_capacity(edges.len());
        let mut incoming = vec![Vec::new(); names.len()];
        let mut outgoing: Vec<BTreeSet<ArgId>> = vec![BTreeSet::new(); names.len()];
        for spec in edges {
            let lookup = |name: &str| {
                index
                    .get(name)
                    .copied()
                    .ok_or_else(|| ModelError::UnknownEndpoint(name.to_string()))
            };
            let source = lookup(&spec.source)?;
            let target = lookup(&spec.target)?;
            if !spec.weight.is_finite() || spec.weight == 0.0 {
                return Err(ModelError::ZeroOrNonfiniteWeight {
                    from: spec.source.clone(),
                    to: spec.target.clone(),
                    weight: spec.weight,
                });
            }
            if !seen.insert((source, target)) {
                return Err(ModelError::DuplicateEdge {
                    from: spec.source.clone(),
                    to: spec.target.clone(),
                });
            }
            incoming[target.0].push(resolved.len());
            outgoing[source.0].insert(target);
            resolved.push(Edge {
                source,
                target,
                weight: spec.weight,
            });
        }

        Ok(Self {
            names,
            index,
            edges: resolved,
            incoming,
            outgoing: outgoing
                .into_iter()
                .map(|s| s.into_iter().collect())
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn arguments(&self) -> impl Iterator<Item = ArgId> + '_ {
        (0..self.names.len()).map(ArgId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, arg: ArgId) -> &str {
        &self.names[arg.0]
    }

    pub fn id(&self, name: &str) -> Result<ArgId, ModelError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownArgument(name.to_string()))
    }

    pub fn contains(&self, arg: ArgId) -> bool {
        arg.0 < self.names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges entering `arg`, in declaration order.
    pub fn incoming(&self, arg: ArgId) -> impl Iterator<Item = &Edge> + '_ {
        self.incoming[arg.0].iter().map(move |&e| &self.edges[e])
    }

    /// Distinct targets of edges leaving `arg`.
    pub fn successors(&self, arg: ArgId) -> &[ArgId] {
        &self.outgoing[arg.0]
    }

    /// Whether the semantics constrains `arg` (it has at least one incoming edge).
    pub fn is_constrained(&self, arg: ArgId) -> bool {
        !self.incoming[arg.0].is_empty()
    }

    /// Sources of the edges entering `name`.
    pub fn predecessors(&self, name: &str) -> Result<BTreeSet<String>, ModelError> {
        let id = self.id(name)?;
        Ok(self
            .predecessor_ids(id)
            .map(|p| self.names[p.0].clone())
            .collect())
    }

    pub fn predecessor_ids(&self, arg: ArgId) -> impl Iterator<Item = ArgId> + '_ {
        self.incoming(arg).map(|e| e.source)
    }
}
