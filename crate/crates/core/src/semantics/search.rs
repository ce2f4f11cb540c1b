//! Backtracking enumeration of admitted labellings.
//!
//! Degrees are assigned argument by argument. Once every predecessor of a
//! constrained argument is assigned its weight is known, so the argument is
//! *settled*: under φ-coherence its degree is forced (or checked, if it was
//! already chosen), and under coherence/faithfulness its pair condition with
//! every other settled argument is decided for good. Both prunings are sound:
//! a violated settled condition cannot be repaired by later assignments.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::model::{apply_phi, ArgId, Labelling, PhiSpec, WeightedGraph};

use super::predicates::pair_ok;
use super::weight::weighted_sum;
use super::{LabellingSet, SemanticsChoice, SemanticsError};

/// Strongly connected components in topological order (predecessors first),
/// declaration order inside each component.
pub fn search_order(graph: &WeightedGraph) -> Vec<ArgId> {
    let mut dg = DiGraph::<usize, ()>::with_capacity(graph.len(), graph.edges().len());
    let nodes: Vec<_> = graph.arguments().map(|a| dg.add_node(a.index())).collect();
    for e in graph.edges() {
        dg.add_edge(nodes[e.source.index()], nodes[e.target.index()], ());
    }
    // tarjan_scc yields components in reverse topological order
    let mut sccs = tarjan_scc(&dg);
    sccs.reverse();
    sccs.into_iter()
        .flat_map(|scc| {
            let mut members: Vec<usize> = scc.into_iter().map(|ix| dg[ix]).collect();
            members.sort_unstable();
            members.into_iter().map(ArgId)
        })
        .collect()
}

#[derive(Clone, Copy)]
enum Mode<'a> {
    Phi(&'a PhiSpec),
    Pairs { biconditional: bool },
}

struct Search<'a> {
    graph: &'a WeightedGraph,
    resolution: u32,
    mode: Mode<'a>,
    order: Vec<ArgId>,
    values: Vec<Option<u32>>,
    // incoming edges whose source is still unassigned
    pending: Vec<usize>,
    trail: Vec<ArgId>,
    settled: Vec<(ArgId, f64)>,
    found: Vec<Labelling>,
    limit: usize,
    overflow: bool,
}

impl<'a> Search<'a> {
    fn new(graph: &'a WeightedGraph, resolution: u32, mode: Mode<'a>, limit: usize) -> Self {
        Self {
            graph,
            resolution,
            mode,
            order: search_order(graph),
            values: vec![None; graph.len()],
            pending: graph
                .arguments()
                .map(|a| graph.incoming(a).count())
                .collect(),
            trail: Vec::with_capacity(graph.len()),
            settled: Vec::with_capacity(graph.len()),
            found: Vec::new(),
            limit,
            overflow: false,
        }
    }

    fn weight(&self, arg: ArgId) -> f64 {
        weighted_sum(self.graph, arg, self.resolution, |b| {
            self.values[b.index()].expect("predecessors are assigned")
        })
        .expect("settled arguments are constrained")
    }

    fn forced(&self, spec: &PhiSpec, arg: ArgId) -> u32 {
        apply_phi(spec, arg, self.weight(arg), self.resolution).numerator()
    }

    /// Checks the condition of a freshly settled argument.
    fn settle(&mut self, arg: ArgId) -> bool {
        let w = self.weight(arg);
        let label = self.values[arg.index()].expect("settled arguments are assigned");
        let ok = match self.mode {
            Mode::Phi(spec) => apply_phi(spec, arg, w, self.resolution).numerator() == label,
            Mode::Pairs { biconditional } => self.settled.iter().all(|&(other, wo)| {
                let lo = self.values[other.index()].expect("settled arguments are assigned");
                pair_ok(label, w, lo, wo, biconditional)
            }),
        };
        if ok {
            self.settled.push((arg, w));
        }
        ok
    }

    fn assign(&mut self, arg: ArgId, value: u32) -> bool {
        let mut queue = vec![(arg, value)];
        while let Some((x, vx)) = queue.pop() {
            if let Some(current) = self.values[x.index()] {
                if current != vx {
                    return false;
                }
                continue;
            }
            self.values[x.index()] = Some(vx);
            self.trail.push(x);

            let mut fresh = Vec::new();
            if self.graph.is_constrained(x) && self.pending[x.index()] == 0 {
                fresh.push(x);
            }
            for &c in self.graph.successors(x) {
                self.pending[c.index()] -= 1;
                if self.pending[c.index()] == 0 {
                    if self.values[c.index()].is_some() {
                        fresh.push(c);
                    } else if let Mode::Phi(spec) = self.mode {
                        queue.push((c, self.forced(spec, c)));
                    }
                }
            }
            for c in fresh {
                if !self.settle(c) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, trail_mark: usize, settled_mark: usize) {
        self.settled.truncate(settled_mark);
        while self.trail.len() > trail_mark {
            let x = self.trail.pop().expect("trail above mark");
            for &c in self.graph.successors(x) {
                self.pending[c.index()] += 1;
            }
            self.values[x.index()] = None;
        }
    }

    fn run(&mut self, mut pos: usize) {
        if self.overflow {
            return;
        }
        while pos < self.order.len() && self.values[self.order[pos].index()].is_some() {
            pos += 1;
        }
        if pos == self.order.len() {
            if self.found.len() == self.limit {
                self.overflow = true;
                return;
            }
            let values = self.values.iter().map(|v| v.expect("complete")).collect();
            self.found.push(
                Labelling::from_numerators(values, self.resolution).expect("degrees in range"),
            );
            return;
        }
        let arg = self.order[pos];
        for value in 0..=self.resolution {
            let (tm, sm) = (self.trail.len(), self.settled.len());
            if self.assign(arg, value) {
                self.run(pos + 1);
            }
            self.undo(tm, sm);
            if self.overflow {
                return;
            }
        }
    }
}

/// Enumerates every labelling admitted by `semantics` at resolution `n`,
/// failing once more than `limit` labellings are found.
pub fn enumerate_with_limit(
    graph: &WeightedGraph,
    resolution: u32,
    semantics: &SemanticsChoice,
    limit: usize,
) -> Result<LabellingSet, SemanticsError> {
    semantics.validate(resolution)?;
    let mode = match semantics {
        SemanticsChoice::PhiCoherent(spec) => Mode::Phi(spec),
        SemanticsChoice::Coherent => Mode::Pairs {
            biconditional: true,
        },
        SemanticsChoice::Faithful => Mode::Pairs {
            biconditional: false,
        },
    };
    let mut search = Search::new(graph, resolution, mode, limit);
    search.run(0);
    if search.overflow {
        return Err(SemanticsError::SizeLimitExceeded {
            limit: limit as u128,
        });
    }
    Ok(LabellingSet::from_unsorted(
        search.found,
        semantics.clone(),
        resolution,
    ))
}

/// Enumerates every labelling admitted by `semantics` at resolution `n`.
pub fn enumerate(
    graph: &WeightedGraph,
    resolution: u32,
    semantics: &SemanticsChoice,
) -> Result<LabellingSet, SemanticsError> {
    enumerate_with_limit(graph, resolution, semantics, usize::MAX)
}
