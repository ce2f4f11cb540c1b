//! Seeded random corpus and a from-scratch reference implementation of the
//! labelling classes, the connectives and typicality, used by the
//! integration and acceptance tests.

#![allow(dead_code)]

use gradarg::{ArgId, EdgeSpec, Formula, LogicSystem, WeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5EED_0A26;
pub const CORPUS_SIZE: usize = 200;
pub const RESOLUTIONS: [u32; 4] = [1, 2, 3, 5];

#[derive(Debug, Clone)]
pub struct Instance {
    pub names: Vec<String>,
    /// `(source, target, weight)` in declaration order.
    pub edges: Vec<(usize, usize, f64)>,
    pub graph: WeightedGraph,
}

fn random_weight(rng: &mut ChaCha8Rng) -> f64 {
    // half the weights sit on a coarse grid so that equal sums and sigmoid
    // midpoints actually occur
    if rng.gen_bool(0.5) {
        let step = rng.gen_range(1..=4) as f64 * 0.5;
        if rng.gen_bool(0.5) {
            step
        } else {
            -step
        }
    } else {
        loop {
            let w: f64 = rng.gen_range(-2.0..=2.0);
            if w != 0.0 {
                return w;
            }
        }
    }
}

pub fn random_instance(rng: &mut ChaCha8Rng) -> Instance {
    let k = rng.gen_range(1..=4usize);
    let names: Vec<String> = (0..k)
        .map(|i| ["A", "B", "C", "D"][i].to_string())
        .collect();
    let mut pairs: Vec<(usize, usize)> = (0..k).flat_map(|s| (0..k).map(move |t| (s, t))).collect();
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=6usize.min(pairs.len()));
    let edges: Vec<(usize, usize, f64)> = pairs[..m]
        .iter()
        .map(|&(s, t)| (s, t, random_weight(rng)))
        .collect();
    let specs: Vec<EdgeSpec> = edges
        .iter()
        .map(|&(s, t, w)| EdgeSpec::new(names[s].clone(), names[t].clone(), w))
        .collect();
    let graph = WeightedGraph::build(&names, &specs).expect("corpus graphs are well formed");
    Instance {
        names,
        edges,
        graph,
    }
}

pub fn corpus_with(seed: u64, size: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size).map(|_| random_instance(&mut rng)).collect()
}

pub fn corpus() -> Vec<Instance> {
    corpus_with(CORPUS_SEED, CORPUS_SIZE)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---- reference labelling classes ----------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RefSemantics {
    Coherent,
    Faithful,
    SigmoidPhi,
}

pub const ALL_REF_SEMANTICS: [RefSemantics; 3] = [
    RefSemantics::Coherent,
    RefSemantics::Faithful,
    RefSemantics::SigmoidPhi,
];

impl RefSemantics {
    pub fn choice(self) -> gradarg::SemanticsChoice {
        match self {
            RefSemantics::Coherent => gradarg::SemanticsChoice::Coherent,
            RefSemantics::Faithful => gradarg::SemanticsChoice::Faithful,
            RefSemantics::SigmoidPhi => gradarg::SemanticsChoice::phi_sigmoid(),
        }
    }
}

/// `W(a)` for every argument; `None` for arguments no edge enters.
pub fn ref_weights(inst: &Instance, values: &[u32], n: u32) -> Vec<Option<f64>> {
    let mut out = vec![None; inst.names.len()];
    for &(s, t, w) in &inst.edges {
        let term = w * (values[s] as f64 / n as f64);
        out[t] = Some(out[t].unwrap_or(0.0) + term);
    }
    out
}

/// Scans `C_n` for the member closest to the logistic value, preferring the
/// larger one on (near) ties.
pub fn ref_sigmoid_nearest(x: f64, n: u32) -> u32 {
    let s = 1.0 / (1.0 + (-x).exp());
    let mut best = 0u32;
    let mut best_dist = f64::INFINITY;
    for k in 0..=n {
        let d = (s - k as f64 / n as f64).abs();
        if d <= best_dist + 1e-12 {
            best = k;
            best_dist = best_dist.min(d);
        }
    }
    best
}

pub fn ref_is_coherent(weights: &[Option<f64>], values: &[u32]) -> bool {
    pairwise(weights, values, |lt_label, lt_weight| lt_label == lt_weight)
}

pub fn ref_is_faithful(weights: &[Option<f64>], values: &[u32]) -> bool {
    pairwise(weights, values, |lt_label, lt_weight| {
        !lt_label || lt_weight
    })
}

fn pairwise(weights: &[Option<f64>], values: &[u32], ok: impl Fn(bool, bool) -> bool) -> bool {
    for a in 0..values.len() {
        for b in 0..values.len() {
            if let (Some(wa), Some(wb)) = (weights[a], weights[b]) {
                if !ok(values[a] < values[b], wa < wb) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn ref_is_sigmoid_phi(weights: &[Option<f64>], values: &[u32], n: u32) -> bool {
    weights
        .iter()
        .zip(values)
        .all(|(w, &v)| w.is_none_or(|w| ref_sigmoid_nearest(w, n) == v))
}

pub fn ref_admits(inst: &Instance, values: &[u32], n: u32, sem: RefSemantics) -> bool {
    let w = ref_weights(inst, values, n);
    match sem {
        RefSemantics::Coherent => ref_is_coherent(&w, values),
        RefSemantics::Faithful => ref_is_faithful(&w, values),
        RefSemantics::SigmoidPhi => ref_is_sigmoid_phi(&w, values, n),
    }
}

/// Every total assignment, in lexicographic order.
pub fn all_assignments(k: usize, n: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=n).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out
}

pub fn ref_enumerate(inst: &Instance, n: u32, sem: RefSemantics) -> Vec<Vec<u32>> {
    all_assignments(inst.names.len(), n)
        .into_iter()
        .filter(|v| ref_admits(inst, v, n, sem))
        .collect()
}

// ---- reference connectives on numerators ---------------------------------

pub fn ref_eval(f: &Formula, values: &[u32], n: u32, logic: LogicSystem, index: usize) -> u32 {
    let ev = |g: &Formula| ref_eval(g, values, n, logic, index);
    match f {
        Formula::Arg(ArgId(i)) => values[*i],
        Formula::Top => n,
        Formula::Bot => 0,
        Formula::Neg(g) => n - ev(g),
        Formula::And(g, h) => {
            let (a, b) = (ev(g), ev(h));
            match logic {
                LogicSystem::Goedel => a.min(b),
                LogicSystem::Lukasiewicz => (a + b).saturating_sub(n),
            }
        }
        Formula::Or(g, h) => {
            let (a, b) = (ev(g), ev(h));
            match logic {
                LogicSystem::Goedel => a.max(b),
                LogicSystem::Lukasiewicz => (a + b).min(n),
            }
        }
        Formula::Impl(g, h) => ref_implies(ev(g), ev(h), n, logic),
        Formula::LabelAtom(i) => {
            if *i == index {
                n
            } else {
                0
            }
        }
        Formula::Typ(_) => panic!("reference evaluator is typicality-free"),
    }
}

pub fn ref_implies(a: u32, b: u32, n: u32, logic: LogicSystem) -> u32 {
    match logic {
        LogicSystem::Goedel => {
            if a <= b {
                n
            } else {
                b
            }
        }
        LogicSystem::Lukasiewicz => (n - a + b).min(n),
    }
}

/// A random typicality-free formula over the first `k` arguments.
pub fn random_formula(rng: &mut ChaCha8Rng, k: usize, depth: u32) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        return match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bot,
            _ => Formula::Arg(ArgId(rng.gen_range(0..k))),
        };
    }
    let sub = |rng: &mut ChaCha8Rng| random_formula(rng, k, depth - 1);
    match rng.gen_range(0..4) {
        0 => Formula::not(sub(rng)),
        1 => Formula::and(sub(rng), sub(rng)),
        2 => Formula::or(sub(rng), sub(rng)),
        _ => Formula::implies(sub(rng), sub(rng)),
    }
}
