//! A session ties one graph, one resolution and one semantics to the list
//! of statements evaluated against the resulting Σ.

use log::{debug, info};
use thiserror::Error;

use crate::logic::{Formula, LogicSystem};
use crate::model::{Labelling, PhiFunction, WeightedGraph};
use crate::preferential::{
    evaluate_query, GradedImplication, PreferentialError, PreferentialInterpretation, Query,
    Verdict,
};
use crate::probability::{conditional_probability, probability, Distribution, ProbabilityError};
use crate::semantics::{
    brute_force, enumerate_with_limit, SemanticsChoice, SemanticsError, DEFAULT_BRUTE_FORCE_CAP,
};

use super::graph_dsl::parse_graph;
use super::query_dsl::{parse_queries, Statement, StatementKind};
use super::report::{
    Assignment, LabellingRecord, LeafRecord, Record, RecordKind, Report, SigmaSummary,
};
use super::DslError;

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("graph file: {0}")]
    Graph(DslError),
    #[error("query file: {0}")]
    Queries(DslError),
    #[error(transparent)]
    Semantics(#[from] SemanticsError),
    #[error("line {line}: {source}")]
    Statement {
        line: usize,
        source: PreferentialError,
    },
    #[error(transparent)]
    Probability(#[from] ProbabilityError),
    #[error("search found {search} labellings but exhaustive enumeration found {exhaustive}")]
    VerificationMismatch { search: usize, exhaustive: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum DistributionMode {
    Uniform,
    /// Contents of a distribution file, with the name shown in reports.
    Explicit {
        name: String,
        text: String,
    },
}

impl DistributionMode {
    fn describe(&self) -> String {
        match self {
            DistributionMode::Uniform => "uniform".into(),
            DistributionMode::Explicit { name, .. } => format!("explicit ({name})"),
        }
    }
}

/// Which class of labellings Σ collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SemanticsKind {
    Phi,
    Coherent,
    Faithful,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SessionOptions {
    pub resolution: u32,
    pub semantics: SemanticsKind,
    /// φ for arguments without an override in the graph file.
    pub default_phi: PhiFunction,
    pub logic: LogicSystem,
    pub distribution: DistributionMode,
    /// Largest admissible |Σ|; also bounds exhaustive verification.
    pub cap: Option<usize>,
    pub verify: bool,
}

impl Default for SessionOptions {
    fn default() -> Self {
        Self {
            resolution: 1,
            semantics: SemanticsKind::Phi,
            default_phi: PhiFunction::SigmoidNearest,
            logic: LogicSystem::Goedel,
            distribution: DistributionMode::Uniform,
            cap: None,
            verify: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Session {
    pub graph: WeightedGraph,
    pub resolution: u32,
    pub semantics: SemanticsChoice,
    pub logic: LogicSystem,
    pub distribution: DistributionMode,
    pub statements: Vec<Statement>,
    pub cap: Option<usize>,
    pub verify: bool,
    pub warnings: Vec<String>,
}

impl Session {
    /// Parses both input files and resolves the semantics.
    pub fn prepare(
        graph_text: &str,
        queries_text: &str,
        options: &SessionOptions,
    ) -> Result<Self, SessionError> {
        let parsed = parse_graph(graph_text).map_err(SessionError::Graph)?;
        let mut warnings = Vec::new();
        let semantics = match options.semantics {
            SemanticsKind::Phi => {
                SemanticsChoice::PhiCoherent(parsed.phi_spec(options.default_phi.clone()))
            }
            other => {
                if !parsed.overrides.is_empty() {
                    warnings.push(
                        "phi overrides in the graph file have no effect on this semantics".into(),
                    );
                }
                if other == SemanticsKind::Coherent {
                    SemanticsChoice::Coherent
                } else {
                    SemanticsChoice::Faithful
                }
            }
        };
        semantics.validate(options.resolution)?;
        let statements = parse_queries(queries_text, &parsed.graph, options.resolution)
            .map_err(SessionError::Queries)?;
        Ok(Self {
            graph: parsed.graph,
            resolution: options.resolution,
            semantics,
            logic: options.logic,
            distribution: options.distribution.clone(),
            statements,
            cap: options.cap,
            verify: options.verify,
            warnings,
        })
    }
}

fn assignment(graph: &WeightedGraph, l: &Labelling) -> Assignment {
    Assignment(
        graph
            .arguments()
            .map(|a| {
                let d = l.degree(a);
                (graph.name(a).to_string(), d.to_fraction_string())
            })
            .collect(),
    )
}

fn leaf_text(graph: &WeightedGraph, g: &GradedImplication) -> String {
    format!(
        "{} -> {} {} {}",
        g.antecedent.display(graph),
        g.consequent.display(graph),
        g.kind.symbol(),
        g.bound.to_fraction_string()
    )
}

fn leaf_record(graph: &WeightedGraph, g: &GradedImplication, v: &Verdict) -> LeafRecord {
    LeafRecord {
        input_text: leaf_text(graph, g),
        satisfied: v.satisfied,
        degree: v.degree.to_fraction_string(),
        preferred_count: v.preferred_count,
        counterexample: v.counterexample.as_ref().map(|(_, l)| assignment(graph, l)),
    }
}

const EMPTY_SIGMA_IMPLICATION: &str =
    "no labellings: the implication holds vacuously with degree 1";

struct Evaluator<'a> {
    session: &'a Session,
    interp: PreferentialInterpretation,
    distribution: Option<Distribution>,
}

impl Evaluator<'_> {
    /// Label references are unresolvable on an empty Σ; that is reported as
    /// a warning like every other consequence of Σ being empty.
    fn recover(
        &self,
        line: usize,
        record: &mut Record,
        err: PreferentialError,
    ) -> Result<(), SessionError> {
        match err {
            PreferentialError::LabelIndexOutOfRange { index, .. } if self.interp.is_empty() => {
                record.warnings.push(format!(
                    "label({index}) names no labelling because there are none"
                ));
                Ok(())
            }
            source => Err(SessionError::Statement { line, source }),
        }
    }

    fn check(&self, record: &mut Record, query: &Query) -> Result<(), PreferentialError> {
        let outcome = evaluate_query(&self.interp, query)?;
        let graph = &self.session.graph;
        record.satisfied = Some(outcome.satisfied);
        if let Query::Leaf(_) = query {
            let (_, v) = &outcome.leaves[0];
            record.degree = Some(v.degree.to_fraction_string());
            record.preferred_count = v.preferred_count;
            record.counterexample = v.counterexample.as_ref().map(|(_, l)| assignment(graph, l));
        } else {
            record.leaves = Some(
                outcome
                    .leaves
                    .iter()
                    .map(|(g, v)| leaf_record(graph, g, v))
                    .collect(),
            );
        }
        if self.interp.is_empty() {
            record.warnings.push(EMPTY_SIGMA_IMPLICATION.into());
        }
        Ok(())
    }

    fn degree(
        &self,
        record: &mut Record,
        antecedent: &Formula,
        consequent: &Formula,
    ) -> Result<(), PreferentialError> {
        let d = self.interp.implication_degree(antecedent, consequent)?;
        record.degree = Some(d.to_fraction_string());
        if let Formula::Typ(body) = antecedent {
            record.preferred_count = Some(self.interp.preferred_indices(body)?.len());
        }
        if self.interp.is_empty() {
            record.warnings.push(EMPTY_SIGMA_IMPLICATION.into());
        }
        Ok(())
    }

    fn prob(
        &self,
        record: &mut Record,
        event: &Formula,
        given: Option<&Formula>,
    ) -> Result<(), SessionError> {
        let Some(p) = &self.distribution else {
            // still reject malformed formulas on an empty Σ
            if let Err(e) = self.interp.degrees(event) {
                return self.recover(record.line, record, e);
            }
            record
                .warnings
                .push("no labellings: probabilities are undefined".into());
            return Ok(());
        };
        let result = match given {
            None => probability(&self.interp, p, event),
            Some(beta) => conditional_probability(&self.interp, p, event, beta),
        };
        match result {
            Ok(v) => record.probability = Some(v),
            Err(ProbabilityError::ConditioningOnNullEvent) => {
                record
                    .warnings
                    .push("the conditioning event has probability 0".into());
            }
            Err(ProbabilityError::Preferential(source)) => {
                return Err(SessionError::Statement {
                    line: record.line,
                    source,
                })
            }
            Err(e) => return Err(e.into()),
        }
        Ok(())
    }

    fn statement(&self, s: &Statement) -> Result<Record, SessionError> {
        let kind = match s.kind {
            StatementKind::Check(_) => RecordKind::Check,
            StatementKind::Degree { .. } => RecordKind::Degree,
            StatementKind::Prob { .. } => RecordKind::Prob,
            StatementKind::ListLabellings => RecordKind::ListLabellings,
        };
        let mut record = Record::new(kind, s.line, &s.text);
        let outcome = match &s.kind {
            StatementKind::Check(q) => self.check(&mut record, q),
            StatementKind::Degree {
                antecedent,
                consequent,
            } => self.degree(&mut record, antecedent, consequent),
            StatementKind::Prob { event, given } => {
                self.prob(&mut record, event, given.as_ref())?;
                Ok(())
            }
            StatementKind::ListLabellings => {
                let graph = &self.session.graph;
                record.labellings = Some(
                    self.interp
                        .sigma()
                        .iter()
                        .enumerate()
                        .map(|(index, l)| LabellingRecord {
                            index,
                            values: assignment(graph, l),
                        })
                        .collect(),
                );
                Ok(())
            }
        };
        if let Err(e) = outcome {
            let line = record.line;
            self.recover(line, &mut record, e)?;
        }
        Ok(record)
    }
}

/// Enumerates Σ once and evaluates every statement against it.
pub fn run_session(session: &Session) -> Result<Report, SessionError> {
    let limit = session.cap.unwrap_or(usize::MAX);
    let sigma = enumerate_with_limit(
        &session.graph,
        session.resolution,
        &session.semantics,
        limit,
    )?;
    info!(
        "{} labellings under {} semantics",
        sigma.len(),
        session.semantics
    );
    if session.verify {
        let cap = session.cap.map_or(DEFAULT_BRUTE_FORCE_CAP, |c| c as u128);
        let exhaustive = brute_force(&session.graph, session.resolution, &session.semantics, cap)?;
        if exhaustive.labellings() != sigma.labellings() {
            return Err(SessionError::VerificationMismatch {
                search: sigma.len(),
                exhaustive: exhaustive.len(),
            });
        }
        debug!("exhaustive enumeration agrees");
    }

    let mut sigma_warnings = session.warnings.clone();
    if sigma.is_empty() {
        sigma_warnings.push(format!(
            "no labelling satisfies the {} semantics at resolution {}",
            session.semantics, session.resolution
        ));
    }
    let distribution = if sigma.is_empty() {
        None
    } else {
        Some(match &session.distribution {
            DistributionMode::Uniform => Distribution::uniform(sigma.len())?,
            DistributionMode::Explicit { text, .. } => Distribution::parse(text, sigma.len())?,
        })
    };
    let cardinality = sigma.len();
    let evaluator = Evaluator {
        session,
        interp: PreferentialInterpretation::new(sigma, session.logic),
        distribution,
    };
    let records = session
        .statements
        .iter()
        .map(|s| evaluator.statement(s))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(Report {
        arguments: session.graph.len(),
        edges: session.graph.edges().len(),
        resolution: session.resolution,
        semantics: session.semantics.name().to_string(),
        logic: session.logic.name().to_string(),
        distribution: session.distribution.describe(),
        verified: session.verify,
        sigma: SigmaSummary {
            cardinality,
            warnings: sigma_warnings,
        },
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GRAPH: &str = "arg A\narg B\nedge A B 2.0\n";

    fn run(queries: &str, options: &SessionOptions) -> Report {
        run_session(&Session::prepare(GRAPH, queries, options).unwrap()).unwrap()
    }

    fn n2() -> SessionOptions {
        SessionOptions {
            resolution: 2,
            ..SessionOptions::default()
        }
    }

    #[test]
    fn defeasible_check_on_fixture() {
        let r = run("check T(B) -> A >= 1", &n2());
        assert_eq!(r.sigma.cardinality, 3);
        let rec = &r.records[0];
        assert_eq!(rec.satisfied, Some(true));
        assert_eq!(rec.preferred_count, Some(1));
        assert_eq!(rec.degree.as_deref(), Some("2/2"));
        assert_eq!(rec.counterexample, None);
    }

    #[test]
    fn failing_check_carries_counterexample() {
        let r = run("check B -> A >= 1/2", &n2());
        let rec = &r.records[0];
        assert_eq!(rec.satisfied, Some(false));
        assert_eq!(rec.degree.as_deref(), Some("0/2"));
        assert_eq!(
            rec.counterexample,
            Some(Assignment(vec![
                ("A".into(), "0/2".into()),
                ("B".into(), "1/2".into())
            ]))
        );
    }

    #[test]
    fn conditional_probability_on_fixture() {
        let r = run("prob A given B\nprob A & ~A", &n2());
        assert!((r.records[0].probability.unwrap() - 0.75).abs() < 1e-12);
        assert!(r.records[1].probability.unwrap() > 0.0);
    }

    #[test]
    fn labellings_in_canonical_order() {
        let r = run("list_labellings", &n2());
        let ls = r.records[0].labellings.as_ref().unwrap();
        let rendered: Vec<_> = ls.iter().map(|l| l.values.render()).collect();
        assert_eq!(
            rendered,
            ["(A=0/2, B=1/2)", "(A=1/2, B=1/2)", "(A=2/2, B=2/2)"]
        );
    }

    #[test]
    fn compound_checks_report_leaves() {
        let r = run("check (T(B) -> A >= 1) and not (B -> A >= 1/2)", &n2());
        let rec = &r.records[0];
        assert_eq!(rec.satisfied, Some(true));
        assert_eq!(rec.degree, None);
        let leaves = rec.leaves.as_ref().unwrap();
        assert_eq!(leaves.len(), 2);
        assert_eq!(leaves[0].input_text, "T(B) -> A >= 2/2");
        assert!(leaves[1].counterexample.is_some());
    }

    #[test]
    fn degree_statement() {
        let r = run("degree T(B) -> A\ndegree B -> A", &n2());
        assert_eq!(r.records[0].degree.as_deref(), Some("2/2"));
        assert_eq!(r.records[0].preferred_count, Some(1));
        assert_eq!(r.records[1].degree.as_deref(), Some("0/2"));
        assert_eq!(r.records[1].preferred_count, None);
    }

    #[test]
    fn empty_sigma_gives_warnings() {
        let options = SessionOptions {
            resolution: 1,
            ..SessionOptions::default()
        };
        let s = Session::prepare(
            "arg A\nedge A A -10",
            "check A -> A >= 1\nprob A\nprob label(0)",
            &options,
        )
        .unwrap();
        let r = run_session(&s).unwrap();
        assert_eq!(r.sigma.cardinality, 0);
        assert_eq!(r.sigma.warnings.len(), 1);
        assert_eq!(r.records[0].satisfied, Some(true));
        assert_eq!(r.records[0].warnings.len(), 1);
        assert_eq!(r.records[1].probability, None);
        assert_eq!(r.records[1].warnings.len(), 1);
        assert_eq!(r.records[2].warnings.len(), 1);
    }

    #[test]
    fn null_conditioning_event_is_a_warning() {
        let r = run("prob A given false", &n2());
        assert_eq!(r.records[0].probability, None);
        assert_eq!(
            r.records[0].warnings,
            ["the conditioning event has probability 0"]
        );
    }

    #[test]
    fn label_index_past_sigma_is_an_error() {
        let s = Session::prepare(GRAPH, "prob A\nprob A given label(3)", &n2()).unwrap();
        assert!(matches!(
            run_session(&s),
            Err(SessionError::Statement { line: 2, .. })
        ));
    }

    #[test]
    fn explicit_distribution() {
        let options = SessionOptions {
            distribution: DistributionMode::Explicit {
                name: "d.txt".into(),
                text: "0 1\n2 1\n".into(),
            },
            ..n2()
        };
        let r = run("prob A", &options);
        assert!((r.records[0].probability.unwrap() - 0.5).abs() < 1e-12);
        assert_eq!(r.distribution, "explicit (d.txt)");
    }

    #[test]
    fn verification_and_cap() {
        let options = SessionOptions {
            verify: true,
            semantics: SemanticsKind::Faithful,
            ..n2()
        };
        assert!(run("list_labellings", &options).verified);
        let capped = SessionOptions {
            cap: Some(2),
            ..n2()
        };
        let s = Session::prepare(GRAPH, "", &capped).unwrap();
        assert!(matches!(
            run_session(&s),
            Err(SessionError::Semantics(
                SemanticsError::SizeLimitExceeded { .. }
            ))
        ));
    }

    #[test]
    fn input_errors_name_their_file() {
        assert!(matches!(
            Session::prepare("arg A\nedge A Q 1", "", &n2()),
            Err(SessionError::Graph(_))
        ));
        assert!(matches!(
            Session::prepare(GRAPH, "prob Q", &n2()),
            Err(SessionError::Queries(DslError::UnknownArgument { .. }))
        ));
    }

    #[test]
    fn phi_overrides_warn_under_other_semantics() {
        let options = SessionOptions {
            semantics: SemanticsKind::Coherent,
            ..n2()
        };
        let s = Session::prepare("arg A\narg B\nedge A B 1\nphi B step 0", "", &options).unwrap();
        assert_eq!(s.semantics, SemanticsChoice::Coherent);
        assert_eq!(s.warnings.len(), 1);
    }
}
