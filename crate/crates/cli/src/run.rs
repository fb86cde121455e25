//! Executes a validated configuration into a [`ReportBundle`].

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use symlab::containment::{
    alt_bound_check, els_scan, hh_scan, lemma_equiv_check, min_slope, random_squarefree_corpus,
    ustp_scan, Target,
};
use symlab::monomial::format_monomial;
use symlab::tensor::verify_expansion_poly;
use symlab::{
    ContainmentVerdict, Error as CoreError, FacePrime, LatticePoint, Limits, SemigroupRing, Status, SumPrime,
    TensorRing,
};

use crate::config::{build_cone, build_ideal, ExperimentConfig, ExperimentKind, PrimeDecl};

/// How one experiment came out, for the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    Inconclusive,
    Counterexample,
}

/// One verdict line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub target: String,
    pub a: Option<u32>,
    pub r: Option<u32>,
    pub d: Option<i64>,
    pub status: String,
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Summary {
    Slope {
        max_ratio: Option<String>,
        uniform_slope: Option<u32>,
        hh_slope: Option<u32>,
    },
    Lemma {
        #[serde(rename = "E")]
        e: u32,
        a_holds: Option<bool>,
        b_holds: Option<bool>,
        window_artifact: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentResult {
    pub experiment: String,
    pub kind: String,
    pub target: String,
    pub outcome: Outcome,
    pub rows: Vec<Row>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<Summary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportBundle {
    pub config_hash: String,
    pub results: Vec<ExperimentResult>,
}

impl ReportBundle {
    /// 0 all verified, 1 some counterexample, 2 some inconclusive and no counterexample.
    pub fn exit_code(&self) -> i32 {
        match self.results.iter().map(|r| r.outcome).max() {
            None | Some(Outcome::Verified) => 0,
            Some(Outcome::Counterexample) => 1,
            Some(Outcome::Inconclusive) => 2,
        }
    }
}

/// SHA-256 of the canonical JSON of the config with `jobs` removed, so the hash
/// identifies the computation and not how it was scheduled.
pub fn config_hash(config: &ExperimentConfig) -> String {
    let mut c = config.clone();
    c.limits.jobs = None;
    let canonical = serde_json::to_vec(&c).expect("config serializes");
    hex::encode(Sha256::digest(&canonical))
}

/// Rings, tensors and primes built from the declarations; failures are kept per name.
struct Workspace {
    primes: BTreeMap<String, Result<Target, String>>,
}

impl Workspace {
    fn build(config: &ExperimentConfig, limits: Limits) -> Workspace {
        let rings: BTreeMap<&str, Result<Arc<SemigroupRing>, String>> = config
            .rings
            .iter()
            .map(|(name, decl)| {
                let ring = build_cone(decl, limits.dim_cap)
                    .and_then(|c| SemigroupRing::new(c, limits))
                    .map(Arc::new)
                    .map_err(|e| format!("ring `{name}`: {e}"));
                (name.as_str(), ring)
            })
            .collect();
        let ring = |name: &str| rings[name].clone();
        let tensors: BTreeMap<&str, Result<Arc<TensorRing>, String>> = config
            .tensors
            .iter()
            .map(|(name, factors)| {
                let t = factors
                    .iter()
                    .map(|f| ring(f))
                    .collect::<Result<Vec<_>, _>>()
                    .and_then(|fs| TensorRing::new(fs, limits).map_err(|e| format!("tensor `{name}`: {e}")))
                    .map(Arc::new);
                (name.as_str(), t)
            })
            .collect();
        let face = |decl: &PrimeDecl| -> Result<FacePrime, String> {
            let PrimeDecl::Face { ring: r, face_normals } = decl else {
                unreachable!("validated as a face prime")
            };
            FacePrime::from_normals(ring(r)?, face_normals).map_err(|e| e.to_string())
        };
        let primes = config
            .primes
            .iter()
            .map(|(name, decl)| {
                let target = match decl {
                    PrimeDecl::Face { .. } => face(decl).map(Target::Face),
                    PrimeDecl::Sum { tensor, components } => tensors[tensor.as_str()].clone().and_then(|t| {
                        let comps = components
                            .iter()
                            .map(|c| face(&config.primes[c]))
                            .collect::<Result<Vec<_>, _>>()?;
                        SumPrime::new(t, comps).map(Target::Sum).map_err(|e| e.to_string())
                    }),
                    other => build_ideal(other).expect("ideal declaration").map(Target::Squarefree),
                };
                (name.clone(), target.map_err(|e| format!("prime `{name}`: {e}")))
            })
            .collect();
        Workspace { primes }
    }

    fn target(&self, name: &str) -> Result<&Target, String> {
        self.primes[name].as_ref().map_err(Clone::clone)
    }
}

fn witness_text(target: &Target, b: &LatticePoint) -> String {
    match target {
        Target::Squarefree(_) => format_monomial(b),
        _ => b.to_string(),
    }
}

fn note(status: &Status) -> Option<String> {
    match status {
        Status::Inconclusive(why) => Some(why.clone()),
        _ => None,
    }
}

fn verdict_row(target_name: &str, target: Option<&Target>, v: &ContainmentVerdict) -> Row {
    let witness = match &v.status {
        Status::Counterexample(b) => Some(match target {
            Some(t) => witness_text(t, b),
            None => format_monomial(b),
        }),
        _ => None,
    };
    Row {
        target: target_name.to_string(),
        a: Some(v.symbolic_exponent),
        r: v.ordinary_exponent,
        d: v.degree_bound,
        status: v.status.label().to_string(),
        witness,
        note: note(&v.status),
    }
}

fn worst(rows: &[Row]) -> Outcome {
    rows.iter()
        .map(|r| match r.status.as_str() {
            "counterexample" => Outcome::Counterexample,
            "inconclusive" => Outcome::Inconclusive,
            _ => Outcome::Verified,
        })
        .max()
        .unwrap_or(Outcome::Verified)
}

struct Computed {
    target: String,
    outcome: Outcome,
    rows: Vec<Row>,
    summary: Option<Summary>,
}

fn scan_rows(name: &str, target: &Target, verdicts: Result<Vec<ContainmentVerdict>, CoreError>) -> Result<Computed, String> {
    let rows: Vec<Row> = verdicts
        .map_err(|e| e.to_string())?
        .iter()
        .map(|v| verdict_row(name, Some(target), v))
        .collect();
    Ok(Computed { target: name.to_string(), outcome: worst(&rows), rows, summary: None })
}

fn execute(config: &ExperimentConfig, ws: &Workspace, kind: &ExperimentKind) -> Result<Computed, String> {
    let d = config.max_degree_for(kind);
    match kind {
        ExperimentKind::VerifyExpansion { target: Some(t), n_max, .. } => {
            let Target::Sum(q) = ws.target(t)? else { unreachable!("validated as a sum prime") };
            let rows: Vec<Row> = (1..=*n_max)
                .map(|n| verdict_row(t, None, &q.verify_expansion(n, d)))
                .collect();
            Ok(Computed { target: t.clone(), outcome: worst(&rows), rows, summary: None })
        }
        ExperimentKind::VerifyExpansion { ideals: Some(pair), n_max, .. } => {
            let (Target::Squarefree(i), Target::Squarefree(j)) = (ws.target(&pair[0])?, ws.target(&pair[1])?) else {
                unreachable!("validated as squarefree ideals")
            };
            let name = format!("{}+{}", pair[0], pair[1]);
            let rows = (1..=*n_max)
                .map(|n| {
                    verify_expansion_poly(i, j, n)
                        .map(|v| verdict_row(&name, None, &v))
                        .map_err(|e| e.to_string())
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Computed { target: name, outcome: worst(&rows), rows, summary: None })
        }
        ExperimentKind::VerifyExpansion { .. } => unreachable!("validated"),
        ExperimentKind::HhScan { target, e, r_max, .. } => {
            let t = ws.target(target)?;
            scan_rows(target, t, hh_scan(t, *e, *r_max, d))
        }
        ExperimentKind::UstpScan { target, d: slope, r_max, .. } => {
            let t = ws.target(target)?;
            scan_rows(target, t, ustp_scan(t, *slope, *r_max, d))
        }
        ExperimentKind::AltBound { target, d: slope, r_max, .. } => {
            let t = ws.target(target)?;
            let Target::Sum(q) = t else { unreachable!("validated as a sum prime") };
            scan_rows(target, t, alt_bound_check(q, *slope, *r_max, d))
        }
        ExperimentKind::ElsScan { target, r_max } => {
            let t = ws.target(target)?;
            let Target::Squarefree(i) = t else { unreachable!("validated as squarefree") };
            scan_rows(target, t, els_scan(i, *r_max))
        }
        ExperimentKind::MinSlope { target, r_max, .. } => {
            let t = ws.target(target)?;
            let rep = min_slope(t, *r_max, d).map_err(|e| e.to_string())?;
            let rows = rep
                .rows
                .iter()
                .map(|row| {
                    let witness = row.witness.as_ref().or(match &row.status {
                        Status::Counterexample(b) => Some(b),
                        _ => None,
                    });
                    Row {
                        target: target.clone(),
                        a: row.a_min,
                        r: Some(row.r),
                        d: rep.degree_bound,
                        status: row.status.label().to_string(),
                        witness: witness.map(|b| witness_text(t, b)),
                        note: note(&row.status),
                    }
                })
                .collect();
            let resolved = rep.rows.iter().all(|r| r.a_min.is_some());
            Ok(Computed {
                target: target.clone(),
                outcome: if resolved { Outcome::Verified } else { Outcome::Inconclusive },
                rows,
                summary: Some(Summary::Slope {
                    max_ratio: rep.max_ratio.map(|(p, q)| format!("{p}/{q}")),
                    uniform_slope: rep.uniform_slope,
                    hh_slope: rep.hh_slope,
                }),
            })
        }
        ExperimentKind::LemmaEquiv { target, e, n_max, r_max, .. } => {
            let t = ws.target(target)?;
            let rep = lemma_equiv_check(t, *e, *n_max, *r_max, d).map_err(|e| e.to_string())?;
            let rows = rep
                .a_verdicts
                .iter()
                .chain(&rep.b_verdicts)
                .map(|v| verdict_row(target, Some(t), v))
                .collect();
            let outcome = match (rep.a_holds, rep.b_holds) {
                (Some(x), Some(y)) if x == y => Outcome::Verified,
                _ => Outcome::Inconclusive,
            };
            Ok(Computed {
                target: target.clone(),
                outcome,
                rows,
                summary: Some(Summary::Lemma {
                    e: rep.e,
                    a_holds: rep.a_holds,
                    b_holds: rep.b_holds,
                    window_artifact: rep.window_artifact,
                }),
            })
        }
        ExperimentKind::CorpusHh { num_vars, count, r_max, seed } => {
            let seed = seed.or(config.seed).unwrap_or(0);
            let corpus = random_squarefree_corpus(*num_vars, *count, seed).map_err(|e| e.to_string())?;
            let mut rows = Vec::new();
            for ideal in &corpus {
                let e = ideal.big_height().map_err(|e| e.to_string())? as u32;
                let t = Target::Squarefree(ideal.clone());
                let name = ideal.to_string();
                rows.extend(scan_rows(&name, &t, hh_scan(&t, e, *r_max, 0))?.rows);
            }
            Ok(Computed {
                target: format!("corpus(num_vars={num_vars}, count={count}, seed={seed})"),
                outcome: worst(&rows),
                rows,
                summary: None,
            })
        }
    }
}

/// Target column for an experiment that failed before producing rows.
fn declared_target(kind: &ExperimentKind) -> String {
    match kind {
        ExperimentKind::VerifyExpansion { target: Some(t), .. } => t.clone(),
        ExperimentKind::VerifyExpansion { ideals: Some(p), .. } => p.join("+"),
        ExperimentKind::VerifyExpansion { .. } => String::new(),
        ExperimentKind::HhScan { target, .. }
        | ExperimentKind::UstpScan { target, .. }
        | ExperimentKind::AltBound { target, .. }
        | ExperimentKind::ElsScan { target, .. }
        | ExperimentKind::MinSlope { target, .. }
        | ExperimentKind::LemmaEquiv { target, .. } => target.clone(),
        ExperimentKind::CorpusHh { .. } => "corpus".to_string(),
    }
}

/// Runs every experiment on a pool of `jobs` threads (all cores when `None`).
///
/// A failing experiment yields an `inconclusive` result carrying the error; the
/// others still run. Results come back in config order whatever the scheduling.
pub fn run(config: &ExperimentConfig, jobs: Option<usize>) -> ReportBundle {
    let limits = config.limits.core();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.or(config.limits.jobs).unwrap_or(0))
        .build()
        .expect("thread pool");
    let results = pool.install(|| {
        let ws = Workspace::build(config, limits);
        config
            .experiments
            .par_iter()
            .enumerate()
            .map(|(i, spec)| {
                let start = Instant::now();
                let computed = execute(config, &ws, &spec.kind);
                let elapsed = start.elapsed();
                let experiment = config.experiment_id(i);
                let kind = spec.kind.name().to_string();
                match computed {
                    Ok(c) => ExperimentResult {
                        experiment,
                        kind,
                        target: c.target,
                        outcome: c.outcome,
                        rows: c.rows,
                        summary: c.summary,
                        error: None,
                        elapsed,
                    },
                    Err(message) => ExperimentResult {
                        experiment,
                        kind,
                        target: declared_target(&spec.kind),
                        outcome: Outcome::Inconclusive,
                        rows: Vec::new(),
                        summary: None,
                        error: Some(message),
                        elapsed,
                    },
                }
            })
            .collect()
    });
    ReportBundle { config_hash: config_hash(config), results }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse_config;

    #[test]
    fn empty_experiment_list() {
        let c = parse_config(r#"{"experiments":[]}"#).unwrap();
        let b = run(&c, Some(1));
        assert!(b.results.is_empty());
        assert_eq!(b.exit_code(), 0);
        assert_eq!(b.config_hash.len(), 64);
    }

    #[test]
    fn hash_ignores_jobs_only() {
        let a = parse_config(r#"{"experiments":[],"limits":{"jobs":1}}"#).unwrap();
        let b = parse_config(r#"{"experiments":[],"limits":{"jobs":8}}"#).unwrap();
        let c = parse_config(r#"{"experiments":[],"limits":{"jobs":8,"max_degree":3}}"#).unwrap();
        assert_eq!(config_hash(&a), config_hash(&b));
        assert_ne!(config_hash(&b), config_hash(&c));
    }

    #[test]
    fn a1_min_slope_rows() {
        let c = parse_config(
            r#"{"rings":{"R":"A1"},"primes":{"P":{"ring":"R","face_normals":[0]}},
                "experiments":[{"kind":"min_slope","target":"P","r_max":3,"degree":8}]}"#,
        )
        .unwrap();
        let b = run(&c, Some(2));
        let res = &b.results[0];
        assert_eq!(res.outcome, Outcome::Verified);
        let a: Vec<_> = res.rows.iter().map(|r| r.a).collect();
        assert_eq!(a, vec![Some(1), Some(3), Some(5)]);
        assert_eq!(res.rows[1].witness.as_deref(), Some("(1,2)"));
        assert_eq!(
            res.summary,
            Some(Summary::Slope { max_ratio: Some("5/3".into()), uniform_slope: Some(2), hh_slope: Some(2) })
        );
    }

    #[test]
    fn failures_stay_inside_their_experiment() {
        let c = parse_config(
            r#"{"rings":{"R":"A1"},"primes":{"P":{"ring":"R","face_normals":[0]}},
                "experiments":[{"kind":"hh_scan","target":"P","E":2,"r_max":2},
                               {"kind":"hh_scan","target":"P","E":2,"r_max":2,"degree":4000}],
                "limits":{"point_cap":500}}"#,
        )
        .unwrap();
        let b = run(&c, Some(1));
        assert_eq!(b.results[0].outcome, Outcome::Verified);
        assert_eq!(b.results[1].outcome, Outcome::Inconclusive);
        assert!(b.results[1].rows[0].note.as_deref().unwrap().contains("cap"));
        assert_eq!(b.exit_code(), 2);
    }

    #[test]
    fn counterexamples_set_exit_one() {
        let c = parse_config(
            r#"{"rings":{"R":"A1"},"primes":{"P":{"ring":"R","face_normals":[0]}},
                "experiments":[{"kind":"hh_scan","target":"P","E":1,"r_max":2}]}"#,
        )
        .unwrap();
        let b = run(&c, None);
        assert_eq!(b.results[0].outcome, Outcome::Counterexample);
        assert_eq!(b.results[0].rows[1].witness.as_deref(), Some("(1,2)"));
        assert_eq!(b.exit_code(), 1);
    }

    #[test]
    fn lemma_agreement_is_verified_even_when_both_fail() {
        let c = parse_config(
            r#"{"rings":{"R":"A1"},"primes":{"P":{"ring":"R","face_normals":[0]}},
                "experiments":[{"kind":"lemma_equiv","target":"P","E":1,"N_max":4,"r_max":3,"degree":6}]}"#,
        )
        .unwrap();
        let b = run(&c, Some(1));
        assert_eq!(b.results[0].outcome, Outcome::Verified);
        assert_eq!(
            b.results[0].summary,
            Some(Summary::Lemma { e: 1, a_holds: Some(false), b_holds: Some(false), window_artifact: false })
        );
    }

    #[test]
    fn squarefree_witnesses_print_as_monomials() {
        let c = parse_config(
            r#"{"primes":{"I":{"ideal":"x1*x2 + x2*x3 + x1*x3"}},
                "experiments":[{"kind":"ustp_scan","target":"I","D":1,"r_max":2},
                               {"kind":"corpus_hh","num_vars":4,"count":3,"r_max":2}],"seed":11}"#,
        )
        .unwrap();
        let b = run(&c, Some(1));
        assert_eq!(b.results[0].rows[1].witness.as_deref(), Some("x1*x2*x3"));
        assert_eq!(b.results[1].rows.len(), 6);
        assert_eq!(b.results[1].outcome, Outcome::Verified);
        assert!(b.results[1].target.contains("seed=11"));
    }
}
