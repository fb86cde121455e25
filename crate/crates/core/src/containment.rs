//! Containment experiments `P^(a) ⊆ P^r`.
//!
//! Squarefree polynomial targets are decided exactly from generators. Toric
//! face primes and sum primes are decided monomial by monomial over every
//! lattice point of degree at most `d`: a counterexample is definitive, while
//! [`Status::VerifiedUpToDegree`] claims nothing outside the window.
//!
//! Counterexamples are always the first failing point in degree-then-lex order,
//! whatever the thread count.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::monomial::PolyMonomialIdeal;
use crate::tensor::SumPrime;
use crate::toric::FacePrime;
use crate::verdict::{ContainmentVerdict, Relation, Status};

/// Search for `min_slope` stops at `a = MIN_SLOPE_FACTOR * r`.
pub const MIN_SLOPE_FACTOR: u32 = 8;

#[derive(Debug, Clone)]
pub enum Target {
    Face(FacePrime),
    Sum(SumPrime),
    Squarefree(PolyMonomialIdeal),
}

impl Target {
    fn face_prime(&self) -> Option<&FacePrime> {
        match self {
            Target::Face(p) => Some(p),
            Target::Sum(q) => Some(q.as_face_prime()),
            Target::Squarefree(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Target::Squarefree(_))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ContainmentQuery<'a> {
    pub target: &'a Target,
    pub symbolic_exponent: u32,
    pub ordinary_exponent: u32,
    pub degree_bound: i64,
}

fn windowed(p: &FacePrime, a: u32, r: u32, d: i64) -> Status {
    let points = match p.ring().points_upto(d) {
        Ok(points) => points,
        Err(e) => return Status::Inconclusive(e.to_string()),
    };
    let first = points.par_iter().find_map_first(|b| {
        match p.symbolic_power_member(b, a) {
            Ok(false) => return None,
            Err(e) => return Some(Err(e)),
            Ok(true) => {}
        }
        match p.ordinary_power_member(b, r) {
            Ok(true) => None,
            Ok(false) => Some(Ok(b.clone())),
            Err(e) => Some(Err(e)),
        }
    });
    match first {
        None => Status::VerifiedUpToDegree(d),
        Some(Ok(b)) => Status::Counterexample(b),
        Some(Err(e)) => Status::Inconclusive(e.to_string()),
    }
}

fn exact(i: &PolyMonomialIdeal, a: u32, r: u32) -> Result<Status> {
    let symbolic = i.symbolic_power(a)?;
    let ordinary = i.power(r);
    Ok(match ordinary.first_outside(&symbolic)? {
        None => Status::ExactContained,
        Some(g) => Status::Counterexample(g),
    })
}

pub fn check_containment(q: &ContainmentQuery<'_>) -> Result<ContainmentVerdict> {
    let start = Instant::now();
    let (a, r) = (q.symbolic_exponent, q.ordinary_exponent);
    let (status, degree_bound) = match q.target {
        Target::Squarefree(i) => (exact(i, a, r)?, None),
        t => {
            let p = t.face_prime().expect("toric target");
            (windowed(p, a, r, q.degree_bound), Some(q.degree_bound))
        }
    };
    Ok(ContainmentVerdict {
        relation: Relation::Containment,
        symbolic_exponent: a,
        ordinary_exponent: Some(r),
        degree_bound,
        status,
        elapsed: start.elapsed(),
    })
}

fn scan(
    target: &Target,
    r_max: u32,
    d: i64,
    exponent: impl Fn(u32) -> u32,
) -> Result<Vec<ContainmentVerdict>> {
    (1..=r_max)
        .map(|r| {
            check_containment(&ContainmentQuery {
                target,
                symbolic_exponent: exponent(r),
                ordinary_exponent: r,
                degree_bound: d,
            })
        })
        .collect()
}

fn positive(name: &str, v: u32) -> Result<()> {
    if v == 0 {
        return Err(Error::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `P^(D r) ⊆ P^r` for `r = 1..=r_max`.
pub fn ustp_scan(target: &Target, slope: u32, r_max: u32, d: i64) -> Result<Vec<ContainmentVerdict>> {
    positive("D", slope)?;
    positive("r_max", r_max)?;
    scan(target, r_max, d, |r| slope * r)
}

/// `P^(E(r-1)+1) ⊆ P^r` for `r = 1..=r_max`.
pub fn hh_scan(target: &Target, e: u32, r_max: u32, d: i64) -> Result<Vec<ContainmentVerdict>> {
    positive("E", e)?;
    positive("r_max", r_max)?;
    scan(target, r_max, d, |r| e * (r - 1) + 1)
}

/// `Q^(n(Dr-1)+1) ⊆ Q^r` with `n` the number of tensor factors.
pub fn alt_bound_check(q: &SumPrime, slope: u32, r_max: u32, d: i64) -> Result<Vec<ContainmentVerdict>> {
    positive("D", slope)?;
    positive("r_max", r_max)?;
    let n = q.components().len() as u32;
    scan(&Target::Sum(q.clone()), r_max, d, |r| n * (slope * r - 1) + 1)
}

/// `I^(h r) ⊆ I^r` with `h` the big height, decided exactly.
pub fn els_scan(i: &PolyMonomialIdeal, r_max: u32) -> Result<Vec<ContainmentVerdict>> {
    positive("r_max", r_max)?;
    let h = i.big_height()? as u32;
    scan(&Target::Squarefree(i.clone()), r_max, 0, |r| h * r)
}

/// One row of a [`SlopeReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeRow {
    pub r: u32,
    /// Least `a ≥ r` with `P^(a) ⊆ P^r` on the window; `None` if not found by `8r`.
    pub a_min: Option<u32>,
    /// Witness of failure at `a_min - 1`, when `a_min > r`.
    pub witness: Option<LatticePoint>,
    pub status: Status,
}

/// Empirical containment slopes. Values are window observations, never optimality claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeReport {
    pub degree_bound: Option<i64>,
    pub rows: Vec<SlopeRow>,
    /// `max a_min(r) / r` as a reduced fraction.
    pub max_ratio: Option<(u32, u32)>,
    /// `max ⌈a_min(r) / r⌉`.
    pub uniform_slope: Option<u32>,
    /// Least `E` with `a_min(r) ≤ E(r-1)+1` for every scanned `r ≥ 2`.
    pub hh_slope: Option<u32>,
}

pub fn min_slope(target: &Target, r_max: u32, d: i64) -> Result<SlopeReport> {
    if r_max < 2 {
        return Err(Error::InvalidParameter("r_max must be at least 2".into()));
    }
    let mut rows = Vec::new();
    for r in 1..=r_max {
        let mut witness = None;
        let mut found = None;
        let mut last = Status::Inconclusive("no exponent tried".into());
        // a < r never works: P^(a) ⊇ P^a ⊋ P^r
        for a in r..=MIN_SLOPE_FACTOR * r {
            let v = check_containment(&ContainmentQuery {
                target,
                symbolic_exponent: a,
                ordinary_exponent: r,
                degree_bound: d,
            })?;
            match &v.status {
                Status::Counterexample(b) => witness = Some(b.clone()),
                s if s.holds() => {
                    found = Some(a);
                    last = v.status;
                    break;
                }
                _ => {
                    last = v.status;
                    break;
                }
            }
            last = v.status;
        }
        rows.push(SlopeRow { r, a_min: found, witness: found.and(witness), status: last });
    }
    let resolved: Option<Vec<(u32, u32)>> =
        rows.iter().map(|row| row.a_min.map(|a| (row.r, a))).collect();
    let (max_ratio, uniform_slope, hh_slope) = match &resolved {
        None => (None, None, None),
        Some(pairs) => {
            let best = pairs
                .iter()
                .copied()
                .max_by(|(r1, a1), (r2, a2)| (u64::from(*a1) * u64::from(*r2)).cmp(&(u64::from(*a2) * u64::from(*r1))))
                .expect("r_max >= 2");
            let g = num_integer::gcd(best.0, best.1);
            let uniform = pairs.iter().map(|&(r, a)| a.div_ceil(r)).max();
            let hh = pairs
                .iter()
                .filter(|&&(r, _)| r >= 2)
                .map(|&(r, a)| (a.saturating_sub(1)).div_ceil(r - 1).max(1))
                .max();
            (Some((best.1 / g, best.0 / g)), uniform, hh)
        }
    };
    Ok(SlopeReport {
        degree_bound: (!target.is_exact()).then_some(d),
        rows,
        max_ratio,
        uniform_slope,
        hh_slope,
    })
}

/// Both sides of the conversion lemma evaluated on a finite window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub e: u32,
    /// `P^(N) ⊆ P^⌈N/E⌉` for every `N ≤ N_max`; `None` when a cap was hit.
    pub a_holds: Option<bool>,
    /// `P^(E(r-1)+1) ⊆ P^r` for every `r ≤ r_max`; `None` when a cap was hit.
    pub b_holds: Option<bool>,
    /// The two predicates disagree on this window (a truncation effect, not a refutation).
    pub window_artifact: bool,
    pub a_verdicts: Vec<ContainmentVerdict>,
    pub b_verdicts: Vec<ContainmentVerdict>,
}

fn predicate(verdicts: &[ContainmentVerdict]) -> Option<bool> {
    if verdicts.iter().any(|v| v.status.is_counterexample()) {
        Some(false)
    } else if verdicts.iter().any(|v| v.status.is_inconclusive()) {
        None
    } else {
        Some(true)
    }
}

pub fn lemma_equiv_check(target: &Target, e: u32, n_max: u32, r_max: u32, d: i64) -> Result<LemmaReport> {
    positive("E", e)?;
    let a_verdicts = (0..=n_max)
        .map(|n| {
            check_containment(&ContainmentQuery {
                target,
                symbolic_exponent: n,
                ordinary_exponent: n.div_ceil(e),
                degree_bound: d,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let b_verdicts = if r_max == 0 { Vec::new() } else { hh_scan(target, e, r_max, d)? };
    let a_holds = predicate(&a_verdicts);
    let b_holds = predicate(&b_verdicts);
    let window_artifact = matches!((a_holds, b_holds), (Some(x), Some(y)) if x != y);
    Ok(LemmaReport { e, a_holds, b_holds, window_artifact, a_verdicts, b_verdicts })
}

/// Seeded corpus of nonzero proper squarefree ideals in `num_vars` variables.
///
/// Each ideal draws `1..=num_vars + 1` generators, each with a uniformly random
/// nonempty support. ChaCha8 keeps the stream identical across platforms.
pub fn random_squarefree_corpus(num_vars: usize, count: usize, seed: u64) -> Result<Vec<PolyMonomialIdeal>> {
    if num_vars == 0 || num_vars > 6 {
        return Err(Error::InvalidParameter(format!("num_vars must be in 1..=6, got {num_vars}")));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("corpus count must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full: u32 = (1 << num_vars) - 1;
    (0..count)
        .map(|_| {
            // u32 rather than usize keeps the stream identical on 32- and 64-bit targets
            let k = rng.gen_range(1..=num_vars as u32 + 1);
            let gens = (0..k)
                .map(|_| {
                    let mask = rng.gen_range(1..=full);
                    LatticePoint::new((0..num_vars).map(|i| i64::from(mask >> i & 1)).collect())
                })
                .collect();
            PolyMonomialIdeal::minimalize(num_vars, gens)
        })
        .collect()
}
