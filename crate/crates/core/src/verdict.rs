//! Outcomes of containment and equality checks.

use std::time::Duration;

use serde::Serialize;

use crate::lattice::LatticePoint;

/// What a verdict asserts about the two sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `lhs ⊆ rhs`, e.g. `P^(a) ⊆ P^r`.
    Containment,
    /// `lhs = rhs`, e.g. the two sides of a multinomial expansion.
    Equality,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum Status {
    /// Equality of finite generating sets.
    ExactEqual,
    /// Containment of finite generating sets.
    ExactContained,
    /// Every lattice point of degree at most `d` agrees; nothing is claimed beyond.
    VerifiedUpToDegree(i64),
    /// A monomial on the larger side and not on the smaller one.
    Counterexample(LatticePoint),
    /// A resource cap was hit before a decision.
    Inconclusive(String),
}

impl Status {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Status::Counterexample(_))
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Status::Inconclusive(_))
    }

    /// Holds either exactly or within the window.
    pub fn holds(&self) -> bool {
        matches!(
            self,
            Status::ExactEqual | Status::ExactContained | Status::VerifiedUpToDegree(_)
        )
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::ExactEqual => "exact_equal",
            Status::ExactContained => "exact_contained",
            Status::VerifiedUpToDegree(_) => "verified_up_to_degree",
            Status::Counterexample(_) => "counterexample",
            Status::Inconclusive(_) => "inconclusive",
        }
    }
}

/// A verdict together with the query it answers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContainmentVerdict {
    pub relation: Relation,
    /// Symbolic exponent (or `N` for expansion checks).
    pub symbolic_exponent: u32,
    /// Ordinary exponent; `None` for expansion checks.
    pub ordinary_exponent: Option<u32>,
    /// Degree window; `None` for exact generator-level checks.
    pub degree_bound: Option<i64>,
    pub status: Status,
    #[serde(skip)]
    pub elapsed: Duration,
}
