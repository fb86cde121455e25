//! Tensor products of semigroup rings and the multinomial expansion checks.
//!
//! `R_1 ⊗ … ⊗ R_n` is the semigroup ring of the product cone `C_1 × … × C_n`
//! on concatenated coordinates. A monomial prime `P_i` of one factor expands to
//! the face prime of `τ_i × Π_{j≠i} C_j`, and the sum `Q = Σ P_i'` is the face
//! prime of `τ_1 × … × τ_n`.
//!
//! The expansion check compares two computations that share no data path:
//! the left side asks the symbolic oracle of `Q` on the product cone, the right
//! side only consults the factor rings. A monomial lies in the product
//! `Π (P_i')^(A_i)` exactly when each coordinate block `b_i` lies in
//! `P_i^(A_i)`, so membership in `Σ_{A_1+…+A_n=N} Π (P_i')^(A_i)` reduces to
//! `Σ_i ord_{P_i}(b_i) ≥ N`.

use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{Cone, LatticePoint};
use crate::limits::Limits;
use crate::monomial::PolyMonomialIdeal;
use crate::toric::{FacePrime, SemigroupRing};
use crate::verdict::{ContainmentVerdict, Relation, Status};

#[derive(Debug, Clone)]
pub struct TensorRing {
    factors: Vec<Arc<SemigroupRing>>,
    product: Arc<SemigroupRing>,
    offsets: Vec<usize>,
}

impl TensorRing {
    pub fn new(factors: Vec<Arc<SemigroupRing>>, limits: Limits) -> Result<Self> {
        if factors.len() < 2 {
            return Err(Error::TooFewFactors(factors.len()));
        }
        let total: usize = factors.iter().map(|f| f.dim()).sum();
        if total > limits.tensor_dim_cap {
            return Err(Error::DimensionCapExceeded { dim: total, cap: limits.tensor_dim_cap });
        }
        let cones: Vec<&Cone> = factors.iter().map(|f| f.cone()).collect();
        let cone = Cone::product(&cones)?;
        let mut offsets = Vec::with_capacity(factors.len());
        let mut basis = Vec::new();
        let mut weight = Vec::with_capacity(total);
        let mut offset = 0;
        for f in &factors {
            offsets.push(offset);
            basis.extend(f.hilbert_basis().iter().map(|h| h.pad(offset, total)));
            weight.extend_from_slice(f.weight().coords());
            offset += f.dim();
        }
        let weight = LatticePoint::new(weight);
        basis.sort_by(crate::lattice::degree_lex(weight.coords()));
        let product = SemigroupRing::from_parts(cone, basis, weight, limits);
        Ok(TensorRing { factors, product: Arc::new(product), offsets })
    }

    pub fn factors(&self) -> &[Arc<SemigroupRing>] {
        &self.factors
    }

    pub fn product(&self) -> &Arc<SemigroupRing> {
        &self.product
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    fn factor(&self, i: usize) -> Result<&Arc<SemigroupRing>> {
        self.factors
            .get(i)
            .ok_or(Error::BadFactorIndex { index: i, factors: self.factors.len() })
    }

    /// Embeds a point of factor `i` into the product.
    pub fn pad(&self, b: &LatticePoint, i: usize) -> Result<LatticePoint> {
        let f = self.factor(i)?;
        if b.dim() != f.dim() {
            return Err(Error::MixedArity { expected: f.dim(), got: b.dim() });
        }
        Ok(b.pad(self.offsets[i], self.product.dim()))
    }

    /// The coordinate block of factor `i`.
    pub fn block(&self, b: &LatticePoint, i: usize) -> Result<LatticePoint> {
        let f = self.factor(i)?;
        Ok(b.block(self.offsets[i], f.dim()))
    }

    fn product_normal_indices(&self, p: &FacePrime, i: usize) -> Vec<usize> {
        let normals = self.product.cone().facet_normals();
        let total = self.product.dim();
        p.covering_normals()
            .iter()
            .map(|&k| {
                let padded = p.ring().cone().facet_normals()[k].pad(self.offsets[i], total);
                normals
                    .iter()
                    .position(|n| *n == padded)
                    .expect("padded factor normals are product normals")
            })
            .collect()
    }

    /// `P T` for a prime `P` of factor `i`.
    pub fn expand(&self, p: &FacePrime, i: usize) -> Result<FacePrime> {
        let f = self.factor(i)?;
        if **p.ring() != **f {
            return Err(Error::RingMismatch);
        }
        FacePrime::from_normals(Arc::clone(&self.product), &self.product_normal_indices(p, i))
    }
}

/// `Q = Σ P_i T`, one prime per factor.
#[derive(Debug, Clone)]
pub struct SumPrime {
    tensor: Arc<TensorRing>,
    components: Vec<FacePrime>,
    as_face_prime: FacePrime,
}

impl SumPrime {
    pub fn new(tensor: Arc<TensorRing>, components: Vec<FacePrime>) -> Result<Self> {
        let n = tensor.factors.len();
        if components.len() != n {
            return Err(Error::BadFactorIndex { index: components.len(), factors: n });
        }
        let mut indices = Vec::new();
        for (i, p) in components.iter().enumerate() {
            if **p.ring() != *tensor.factors[i] {
                return Err(Error::RingMismatch);
            }
            if p.face().is_whole() {
                return Err(Error::WholeConeFace);
            }
            indices.extend(tensor.product_normal_indices(p, i));
        }
        indices.sort_unstable();
        let as_face_prime = FacePrime::from_normals(Arc::clone(&tensor.product), &indices)?;
        Ok(SumPrime { tensor, components, as_face_prime })
    }

    pub fn tensor(&self) -> &Arc<TensorRing> {
        &self.tensor
    }

    pub fn components(&self) -> &[FacePrime] {
        &self.components
    }

    pub fn as_face_prime(&self) -> &FacePrime {
        &self.as_face_prime
    }

    pub fn height(&self) -> usize {
        self.as_face_prime.height()
    }

    /// Membership in `Σ_{A_1+…+A_n=N} Π (P_i')^(A_i)`, from factor data only.
    pub fn rhs_member(&self, b: &LatticePoint, n: u32) -> Result<bool> {
        if b.dim() != self.tensor.product.dim() {
            return Err(Error::MixedArity { expected: self.tensor.product.dim(), got: b.dim() });
        }
        let mut total = 0u32;
        for (i, p) in self.components.iter().enumerate() {
            if total >= n {
                return Ok(true);
            }
            total += p.symbolic_order(&self.tensor.block(b, i)?)?;
        }
        Ok(total >= n)
    }

    /// Compares `Q^(N)` with its multinomial expansion on every point of degree `≤ d`.
    pub fn verify_expansion(&self, n: u32, d: i64) -> ContainmentVerdict {
        let start = Instant::now();
        let status = match self.tensor.product.points_upto(d) {
            Err(e) => Status::Inconclusive(e.to_string()),
            Ok(points) => {
                let first = points.par_iter().find_map_first(|b| {
                    let lhs = self.as_face_prime.symbolic_power_member(b, n);
                    let rhs = self.rhs_member(b, n);
                    match (lhs, rhs) {
                        (Ok(l), Ok(r)) if l == r => None,
                        (Ok(_), Ok(_)) => Some(Ok(b.clone())),
                        (Err(e), _) | (_, Err(e)) => Some(Err(e)),
                    }
                });
                match first {
                    None => Status::VerifiedUpToDegree(d),
                    Some(Ok(b)) => Status::Counterexample(b),
                    Some(Err(e)) => Status::Inconclusive(e.to_string()),
                }
            }
        };
        ContainmentVerdict {
            relation: Relation::Equality,
            symbolic_exponent: n,
            ordinary_exponent: None,
            degree_bound: Some(d),
            status,
            elapsed: start.elapsed(),
        }
    }
}

/// Exact check of `(I' + J')^(N) = Σ_{A+B=N} (I')^(A) (J')^(B)` for squarefree
/// `I ⊆ k[x]`, `J ⊆ k[y]` expanded to `k[x, y]`.
pub fn verify_expansion_poly(
    i: &PolyMonomialIdeal,
    j: &PolyMonomialIdeal,
    n: u32,
) -> Result<ContainmentVerdict> {
    let start = Instant::now();
    let total = i.vars() + j.vars();
    let ie = i.pad(0, total);
    let je = j.pad(i.vars(), total);
    let lhs = ie.sum(&je)?.symbolic_power(n)?;
    let mut rhs = PolyMonomialIdeal::zero(total);
    for a in 0..=n {
        let term = ie.symbolic_power(n - a)?.product(&je.symbolic_power(a)?)?;
        rhs = rhs.sum(&term)?;
    }
    let status = if lhs == rhs {
        Status::ExactEqual
    } else {
        let witness = rhs
            .first_outside(&lhs)?
            .or(lhs.first_outside(&rhs)?)
            .expect("unequal ideals differ in some generator");
        Status::Counterexample(witness)
    };
    Ok(ContainmentVerdict {
        relation: Relation::Equality,
        symbolic_exponent: n,
        ordinary_exponent: None,
        degree_bound: None,
        status,
        elapsed: start.elapsed(),
    })
}
