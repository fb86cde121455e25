//! Monomial primes of normal affine semigroup rings and their powers.
//!
//! For a face `τ` of the semigroup cone `C`, the monomial prime `P_τ` is spanned
//! by the monomials `x^b` with `b ∈ C \ τ`. It is generated by the Hilbert basis
//! elements outside `τ`, so `x^b ∈ P^n` exactly when `b - (g_1 + … + g_n) ∈ C`
//! for some multiset of `n` such generators.
//!
//! # The symbolic power oracle
//!
//! `P^(n) = { f : u f ∈ P^n for some u ∉ P }`, and it is a monomial ideal.
//! For a monomial `x^b` the witness `u` can be taken to be a monomial: the
//! semigroup ring is graded by `Z^m` and `P^n` is homogeneous, so some
//! monomial term of `u` outside `P` already works. Monomials outside `P` are
//! exactly the `x^c` with `c ∈ τ`, and those pair to zero with every facet
//! normal containing `τ` (the covering normals). Hence
//!
//! `x^b ∈ P^(n)` ⟺ some multiset `G` of `n` generators has
//! `<b - ΣG, ν> ≥ 0` for every covering normal `ν`.
//!
//! Necessity: `<c + b - ΣG, ν> ≥ 0` and `<c, ν> = 0`. Sufficiency: take
//! `c = k·w` for a relative-interior point `w` of `τ`; `w` pairs positively
//! with every other normal, so for large `k` the point `c + b - ΣG` lies in `C`.
//!
//! For height-one primes this is the divisorial valuation test `<b, ν> ≥ n`,
//! which [`FacePrime::valuation_member`] implements separately as a cross-check.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    certified_degree_bound, enumerate_points, hilbert_basis, Cone, Face, LatticePoint,
};
use crate::limits::Limits;

/// `k[C ∩ Z^m]` with a certified Hilbert basis and a positive grading.
#[derive(Debug, Clone, Serialize)]
pub struct SemigroupRing {
    cone: Cone,
    hilbert_basis: Vec<LatticePoint>,
    weight: LatticePoint,
    #[serde(skip)]
    limits: Limits,
}

impl PartialEq for SemigroupRing {
    fn eq(&self, other: &Self) -> bool {
        self.cone == other.cone && self.weight == other.weight
    }
}

impl Eq for SemigroupRing {}

impl SemigroupRing {
    /// Ring of a cone with the default weight (sum of facet normals).
    pub fn new(cone: Cone, limits: Limits) -> Result<Self> {
        let weight = cone.default_weight();
        Self::with_weight(cone, weight, limits)
    }

    pub fn with_weight(cone: Cone, weight: LatticePoint, limits: Limits) -> Result<Self> {
        if cone.dim() > limits.dim_cap {
            return Err(Error::DimensionCapExceeded { dim: cone.dim(), cap: limits.dim_cap });
        }
        cone.check_weight(&weight)?;
        let bound = certified_degree_bound(&cone, &weight);
        let hb = hilbert_basis(&cone, &weight, bound, limits.point_cap)?;
        if !hb.complete {
            return Err(Error::IncompleteHilbertBasis { cap: hb.degree_cap, bound });
        }
        Ok(SemigroupRing { cone, hilbert_basis: hb.elements, weight, limits })
    }

    /// Assembles a ring whose Hilbert basis is already known (product cones).
    pub(crate) fn from_parts(
        cone: Cone,
        hilbert_basis: Vec<LatticePoint>,
        weight: LatticePoint,
        limits: Limits,
    ) -> Self {
        SemigroupRing { cone, hilbert_basis, weight, limits }
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn hilbert_basis(&self) -> &[LatticePoint] {
        &self.hilbert_basis
    }

    pub fn weight(&self) -> &LatticePoint {
        &self.weight
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn dim(&self) -> usize {
        self.cone.dim()
    }

    pub fn degree(&self, b: &LatticePoint) -> i64 {
        b.pairing(self.weight.coords())
    }

    /// Lattice points of the ring up to degree `d`, degree-lex sorted.
    pub fn points_upto(&self, d: i64) -> Result<Vec<LatticePoint>> {
        enumerate_points(&self.cone, &self.weight, d, self.limits.point_cap)
    }

    fn check_point(&self, b: &LatticePoint) -> Result<()> {
        if b.dim() != self.dim() {
            return Err(Error::MixedArity { expected: self.dim(), got: b.dim() });
        }
        if !self.cone.contains(b) {
            return Err(Error::InvalidParameter(format!("{b} is not in the semigroup")));
        }
        Ok(())
    }
}

/// The multiset search behind both oracles, carried out on pairing vectors.
#[derive(Debug, Clone)]
struct MultisetSearch {
    normals: Vec<LatticePoint>,
    /// Componentwise-minimal generator pairing vectors; dominated generators never help.
    steps: Vec<Vec<i64>>,
}

impl MultisetSearch {
    fn new(normals: Vec<LatticePoint>, gens: &[LatticePoint]) -> Self {
        let mut vecs: Vec<Vec<i64>> = gens
            .iter()
            .map(|g| normals.iter().map(|n| g.pairing(n.coords())).collect())
            .collect();
        vecs.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
        vecs.dedup();
        let mut steps: Vec<Vec<i64>> = Vec::new();
        for v in vecs {
            if !steps.iter().any(|s| s.iter().zip(&v).all(|(a, b)| a <= b)) {
                steps.push(v);
            }
        }
        MultisetSearch { normals, steps }
    }

    fn combinations(&self, n: u32) -> u128 {
        // C(k + n - 1, n), saturating
        let k = self.steps.len() as u128;
        if k == 0 {
            return u128::from(n == 0);
        }
        let mut c: u128 = 1;
        for i in 1..=u128::from(n) {
            c = c.saturating_mul(k - 1 + i) / i;
        }
        c
    }

    fn exists(&self, b: &LatticePoint, n: u32, cap: u64) -> Result<bool> {
        if n == 0 {
            return Ok(true);
        }
        let needed = self.combinations(n);
        if needed > u128::from(cap) {
            return Err(Error::MultisetCapExceeded { needed, cap });
        }
        let residual: Vec<i64> = self.normals.iter().map(|v| b.pairing(v.coords())).collect();
        Ok(self.dfs(0, n, &residual))
    }

    fn dfs(&self, start: usize, n: u32, residual: &[i64]) -> bool {
        if n == 0 {
            return true;
        }
        for (i, step) in self.steps.iter().enumerate().skip(start) {
            let next: Vec<i64> = residual.iter().zip(step).map(|(r, s)| r - s).collect();
            // generators pair nonnegatively with every normal, so a negative
            // partial residual can never recover
            if next.iter().all(|&x| x >= 0) && self.dfs(i, n - 1, &next) {
                return true;
            }
        }
        false
    }
}

/// The monomial prime `P_τ` of a proper face `τ`.
#[derive(Debug, Clone)]
pub struct FacePrime {
    ring: Arc<SemigroupRing>,
    face: Face,
    gens: Vec<LatticePoint>,
    height: usize,
    ordinary: MultisetSearch,
    symbolic: MultisetSearch,
}

impl PartialEq for FacePrime {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.face == other.face
    }
}

impl Eq for FacePrime {}

impl FacePrime {
    pub fn new(ring: Arc<SemigroupRing>, face: &Face) -> Result<Self> {
        let face = Face::from_normals(ring.cone(), face.normal_indices())?;
        if face.is_whole() {
            return Err(Error::WholeConeFace);
        }
        let gens: Vec<LatticePoint> = ring
            .hilbert_basis()
            .iter()
            .filter(|h| !face.contains_point(ring.cone(), h))
            .cloned()
            .collect();
        let height = ring.dim() - face.dim();
        let ordinary = MultisetSearch::new(ring.cone().facet_normals().to_vec(), &gens);
        let covering: Vec<LatticePoint> = face
            .normal_indices()
            .iter()
            .map(|&i| ring.cone().facet_normals()[i].clone())
            .collect();
        let symbolic = MultisetSearch::new(covering, &gens);
        Ok(FacePrime { ring, face, gens, height, ordinary, symbolic })
    }

    /// The prime of the face cut out by the given facet indices.
    pub fn from_normals(ring: Arc<SemigroupRing>, indices: &[usize]) -> Result<Self> {
        let face = Face::from_normals(ring.cone(), indices)?;
        Self::new(ring, &face)
    }

    /// All monomial primes of the ring, one per proper face.
    pub fn all(ring: &Arc<SemigroupRing>) -> Vec<FacePrime> {
        crate::lattice::faces_all(ring.cone())
            .iter()
            .filter(|f| !f.is_whole())
            .map(|f| FacePrime::new(Arc::clone(ring), f).expect("proper face"))
            .collect()
    }

    pub fn ring(&self) -> &Arc<SemigroupRing> {
        &self.ring
    }

    pub fn face(&self) -> &Face {
        &self.face
    }

    pub fn gens(&self) -> &[LatticePoint] {
        &self.gens
    }

    pub fn covering_normals(&self) -> &[usize] {
        self.face.normal_indices()
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Whether `x^b ∈ P`.
    pub fn contains_monomial(&self, b: &LatticePoint) -> bool {
        !self.face.contains_point(self.ring.cone(), b)
    }

    /// `x^b ∈ P^n`.
    pub fn ordinary_power_member(&self, b: &LatticePoint, n: u32) -> Result<bool> {
        self.ring.check_point(b)?;
        self.ordinary.exists(b, n, self.ring.limits.multiset_cap)
    }

    /// `x^b ∈ P^(n)`, by the covering-normal halfspace test.
    pub fn symbolic_power_member(&self, b: &LatticePoint, n: u32) -> Result<bool> {
        self.ring.check_point(b)?;
        self.symbolic.exists(b, n, self.ring.limits.multiset_cap)
    }

    /// Largest `a` with `x^b ∈ P^(a)`.
    pub fn symbolic_order(&self, b: &LatticePoint) -> Result<u32> {
        self.ring.check_point(b)?;
        // every generator pairs to at least 1 with some covering normal
        let bound: i64 = self
            .covering_normals()
            .iter()
            .map(|&i| b.pairing(self.ring.cone().facet_normals()[i].coords()))
            .sum();
        let mut a = 0u32;
        while i64::from(a) < bound
            && self.symbolic.exists(b, a + 1, self.ring.limits.multiset_cap)?
        {
            a += 1;
        }
        Ok(a)
    }

    /// Height-one fast path: `<b, ν> ≥ n` for the single covering normal `ν`.
    pub fn valuation_member(&self, b: &LatticePoint, n: u32) -> Result<bool> {
        if self.height != 1 {
            return Err(Error::NotHeightOne(self.height));
        }
        self.ring.check_point(b)?;
        let nu = &self.ring.cone().facet_normals()[self.covering_normals()[0]];
        Ok(b.pairing(nu.coords()) >= i64::from(n))
    }

    pub fn symbolic_slice(&self, n: u32, d: i64) -> Result<SemigroupIdealSlice> {
        self.slice(n, d, PowerKind::Symbolic)
    }

    pub fn power_slice(&self, n: u32, d: i64) -> Result<SemigroupIdealSlice> {
        self.slice(n, d, PowerKind::Ordinary)
    }

    fn slice(&self, n: u32, d: i64, kind: PowerKind) -> Result<SemigroupIdealSlice> {
        let mut monomials = Vec::new();
        for b in self.ring.points_upto(d)? {
            let member = match kind {
                PowerKind::Symbolic => self.symbolic_power_member(&b, n)?,
                PowerKind::Ordinary => self.ordinary_power_member(&b, n)?,
            };
            if member {
                monomials.push(b);
            }
        }
        let cone = self.ring.cone();
        let min_gens_upto = monomials
            .iter()
            .filter(|b| {
                !monomials
                    .iter()
                    .any(|a| a != *b && cone.contains(&b.sub(a)))
            })
            .cloned()
            .collect();
        Ok(SemigroupIdealSlice { kind, exponent: n, degree_bound: d, monomials, min_gens_upto })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PowerKind {
    Symbolic,
    Ordinary,
}

/// The members of `P^(n)` or `P^n` of degree at most `degree_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupIdealSlice {
    pub kind: PowerKind,
    pub exponent: u32,
    pub degree_bound: i64,
    /// Degree-lex sorted.
    pub monomials: Vec<LatticePoint>,
    /// Members not divisible (in the semigroup) by another member of the window.
    pub min_gens_upto: Vec<LatticePoint>,
}

impl SemigroupIdealSlice {
    pub fn contains(&self, b: &LatticePoint) -> bool {
        self.monomials.contains(b)
    }

    /// Members of `self` missing from `other`, in window order.
    pub fn difference(&self, other: &SemigroupIdealSlice) -> Vec<LatticePoint> {
        self.monomials
            .iter()
            .filter(|b| !other.monomials.contains(b))
            .cloned()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn p(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    fn ring(c: Cone) -> Arc<SemigroupRing> {
        Arc::new(SemigroupRing::new(c, Limits::default()).unwrap())
    }

    fn a1_yz() -> FacePrime {
        // facet 0 is ν = (0,1), whose face is the ray through x = (1,0)
        FacePrime::from_normals(ring(catalog::a1()), &[0]).unwrap()
    }

    #[test]
    fn rings_from_catalog() {
        let q = ring(catalog::quadrant(2).unwrap());
        assert_eq!(q.hilbert_basis(), &[p(&[0, 1]), p(&[1, 0])]);
        let a = ring(catalog::a1());
        assert_eq!(a.hilbert_basis(), &[p(&[1, 0]), p(&[1, 1]), p(&[1, 2])]);
        assert_eq!(ring(catalog::quadric()).hilbert_basis().len(), 4);
    }

    #[test]
    fn face_primes() {
        let pr = a1_yz();
        assert_eq!(pr.gens(), &[p(&[1, 1]), p(&[1, 2])]);
        assert_eq!(pr.height(), 1);
        let a = ring(catalog::a1());
        let m = FacePrime::new(Arc::clone(&a), &Face::origin(a.cone())).unwrap();
        assert_eq!(m.gens().len(), 3);
        assert_eq!(m.height(), 2);
        assert_eq!(
            FacePrime::new(Arc::clone(&a), &Face::whole(a.cone())),
            Err(Error::WholeConeFace)
        );
        // quadrant: the face along e2 gives (x1)
        let q = ring(catalog::quadrant(2).unwrap());
        let x1 = FacePrime::from_normals(q, &[1]).unwrap();
        assert_eq!(x1.gens(), &[p(&[1, 0])]);
        assert_eq!(x1.height(), 1);
    }

    #[test]
    fn ordinary_membership() {
        let pr = a1_yz();
        let z = p(&[1, 2]);
        assert!(pr.ordinary_power_member(&z, 1).unwrap());
        assert!(!pr.ordinary_power_member(&z, 2).unwrap());
        assert!(pr.ordinary_power_member(&p(&[1, 0]), 0).unwrap());
        assert!(pr.ordinary_power_member(&p(&[2, 2]), 2).unwrap());
    }

    #[test]
    fn symbolic_membership_and_order() {
        let pr = a1_yz();
        let z = p(&[1, 2]);
        assert!(pr.symbolic_power_member(&z, 2).unwrap());
        assert!(!pr.symbolic_power_member(&z, 3).unwrap());
        assert_eq!(pr.symbolic_order(&z).unwrap(), 2);
        assert_eq!(pr.symbolic_order(&p(&[3, 0])).unwrap(), 0);
        let q = ring(catalog::quadrant(2).unwrap());
        let x1 = FacePrime::from_normals(q, &[1]).unwrap();
        assert_eq!(x1.symbolic_order(&p(&[3, 0])).unwrap(), 3);
    }

    #[test]
    fn maximal_ideal_powers_are_primary() {
        let a = ring(catalog::a1());
        let m = FacePrime::new(Arc::clone(&a), &Face::origin(a.cone())).unwrap();
        for b in a.points_upto(8).unwrap() {
            for n in 0..=4 {
                assert_eq!(
                    m.symbolic_power_member(&b, n).unwrap(),
                    m.ordinary_power_member(&b, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn valuation_fast_path() {
        let pr = a1_yz();
        assert!(pr.valuation_member(&p(&[1, 2]), 2).unwrap());
        assert!(!pr.valuation_member(&p(&[1, 0]), 1).unwrap());
        assert!(pr.valuation_member(&p(&[1, 1]), 1).unwrap());
        assert!(!pr.valuation_member(&p(&[1, 1]), 2).unwrap());
        let a = ring(catalog::a1());
        let m = FacePrime::new(Arc::clone(&a), &Face::origin(a.cone())).unwrap();
        assert_eq!(m.valuation_member(&p(&[1, 0]), 1), Err(Error::NotHeightOne(2)));
    }

    #[test]
    fn slices() {
        let pr = a1_yz();
        assert_eq!(pr.symbolic_slice(1, 6).unwrap().monomials, pr.power_slice(1, 6).unwrap().monomials);
        let diff = pr.symbolic_slice(2, 4).unwrap().difference(&pr.power_slice(2, 4).unwrap());
        assert!(diff.contains(&p(&[1, 2])));
        let all = pr.ring().points_upto(6).unwrap();
        assert_eq!(pr.symbolic_slice(0, 6).unwrap().monomials, all);
        let s = pr.power_slice(1, 4).unwrap();
        assert_eq!(s.min_gens_upto, vec![p(&[1, 1]), p(&[1, 2])]);
    }

    #[test]
    fn rejects_points_outside_the_semigroup() {
        let pr = a1_yz();
        assert!(pr.symbolic_power_member(&p(&[0, 1]), 1).is_err());
        assert!(pr.ordinary_power_member(&p(&[1, 0, 0]), 1).is_err());
    }

    #[test]
    fn multiset_cap_is_an_error() {
        let a = SemigroupRing::new(
            catalog::a1(),
            Limits { multiset_cap: 3, ..Limits::default() },
        )
        .unwrap();
        let m = FacePrime::new(Arc::new(a.clone()), &Face::origin(a.cone())).unwrap();
        assert!(matches!(
            m.symbolic_power_member(&p(&[4, 4]), 4),
            Err(Error::MultisetCapExceeded { .. })
        ));
    }
}
