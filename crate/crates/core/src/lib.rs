//! Exact laboratory for symbolic powers of monomial primes.
//!
//! The crate works entirely with exponent vectors: monomial ideals in
//! polynomial rings, monomial primes of normal affine semigroup rings
//! `k[C ∩ Z^m]`, and tensor products of such rings realised as product cones.
//! No coefficient field is represented; every question asked here is decided
//! by the combinatorics of exponents.
//!
//! Module map:
//! - [`lattice`]: cones, facets, faces, lattice points and Hilbert bases.
//! - [`monomial`]: monomial ideals of polynomial rings and squarefree symbolic powers.
//! - [`toric`]: face primes of semigroup rings and their membership oracles.
//! - [`tensor`]: product rings, sum primes and the expansion checks.
//! - [`containment`]: containment scans (uniform, Harbourne–Huneke, alternative, big-height).

pub mod catalog;
pub mod containment;
pub mod error;
pub mod lattice;
pub mod limits;
pub mod linalg;
pub mod monomial;
pub mod tensor;
pub mod toric;
pub mod verdict;

pub use error::{Error, Result};
pub use lattice::{Cone, Face, HilbertBasis, LatticePoint};
pub use limits::Limits;
pub use monomial::{PolyMonomialIdeal, VariablePrime};
pub use tensor::{SumPrime, TensorRing};
pub use toric::{FacePrime, SemigroupIdealSlice, SemigroupRing};
pub use verdict::{ContainmentVerdict, Relation, Status};
