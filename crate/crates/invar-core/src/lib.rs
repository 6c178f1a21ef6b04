//! Exact enumeration of common invariant subspaces of finite sets of square
//! rational matrices.
//!
//! A subspace W is a common invariant subspace of {A₁,…,A_N} when AᵢW ⊆ W
//! for every i. The library finds every such subspace, by dimension, using
//! only rational arithmetic:
//!
//! 1. shift the matrices by a common s so each Aᵢ + sI is invertible;
//! 2. for dimension d, form the d-th compound matrices and intersect their
//!    eigenspaces over every tuple of rational eigenvalues;
//! 3. decompose each common eigenspace into affine charts, impose the
//!    Plücker relations to keep only totally decomposable members, and
//!    solve the resulting polynomial constraints exactly;
//! 4. recover a basis of each surviving subspace family from the divisors
//!    of its multivector, and verify invariance of everything emitted.
//!
//! Families are reported with free rational parameters where infinitely
//! many subspaces share one shape, e.g. ⟨e₆ + t·e₅⟩.
//!
//! The crate is generic over the coordinate domain through [`Scalar`], with
//! rationals ([`Rat`]) and parametrized polynomials ([`ParamPoly`]) as the
//! two instances used throughout.

pub mod divisors;
pub mod error;
pub mod exterior;
pub mod index_set;
pub mod matrix;
pub mod parampoly;
pub mod pluecker;
pub mod scalar;
pub mod search;
pub mod unipoly;

/// Arbitrary-precision rational scalar used for all exact arithmetic.
pub type Rat = num::BigRational;

/// Arbitrary-precision integer, the numerator/denominator domain of [`Rat`].
pub type Int = num::BigInt;

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use exterior::{apply_compound, exterior_power, DualMultivector, Multivector};
pub use index_set::{binomial, sign_insert, sign_shuffle, IndexSet};
pub use matrix::{LinearSolution, Matrix};
pub use parampoly::{Monomial, ParamPoly};
pub use unipoly::UniPoly;

pub use divisors::{
    canonical_rows, divisor_space, divisor_space_family, same_span, DivisorBasis, FamilyCase,
    FamilyDivisors,
};
pub use pluecker::{
    constrain_family, is_totally_decomposable, pluecker_relations, solve_constraints,
    ConstraintSet, PlueckerForm, SolveCase,
};
pub use search::{
    algorithm_a, algorithm_b, choose_shift, dimension_scan, full_lattice_scan, spectrum_of,
    verify_invariant, EigenTuple, InvariantFamily, MatrixSet, DEFAULT_CASE_BUDGET,
};

/// Matrix over the exact rational scalar.
pub type RatMatrix = Matrix<Rat>;

/// Matrix over parametrized polynomials, as used by subspace families.
pub type PolyMatrix = Matrix<ParamPoly>;

/// Multivector with rational coordinates.
pub type RatMultivector = Multivector<Rat>;

/// Multivector with parametrized coordinates (chart families).
pub type PolyMultivector = Multivector<ParamPoly>;
