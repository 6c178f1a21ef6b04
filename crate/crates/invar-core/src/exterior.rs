//! Multivectors, wedge products, compound matrices, and volume-element
//! duality.
//!
//! Coordinates live over any [`Scalar`] domain, so the same wedge code
//! serves plain rational multivectors and parametrized chart families. The
//! coordinate basis of ⋀^d V is ordered lexicographically on index sets (see
//! [`crate::index_set`]).

use crate::error::{Error, Result};
use crate::index_set::{binomial, sign_shuffle, IndexSet};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::Rat;
use itertools::Itertools;
use num_traits::Zero;

/// Element of ⋀^d V over an n-dimensional V, as a dense coordinate vector of
/// length C(n,d) indexed by [`IndexSet::rank`].
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T> {
    n: u32,
    d: u32,
    coords: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn new(n: u32, d: u32, coords: Vec<T>) -> Result<Self> {
        if d > n {
            return Err(Error::DegreeOutOfRange { d, n });
        }
        if coords.len() != binomial(n, d) {
            return Err(Error::DimensionMismatch {
                expected: format!("{} coordinates", binomial(n, d)),
                found: format!("{}", coords.len()),
            });
        }
        Ok(Multivector { n, d, coords })
    }

    pub fn zero(n: u32, d: u32) -> Self {
        Multivector {
            n,
            d,
            coords: vec![T::zero(); binomial(n, d)],
        }
    }

    /// The degree-1 multivector with the given coordinates in V.
    pub fn from_vector(n: u32, v: &[T]) -> Self {
        assert_eq!(v.len(), n as usize, "vector length must equal n");
        Multivector {
            n,
            d: 1,
            coords: v.to_vec(),
        }
    }

    /// The basis vector e_i (1-based) as a degree-1 multivector.
    pub fn basis_vector(n: u32, i: u32) -> Self {
        let mut m = Multivector::zero(n, 1);
        m.coords[i as usize - 1] = T::one();
        m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn coord(&self, s: &IndexSet) -> &T {
        debug_assert_eq!(s.n(), self.n);
        debug_assert_eq!(s.len(), self.d as usize);
        &self.coords[s.rank()]
    }

    pub fn set_coord(&mut self, s: &IndexSet, value: T) {
        debug_assert_eq!(s.len(), self.d as usize);
        self.coords[s.rank()] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.n, self.d), (other.n, other.d));
        Multivector {
            n: self.n,
            d: self.d,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Multivector {
            n: self.n,
            d: self.d,
            coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Multivector<U> {
        Multivector {
            n: self.n,
            d: self.d,
            coords: self.coords.iter().map(f).collect(),
        }
    }

    /// Wedge product: coordinate (a∧b)_M = Σ over splittings M = I ⊔ J with
    /// |I| = a.d of sign_shuffle(I,J)·a_I·b_J.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.n, other.n, "ambient dimensions differ");
        let n = self.n;
        let d = self.d + other.d;
        if d > n {
            return Err(Error::DegreeOutOfRange { d, n });
        }
        let mut out = Multivector::zero(n, d);
        for m in IndexSet::all(n, d) {
            let mut acc = T::zero();
            for i_elems in m.elems().iter().copied().combinations(self.d as usize) {
                let i_set = IndexSet::new(n, i_elems).unwrap();
                let a = self.coord(&i_set);
                if a.is_zero() {
                    continue;
                }
                let j_elems: Vec<u32> = m
                    .elems()
                    .iter()
                    .copied()
                    .filter(|e| !i_set.contains(*e))
                    .collect();
                let j_set = IndexSet::new(n, j_elems).unwrap();
                let b = other.coord(&j_set);
                if b.is_zero() {
                    continue;
                }
                let sgn = sign_shuffle(&i_set, &j_set).unwrap();
                let term = a.clone() * b.clone();
                acc = if sgn > 0 { acc + term } else { acc - term };
            }
            out.coords[m.rank()] = acc;
        }
        Ok(out)
    }

    /// Wedge of a sequence of degree-1 multivectors (empty input errors via
    /// degree rules only when the ambient dimension is exceeded).
    pub fn wedge_all(n: u32, vectors: &[Vec<T>]) -> Result<Self> {
        let mut acc = Multivector::new(n, 0, vec![T::one()])?;
        for v in vectors {
            acc = acc.wedge(&Multivector::from_vector(n, v))?;
        }
        Ok(acc)
    }

    /// Coordinate duality of the volume element: Λ̄ = Σ_{|J|=n−d}
    /// sgn(J′,J)·x_{J′}·ω_J where J′ is the complement of J.
    pub fn dual(&self) -> DualMultivector<T> {
        let n = self.n;
        let dd = n - self.d;
        let mut coords = Vec::with_capacity(binomial(n, dd));
        for j in IndexSet::all(n, dd) {
            let jc = j.complement();
            let sgn = sign_shuffle(&jc, &j).unwrap();
            let x = self.coord(&jc).clone();
            coords.push(if sgn > 0 { x } else { -x });
        }
        DualMultivector(Multivector {
            n,
            d: dd,
            coords,
        })
    }
}

/// A multivector expressed in the dual basis ω_J, with the same coordinate
/// layout as [`Multivector`] at degree n−d.
#[derive(Debug, Clone, PartialEq)]
pub struct DualMultivector<T>(Multivector<T>);

impl<T: Scalar> DualMultivector<T> {
    pub fn coords(&self) -> &Multivector<T> {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.d
    }

    /// Applies the coordinate duality again, landing back in ⋀^d V; composed
    /// with [`Multivector::dual`] this is the identity times (−1)^(d(n−d)).
    pub fn dual(&self) -> Multivector<T> {
        self.0.dual().0
    }
}

/// The d-th compound matrix: entry (R,C) is the d×d minor of `m` with rows R
/// and columns C, both running over d-subsets in lexicographic order, so
/// that ⋀^d(m)·(w₁∧…∧w_d) = (m·w₁)∧…∧(m·w_d).
pub fn exterior_power(m: &Matrix<Rat>, d: u32) -> Result<Matrix<Rat>> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows() as u32;
    if d < 1 || d > n {
        return Err(Error::DegreeOutOfRange { d, n });
    }
    let sets: Vec<Vec<usize>> = IndexSet::all(n, d)
        .map(|s| s.elems().iter().map(|&e| e as usize - 1).collect())
        .collect();
    let size = sets.len();
    let mut out = Matrix::zeros(size, size);
    for (i, r) in sets.iter().enumerate() {
        for (j, c) in sets.iter().enumerate() {
            out[(i, j)] = m.submatrix(r, c).det()?;
        }
    }
    Ok(out)
}

/// Applies a compound matrix to a multivector; the matrix must already have
/// the C(n,d) size of ⋀^d V. Parameters in the coordinates pass through
/// linearly.
pub fn apply_compound<T: Scalar>(m: &Matrix<Rat>, v: &Multivector<T>) -> Result<Multivector<T>> {
    let size = binomial(v.n, v.d);
    if m.rows() != size || m.cols() != size {
        return Err(Error::DimensionMismatch {
            expected: format!("{size}x{size} compound"),
            found: format!("{}x{}", m.rows(), m.cols()),
        });
    }
    let mut out: Multivector<T> = Multivector::zero(v.n, v.d);
    for (j, x) in v.coords.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for i in 0..size {
            let c = &m[(i, j)];
            if c.is_zero() {
                continue;
            }
            let term = T::from_rat(c.clone()) * x.clone();
            out.coords[i] = out.coords[i].clone() + term;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn e(n: u32, i: u32) -> Multivector<Rat> {
        Multivector::basis_vector(n, i)
    }

    fn idx(n: u32, elems: &[u32]) -> IndexSet {
        IndexSet::new(n, elems.to_vec()).unwrap()
    }

    #[test]
    fn wedge_of_basis_vectors() {
        let w = e(4, 1).wedge(&e(4, 2)).unwrap();
        assert_eq!(*w.coord(&idx(4, &[1, 2])), rat(1));
        assert_eq!(w.coords().iter().filter(|c| !c.is_zero()).count(), 1);

        let w21 = e(4, 2).wedge(&e(4, 1)).unwrap();
        assert_eq!(*w21.coord(&idx(4, &[1, 2])), rat(-1));
    }

    #[test]
    fn wedge_expands_bilinearly() {
        let a = e(4, 1).add(&e(4, 3));
        let w = a.wedge(&e(4, 2)).unwrap();
        assert_eq!(*w.coord(&idx(4, &[1, 2])), rat(1));
        assert_eq!(*w.coord(&idx(4, &[2, 3])), rat(-1));
        assert_eq!(*w.coord(&idx(4, &[1, 3])), rat(0));
    }

    #[test]
    fn wedge_rejects_degree_overflow() {
        let a = e(2, 1).wedge(&e(2, 2)).unwrap();
        assert!(matches!(
            a.wedge(&e(2, 1)),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn exterior_power_of_identity_is_identity() {
        let id = Matrix::<Rat>::identity(5);
        for d in 1..=5 {
            let c = exterior_power(&id, d).unwrap();
            assert_eq!(c, Matrix::<Rat>::identity(binomial(5, d)));
        }
    }

    #[test]
    fn exterior_power_top_degree_is_determinant() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 0, 3, 1, 1, 0, 1]);
        let c = exterior_power(&m, 3).unwrap();
        assert_eq!(c.rows(), 1);
        assert_eq!(c[(0, 0)], m.det().unwrap());
    }

    #[test]
    fn apply_compound_matches_wedge_of_images() {
        let m = Matrix::from_i64(4, 4, &[1, 2, 0, 1, 0, 1, 1, 0, 3, 0, 1, 2, 1, 1, 0, 1]);
        let u = vec![rat(1), rat(0), rat(2), rat(-1)];
        let v = vec![rat(0), rat(1), rat(1), rat(3)];
        let c2 = exterior_power(&m, 2).unwrap();
        let uv = Multivector::wedge_all(4, &[u.clone(), v.clone()]).unwrap();
        let lhs = apply_compound(&c2, &uv).unwrap();
        let rhs = Multivector::wedge_all(4, &[m.mul_vec(&u), m.mul_vec(&v)]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_signs_match_shuffle_parities() {
        // n=4: dual(e1∧e2) = +ω3∧ω4, dual(e1∧e3) = −ω2∧ω4.
        let d12 = e(4, 1).wedge(&e(4, 2)).unwrap().dual();
        assert_eq!(*d12.coords().coord(&idx(4, &[3, 4])), rat(1));
        let d13 = e(4, 1).wedge(&e(4, 3)).unwrap().dual();
        assert_eq!(*d13.coords().coord(&idx(4, &[2, 4])), rat(-1));
        // n=3: dual(e2) = −ω1∧ω3.
        let d2 = e(3, 2).dual();
        assert_eq!(*d2.coords().coord(&idx(3, &[1, 3])), rat(-1));
    }

    #[test]
    fn double_dual_is_signed_identity() {
        for n in 1..=7u32 {
            for d in 0..=n {
                for r in 0..binomial(n, d) {
                    let mut v = Multivector::<Rat>::zero(n, d);
                    v.coords[r] = rat(1);
                    let back = v.dual().dual();
                    let sign = if (d * (n - d)) % 2 == 0 { rat(1) } else { rat(-1) };
                    assert_eq!(back, v.scale(&sign), "n={n} d={d} r={r}");
                }
            }
        }
    }
}
