//! Recovering a subspace basis from a totally decomposable multivector.
//!
//! A vector u divides Λ exactly when u∧Λ = 0, and for a decomposable Λ of
//! degree d the divisors form the d-dimensional subspace Λ represents. The
//! kernel computation comes in a plain rational flavor and a parameter-aware
//! flavor for chart families, where pivots that depend on parameters force a
//! case analysis.

use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::index_set::{sign_insert, IndexSet};
use crate::matrix::Matrix;
use crate::parampoly::ParamPoly;
use crate::pluecker::{solve_constraints, ConstraintSet, SolveCase};
use crate::scalar::Scalar;
use crate::Rat;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

/// Canonical basis of the subspace represented by a decomposable
/// multivector: reduced echelon rows, cleared to integers with content 1.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisorBasis {
    vectors: Matrix<Rat>,
    scale: Rat,
}

impl DivisorBasis {
    /// The d×n matrix whose rows span the subspace.
    pub fn vectors(&self) -> &Matrix<Rat> {
        &self.vectors
    }

    /// Nonzero c with row₁∧…∧row_d = c·Λ for the input Λ.
    pub fn scale(&self) -> &Rat {
        &self.scale
    }
}

/// The matrix of u ↦ u∧v from V to ⋀^(d+1)V: row R (|R| = d+1), column j
/// carries sgn(j→R∖j)·v_{R∖j} when j ∈ R.
fn wedge_map_matrix<T: Scalar>(v: &Multivector<T>) -> Matrix<T> {
    let n = v.n();
    let d = v.degree();
    let row_sets: Vec<IndexSet> = IndexSet::all(n, d + 1).collect();
    let mut m = Matrix::zeros(row_sets.len(), n as usize);
    for (ri, r_set) in row_sets.iter().enumerate() {
        for &j in r_set.elems() {
            let rest = r_set.without(j).unwrap();
            let coef = v.coord(&rest).clone();
            if coef.is_zero() {
                continue;
            }
            let sgn = sign_insert(j, &rest).unwrap();
            m[(ri, j as usize - 1)] = if sgn > 0 { coef } else { -coef };
        }
    }
    m
}

/// Reduced echelon form of the row span with integer-cleared, content-1
/// rows; canonical for the subspace regardless of the generating set.
pub fn canonical_rows(rows: &[Vec<Rat>]) -> Matrix<Rat> {
    let cols = rows.first().map_or(0, Vec::len);
    let rref = Matrix::from_rows(rows.to_vec()).rref();
    let rank = rref.pivots.len();
    let mut out = Matrix::zeros(rank, cols);
    for i in 0..rank {
        let row = clear_row(rref.mat.row(i));
        for (j, x) in row.into_iter().enumerate() {
            out[(i, j)] = x;
        }
    }
    out
}

/// Scales a rational row to integers with content 1, keeping the sign of
/// the leading entry positive.
fn clear_row(row: &[Rat]) -> Vec<Rat> {
    let mut den_lcm = crate::Int::one();
    let mut num_gcd = crate::Int::zero();
    for x in row {
        if !x.is_zero() {
            den_lcm = num_integer::lcm(den_lcm, x.denom().clone());
            num_gcd = num_integer::gcd(num_gcd, x.numer().clone());
        }
    }
    if num_gcd.is_zero() {
        return row.to_vec();
    }
    let mut scale = Rat::new(den_lcm, num_gcd);
    if let Some(first) = row.iter().find(|x| !x.is_zero()) {
        if (first * &scale).is_negative() {
            scale = -scale;
        }
    }
    row.iter().map(|x| x * &scale).collect()
}

/// Whether two row sets span the same subspace of ℚⁿ.
pub fn same_span(a: &Matrix<Rat>, b: &Matrix<Rat>) -> bool {
    let ra = a.rank();
    let rb = b.rank();
    ra == rb && a.vstack(b).rank() == ra
}

/// Divisor basis of a nonzero totally decomposable rational multivector,
/// via the kernel of u ↦ u∧v.
pub fn divisor_space(v: &Multivector<Rat>) -> Result<DivisorBasis> {
    if v.is_zero() {
        return Err(Error::ZeroMultivector);
    }
    let d = v.degree() as usize;
    let kernel = wedge_map_matrix(v).null_space();
    if kernel.len() != d {
        return Err(Error::KernelDimension {
            expected: d,
            found: kernel.len(),
        });
    }
    let vectors = canonical_rows(&kernel);
    let rows: Vec<Vec<Rat>> = (0..d).map(|i| vectors.row(i).to_vec()).collect();
    let wedge = Multivector::wedge_all(v.n(), &rows)?;
    let r = v
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero multivector");
    let scale = &wedge.coords()[r] / &v.coords()[r];
    debug_assert_eq!(wedge, v.scale(&scale), "divisor wedge is not a multiple of the input");
    Ok(DivisorBasis { vectors, scale })
}

/// One parameter branch of a family divisor computation: the substitution
/// that selects the branch and the divisor rows over its free parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyCase {
    pub case: SolveCase,
    pub basis: Matrix<ParamPoly>,
}

/// Result of a parameter-aware divisor computation.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyDivisors {
    /// Every branch was resolved; the first entry is the generic branch.
    Solved(Vec<FamilyCase>),
    /// The case analysis exceeded its budget; carries the partial echelon
    /// form of the wedge map and the pivot whose vanishing could not be
    /// decided.
    Unsolved {
        partial: Matrix<ParamPoly>,
        pivot: ParamPoly,
    },
}

/// Divisor bases for a parametrized family of decomposable multivectors.
///
/// Elimination prefers parameter-free pivots, which keep the reduction exact
/// for every parameter value. When only parameter-dependent pivots remain in
/// a column, the computation forks: a generic branch assumes the pivot is
/// nonzero and cross-multiplies, and one branch per rational solution of
/// `pivot = 0` restarts on the specialized family. At most `k_max` forks are
/// spent on any branch.
pub fn divisor_space_family(
    v: &Multivector<ParamPoly>,
    num_params: usize,
    k_max: usize,
) -> Result<FamilyDivisors> {
    let d = v.degree() as usize;
    let m = wedge_map_matrix(v);
    let mut cases = Vec::new();
    match kernel_cases(&m, SolveCase::identity(num_params), k_max, k_max, d, &mut cases)? {
        None => Ok(FamilyDivisors::Solved(cases)),
        Some((partial, pivot)) => Ok(FamilyDivisors::Unsolved { partial, pivot }),
    }
}

/// Composes an outer parameter substitution with a refinement of its free
/// parameters.
fn compose_cases(outer: &SolveCase, inner: &SolveCase) -> SolveCase {
    SolveCase::compose(outer, inner)
}

/// Parameter-aware kernel extraction. Pushes resolved branches into `out`;
/// returns the partial echelon and blocking pivot when the split budget
/// runs out.
fn kernel_cases(
    m: &Matrix<ParamPoly>,
    case: SolveCase,
    splits_left: usize,
    k_max: usize,
    expected_dim: usize,
    out: &mut Vec<FamilyCase>,
) -> Result<Option<(Matrix<ParamPoly>, ParamPoly)>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut work = m.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for col in 0..cols {
        let next = pivots.len();
        if next == rows {
            break;
        }
        let mut found: Option<(usize, bool)> = None;
        for r in next..rows {
            let e = &work[(r, col)];
            if e.is_zero() {
                continue;
            }
            if e.is_constant() {
                found = Some((r, true));
                break;
            }
            if found.is_none() {
                found = Some((r, false));
            }
        }
        let Some((prow, is_const)) = found else {
            continue;
        };
        work.swap_rows(next, prow);
        if is_const {
            let c = work[(next, col)].to_rat().unwrap();
            for r in 0..rows {
                if r == next || work[(r, col)].is_zero() {
                    continue;
                }
                let factor = work[(r, col)].scale(&(Rat::one() / &c));
                for j in 0..cols {
                    let t = factor.clone() * work[(next, j)].clone();
                    work[(r, j)] = work[(r, j)].clone() - t;
                }
            }
        } else {
            let q = work[(next, col)].clone();
            if splits_left == 0 {
                return Ok(Some((work, q)));
            }
            // Branches where the pivot vanishes, solved on the original
            // matrix under the specializing substitution.
            let vanishing = ConstraintSet::new(case.free_params(), vec![q.clone()]);
            match solve_constraints(&vanishing, k_max) {
                Ok(sub_cases) => {
                    for sc in sub_cases {
                        let specialized = m.map(|p| sc.apply(p));
                        let composed = compose_cases(&case, &sc);
                        if let Some(blocked) = kernel_cases(
                            &specialized,
                            composed,
                            splits_left - 1,
                            k_max,
                            expected_dim,
                            out,
                        )? {
                            return Ok(Some(blocked));
                        }
                    }
                }
                Err(Error::CaseBudgetExceeded { .. }) => return Ok(Some((work, q))),
                Err(other) => return Err(other),
            }
            // Generic branch: pivot assumed nonzero, fraction-free update.
            for r in 0..rows {
                if r == next || work[(r, col)].is_zero() {
                    continue;
                }
                let e = work[(r, col)].clone();
                for j in 0..cols {
                    let a = q.clone() * work[(r, j)].clone();
                    let b = e.clone() * work[(next, j)].clone();
                    work[(r, j)] = a - b;
                }
                reduce_row(&mut work, r, &q);
            }
        }
        pivots.push((next, col));
    }

    let kdim = cols - pivots.len();
    if kdim != expected_dim {
        return Err(Error::KernelDimension {
            expected: expected_dim,
            found: kdim,
        });
    }

    let pivot_cols: BTreeSet<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Matrix::zeros(free_cols.len(), cols);
    for (bi, &f) in free_cols.iter().enumerate() {
        // Row pr reads q·u[c_pr] + Σ_free work[pr][j]·u[j] = 0 after full
        // column elimination; scaling u[f] by the product of all pivots
        // keeps every entry polynomial.
        let total = pivots
            .iter()
            .fold(ParamPoly::one(), |a, &(pr, pc)| a * work[(pr, pc)].clone());
        let mut u = vec![ParamPoly::zero(); cols];
        u[f] = total.clone();
        for &(pr, pc) in &pivots {
            let cofactor = total
                .try_exact_div(&work[(pr, pc)])
                .expect("pivot divides the pivot product");
            u[pc] = -(work[(pr, f)].clone() * cofactor);
        }
        for &(pr, pc) in &pivots {
            reduce_vec(&mut u, &work[(pr, pc)]);
        }
        normalize_vec(&mut u, f);
        for (j, x) in u.into_iter().enumerate() {
            basis[(bi, j)] = x;
        }
    }
    out.push(FamilyCase { case, basis });
    Ok(None)
}

/// Divides every entry of the row by `q` as long as the division is exact
/// everywhere, removing factors introduced by cross-multiplication.
fn reduce_row(m: &mut Matrix<ParamPoly>, r: usize, q: &ParamPoly) {
    if q.is_constant() {
        return;
    }
    loop {
        let mut quotients = Vec::with_capacity(m.cols());
        let mut nonzero = false;
        for j in 0..m.cols() {
            let e = &m[(r, j)];
            if e.is_zero() {
                quotients.push(ParamPoly::zero());
                continue;
            }
            nonzero = true;
            match e.try_exact_div(q) {
                Some(x) => quotients.push(x),
                None => return,
            }
        }
        if !nonzero {
            return;
        }
        for (j, x) in quotients.into_iter().enumerate() {
            m[(r, j)] = x;
        }
    }
}

/// Same cleanup for a kernel vector.
fn reduce_vec(u: &mut [ParamPoly], q: &ParamPoly) {
    if q.is_constant() {
        return;
    }
    loop {
        let mut quotients = Vec::with_capacity(u.len());
        let mut nonzero = false;
        for e in u.iter() {
            if e.is_zero() {
                quotients.push(ParamPoly::zero());
                continue;
            }
            nonzero = true;
            match e.try_exact_div(q) {
                Some(x) => quotients.push(x),
                None => return,
            }
        }
        if !nonzero {
            return;
        }
        for (e, x) in u.iter_mut().zip(quotients) {
            *e = x;
        }
    }
}

/// Clears rational content from a kernel vector and orients it so the entry
/// in its own free column is positive.
fn normalize_vec(u: &mut [ParamPoly], f: usize) {
    let mut num_gcd = crate::Int::zero();
    let mut den_lcm = crate::Int::one();
    for p in u.iter() {
        for (_, c) in p.terms() {
            num_gcd = num_integer::gcd(num_gcd, c.numer().clone());
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
    }
    if num_gcd.is_zero() {
        return;
    }
    let mut scale = Rat::new(den_lcm, num_gcd);
    if u[f].leading().is_some_and(|(_, c)| c.is_negative()) {
        scale = -scale;
    }
    for p in u.iter_mut() {
        *p = p.scale(&scale);
    }
}
