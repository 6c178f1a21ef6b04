//! Enumeration of all common invariant subspaces of a finite set of square
//! rational matrices.
//!
//! The one-dimensional case intersects eigenspaces of the shifted matrices
//! directly. Higher dimensions run the same eigen-machinery on compound
//! matrices: a d-dimensional subspace corresponds to a projective class of
//! totally decomposable common eigenvectors of the d-th compounds, so each
//! common eigenspace is decomposed into affine charts, cut down by the
//! Plücker relations, and converted back to vector bases through divisor
//! kernels.

use crate::divisors::{divisor_space, divisor_space_family, FamilyDivisors};
use crate::error::{Error, Result};
use crate::exterior::{exterior_power, Multivector};
use crate::matrix::Matrix;
use crate::parampoly::ParamPoly;
use crate::pluecker::{constrain_family, solve_constraints, SolveCase};
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use crate::Rat;
use itertools::Itertools;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Default depth budget for constraint case splits and parameter-dependent
/// pivot splits.
pub const DEFAULT_CASE_BUDGET: usize = 2;

/// A finite set of n×n rational matrices together with a shift s making
/// every Aᵢ + sI non-singular.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixSet {
    matrices: Vec<Matrix<Rat>>,
    shifted: Vec<Matrix<Rat>>,
    shift: Rat,
}

impl MatrixSet {
    /// Builds the set with the smallest non-negative integer shift.
    pub fn new(matrices: Vec<Matrix<Rat>>) -> Result<Self> {
        validate_square_same_size(&matrices)?;
        let shift = choose_shift(&matrices);
        MatrixSet::with_shift(matrices, shift)
    }

    /// Builds the set with a caller-chosen shift, which must leave every
    /// matrix non-singular.
    pub fn with_shift(matrices: Vec<Matrix<Rat>>, shift: Rat) -> Result<Self> {
        validate_square_same_size(&matrices)?;
        let shifted: Vec<Matrix<Rat>> = matrices.iter().map(|m| add_scalar(m, &shift)).collect();
        for (i, m) in shifted.iter().enumerate() {
            if m.det()?.is_zero() {
                return Err(Error::SingularShift {
                    matrix: i + 1,
                    shift: shift.to_string(),
                });
            }
        }
        Ok(MatrixSet {
            matrices,
            shifted,
            shift,
        })
    }

    pub fn matrices(&self) -> &[Matrix<Rat>] {
        &self.matrices
    }

    pub fn shifted(&self) -> &[Matrix<Rat>] {
        &self.shifted
    }

    pub fn shift(&self) -> &Rat {
        &self.shift
    }

    /// Ambient dimension n.
    pub fn n(&self) -> usize {
        self.matrices[0].rows()
    }

    /// Number of matrices N.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }
}

fn validate_square_same_size(matrices: &[Matrix<Rat>]) -> Result<()> {
    let Some(first) = matrices.first() else {
        return Err(Error::DimensionMismatch {
            expected: "at least one matrix".into(),
            found: "an empty set".into(),
        });
    };
    for m in matrices {
        if !m.is_square() {
            return Err(Error::NonSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if m.rows() != first.rows() {
            return Err(Error::DimensionMismatch {
                expected: format!("{0}x{0} matrices throughout", first.rows()),
                found: format!("{}x{}", m.rows(), m.cols()),
            });
        }
    }
    Ok(())
}

fn add_scalar(m: &Matrix<Rat>, s: &Rat) -> Matrix<Rat> {
    let mut out = m.clone();
    for i in 0..m.rows() {
        out[(i, i)] = &out[(i, i)] + s;
    }
    out
}

/// Smallest non-negative integer s such that every Aᵢ + sI is non-singular.
/// Such an s always exists because each matrix excludes only finitely many
/// values.
pub fn choose_shift(matrices: &[Matrix<Rat>]) -> Rat {
    let mut s = Rat::zero();
    loop {
        let ok = matrices.iter().all(|m| {
            !add_scalar(m, &s)
                .det()
                .expect("square matrix")
                .is_zero()
        });
        if ok {
            return s;
        }
        s = s + Rat::one();
    }
}

/// A tuple (λ₁,…,λ_N) of candidate common eigenvalues, one per matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EigenTuple {
    values: Vec<Rat>,
}

impl EigenTuple {
    pub fn new(values: Vec<Rat>) -> Self {
        EigenTuple { values }
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

impl std::fmt::Display for EigenTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.values.iter().map(Rat::to_string).join(", "))
    }
}

/// One family of invariant subspaces: a d×n generator matrix whose rows may
/// carry free parameters. `residual` is empty exactly when the family is
/// fully resolved; otherwise it holds the constraints (or undecidable
/// pivots) that remain open and `generators` is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantFamily {
    pub dimension: usize,
    pub eigen: Option<EigenTuple>,
    pub chart: usize,
    pub generators: Matrix<ParamPoly>,
    pub free_params: usize,
    pub residual: Vec<ParamPoly>,
}

impl InvariantFamily {
    pub fn is_solved(&self) -> bool {
        self.residual.is_empty()
    }
}

/// Full rational spectrum of a matrix with multiplicities; errors when the
/// characteristic polynomial has an irreducible non-linear factor.
fn rational_spectrum(m: &Matrix<Rat>, which: usize) -> Result<BTreeMap<Rat, usize>> {
    let (roots, residual) = m.char_poly()?.rational_roots();
    let found: usize = roots.values().sum();
    if found != m.rows() {
        return Err(Error::UnsupportedSpectrum {
            matrix: which,
            residual,
        });
    }
    Ok(roots)
}

/// Distinct eigenvalues of the d-th compound: products of d base
/// eigenvalues, taken with multiplicity.
fn compound_eigenvalue_candidates(spectrum: &BTreeMap<Rat, usize>, d: usize) -> Vec<Rat> {
    let full: Vec<&Rat> = spectrum
        .iter()
        .flat_map(|(v, &m)| std::iter::repeat(v).take(m))
        .collect();
    let set: BTreeSet<Rat> = full
        .iter()
        .combinations(d)
        .map(|c| c.into_iter().fold(Rat::one(), |acc, v| acc * *v))
        .collect();
    set.into_iter().collect()
}

/// Common eigenspaces of a matrix list over given per-matrix candidate
/// eigenvalues: for each tuple the stacked matrix [M₁−λ₁I; …; M_N−λ_NI] is
/// built and tuples with a nonzero null space are returned, sorted by tuple.
fn common_eigenspaces(
    matrices: &[Matrix<Rat>],
    candidates: &[Vec<Rat>],
) -> Vec<(EigenTuple, Vec<Vec<Rat>>)> {
    let size = matrices[0].rows();
    let mut out = Vec::new();
    for combo in candidates
        .iter()
        .map(|c| c.iter())
        .multi_cartesian_product()
    {
        let mut stacked = Matrix::zeros(matrices.len() * size, size);
        for (mi, m) in matrices.iter().enumerate() {
            for r in 0..size {
                for c in 0..size {
                    let mut v = m[(r, c)].clone();
                    if r == c {
                        v = v - combo[mi];
                    }
                    stacked[(mi * size + r, c)] = v;
                }
            }
        }
        let kernel = stacked.null_space();
        if !kernel.is_empty() {
            out.push((
                EigenTuple::new(combo.into_iter().cloned().collect()),
                kernel,
            ));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Common eigenvectors across the shifted matrices: every eigenvalue tuple
/// with a nonzero joint eigenspace, sorted by tuple.
pub fn algorithm_a(ms: &MatrixSet) -> Result<Vec<(EigenTuple, Vec<Vec<Rat>>)>> {
    let candidates: Vec<Vec<Rat>> = ms
        .shifted
        .iter()
        .enumerate()
        .map(|(i, m)| rational_spectrum(m, i + 1).map(|s| s.into_keys().collect()))
        .collect::<Result<_>>()?;
    Ok(common_eigenspaces(&ms.shifted, &candidates))
}

/// Affine-chart decomposition of an eigenspace basis: chart i (1-based) is
/// wᵢ + Σ_{j<i} tⱼ·wⱼ with i−1 free parameters. The charts cover the
/// projective classes of the eigenspace disjointly.
fn chart_coords(basis: &[Vec<Rat>], chart: usize) -> Vec<ParamPoly> {
    let len = basis[0].len();
    (0..len)
        .map(|r| {
            let mut p = ParamPoly::constant(basis[chart][r].clone());
            for (j, w) in basis.iter().take(chart).enumerate() {
                p = p + ParamPoly::var(j).scale(&w[r]);
            }
            p
        })
        .collect()
}

/// All invariant-subspace families of one dimension 1 < d < n, via common
/// eigenvectors of the d-th compounds filtered through the Plücker
/// relations.
pub fn algorithm_b(ms: &MatrixSet, d: usize, k_max: usize) -> Result<Vec<InvariantFamily>> {
    let n = ms.n();
    assert!(d > 1 && d < n, "algorithm B handles 1 < d < n, got d={d}");
    let spectra: Vec<BTreeMap<Rat, usize>> = ms
        .shifted
        .iter()
        .enumerate()
        .map(|(i, m)| rational_spectrum(m, i + 1))
        .collect::<Result<_>>()?;
    let compounds: Vec<Matrix<Rat>> = ms
        .shifted
        .iter()
        .map(|m| exterior_power(m, d as u32))
        .collect::<Result<_>>()?;
    let candidates: Vec<Vec<Rat>> = spectra
        .iter()
        .map(|s| compound_eigenvalue_candidates(s, d))
        .collect();
    let mut out = Vec::new();
    for (tuple, basis) in common_eigenspaces(&compounds, &candidates) {
        emit_chart_families(ms, d, &tuple, &basis, k_max, &mut out)?;
    }
    Ok(out)
}

/// Decomposes one compound eigenspace into charts, solves the Plücker
/// constraints per chart, and extracts divisor bases per solved branch.
fn emit_chart_families(
    ms: &MatrixSet,
    d: usize,
    tuple: &EigenTuple,
    basis: &[Vec<Rat>],
    k_max: usize,
    out: &mut Vec<InvariantFamily>,
) -> Result<()> {
    let n = ms.n();
    for chart in 0..basis.len() {
        let params = chart;
        let family = Multivector::new(n as u32, d as u32, chart_coords(basis, chart))?;
        // Degrees n−1 (and 1, n) are always decomposable, so the relations
        // are skipped there.
        let cases = if d + 1 >= n {
            Ok(vec![SolveCase::identity(params)])
        } else {
            solve_constraints(&constrain_family(&family, params), k_max)
        };
        let cases = match cases {
            Ok(cases) => cases,
            Err(Error::CaseBudgetExceeded { constraints, .. }) => {
                out.push(InvariantFamily {
                    dimension: d,
                    eigen: Some(tuple.clone()),
                    chart: chart + 1,
                    generators: Matrix::zeros(0, n),
                    free_params: params,
                    residual: constraints,
                });
                continue;
            }
            Err(other) => return Err(other),
        };
        for case in cases {
            let reduced = family.map(|p| case.apply(p));
            if case.free_params() == 0 {
                let member = reduced.map(|p| p.to_rat().expect("parameter-free coordinates"));
                let db = divisor_space(&member)?;
                let generators = db.vectors().map(|x| ParamPoly::constant(x.clone()));
                push_family(out, ms, d, tuple, chart + 1, generators, 0);
            } else {
                match divisor_space_family(&reduced, case.free_params(), k_max)? {
                    FamilyDivisors::Solved(branches) => {
                        for branch in branches {
                            push_family(
                                out,
                                ms,
                                d,
                                tuple,
                                chart + 1,
                                branch.basis,
                                branch.case.free_params(),
                            );
                        }
                    }
                    FamilyDivisors::Unsolved { pivot, .. } => {
                        out.push(InvariantFamily {
                            dimension: d,
                            eigen: Some(tuple.clone()),
                            chart: chart + 1,
                            generators: Matrix::zeros(0, n),
                            free_params: case.free_params(),
                            residual: vec![pivot],
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Appends a resolved family after checking invariance; exact duplicates
/// (which case analysis can produce) are dropped.
fn push_family(
    out: &mut Vec<InvariantFamily>,
    ms: &MatrixSet,
    d: usize,
    tuple: &EigenTuple,
    chart: usize,
    generators: Matrix<ParamPoly>,
    free_params: usize,
) {
    let family = InvariantFamily {
        dimension: d,
        eigen: Some(tuple.clone()),
        chart,
        generators,
        free_params,
        residual: Vec::new(),
    };
    assert!(
        verify_invariant(&family.generators, ms),
        "emitted family is not invariant: dimension {d}, eigenvalues {tuple}, chart {chart}"
    );
    if !out.contains(&family) {
        out.push(family);
    }
}

/// Whether the span of the generator rows is mapped into itself by every
/// (unshifted) matrix of the set, identically in any free parameters.
///
/// Constant bases use a rank test; parametrized bases check that each image
/// vector wedges to zero against the generators' wedge, which is an
/// identity of polynomials.
pub fn verify_invariant(generators: &Matrix<ParamPoly>, ms: &MatrixSet) -> bool {
    let n = ms.n();
    let d = generators.rows();
    if d == 0 || d == n {
        return true;
    }
    let all_constant = (0..d).all(|i| generators.row(i).iter().all(ParamPoly::is_constant));
    if all_constant {
        let basis = generators.map(|p| p.to_rat().expect("constant generators"));
        if basis.rank() != d {
            return false;
        }
        for a in ms.matrices() {
            let images: Vec<Vec<Rat>> = (0..d).map(|i| a.mul_vec(basis.row(i))).collect();
            let stacked = basis.vstack(&Matrix::from_rows(images));
            if stacked.rank() != d {
                return false;
            }
        }
        return true;
    }
    let rows: Vec<Vec<ParamPoly>> = (0..d).map(|i| generators.row(i).to_vec()).collect();
    let lambda = match Multivector::wedge_all(n as u32, &rows) {
        Ok(l) => l,
        Err(_) => return false,
    };
    if lambda.is_zero() {
        return false;
    }
    for a in ms.matrices() {
        for row in &rows {
            let image: Vec<ParamPoly> = (0..n)
                .map(|r| {
                    (0..n).fold(ParamPoly::zero(), |acc, c| {
                        acc + row[c].scale(&a[(r, c)])
                    })
                })
                .collect();
            let wedged = Multivector::from_vector(n as u32, &image)
                .wedge(&lambda)
                .expect("degree d+1 fits below n+1");
            if !wedged.is_zero() {
                return false;
            }
        }
    }
    true
}

/// One-dimensional families: each common eigenspace of the shifted matrices
/// decomposed into charts; no Plücker filtering or divisor step is needed.
fn dimension_one_families(ms: &MatrixSet) -> Result<Vec<InvariantFamily>> {
    let mut out = Vec::new();
    for (tuple, basis) in algorithm_a(ms)? {
        for chart in 0..basis.len() {
            let generators = Matrix::from_rows(vec![chart_coords(&basis, chart)]);
            push_family(&mut out, ms, 1, &tuple, chart + 1, generators, chart);
        }
    }
    Ok(out)
}

/// The dimension-0 table entry: the zero subspace, always invariant.
fn zero_family(n: usize) -> InvariantFamily {
    InvariantFamily {
        dimension: 0,
        eigen: None,
        chart: 1,
        generators: Matrix::zeros(0, n),
        free_params: 0,
        residual: Vec::new(),
    }
}

/// The dimension-n table entry: the whole space, always invariant; its
/// eigenvalue tuple is the top compound, i.e. the shifted determinants.
fn whole_space_family(ms: &MatrixSet) -> InvariantFamily {
    let n = ms.n();
    let dets: Vec<Rat> = ms
        .shifted
        .iter()
        .map(|m| m.det().expect("square matrix"))
        .collect();
    InvariantFamily {
        dimension: n,
        eigen: Some(EigenTuple::new(dets)),
        chart: 1,
        generators: Matrix::identity(n).map(|x: &Rat| ParamPoly::constant(x.clone())),
        free_params: 0,
        residual: Vec::new(),
    }
}

/// Families of a single dimension 0 ≤ d ≤ n. Dimensions 0 and n are the
/// trivial subspaces, dimension 1 runs the common-eigenvector search
/// directly, and everything in between goes through the compounds.
pub fn dimension_scan(ms: &MatrixSet, d: usize, k_max: usize) -> Result<Vec<InvariantFamily>> {
    let n = ms.n();
    assert!(d <= n, "dimension {d} exceeds the ambient dimension {n}");
    if d == 0 {
        Ok(vec![zero_family(n)])
    } else if d == n {
        Ok(vec![whole_space_family(ms)])
    } else if d == 1 {
        dimension_one_families(ms)
    } else {
        algorithm_b(ms, d, k_max)
    }
}

/// Families of every dimension 0..=n, keyed by dimension. Dimensions with
/// no invariant subspace map to an empty list; 0 and n are always present.
pub fn full_lattice_scan(
    ms: &MatrixSet,
    k_max: usize,
) -> Result<BTreeMap<usize, Vec<InvariantFamily>>> {
    let mut lattice = BTreeMap::new();
    for d in 0..=ms.n() {
        lattice.insert(d, dimension_scan(ms, d, k_max)?);
    }
    Ok(lattice)
}

/// Rational roots of the characteristic polynomial, with multiplicities,
/// plus the rootless residual factor.
pub fn spectrum_of(m: &Matrix<Rat>) -> Result<(BTreeMap<Rat, usize>, UniPoly)> {
    Ok(m.char_poly()?.rational_roots())
}
