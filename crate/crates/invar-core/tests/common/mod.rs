//! Shared fixtures for the integration tests: reference matrix sets, a tiny
//! parser for subspace generator descriptions, and span-coverage assertions that
//! compare a lattice scan against an expected table of families.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use invar_core::{
    rat, same_span, solve_constraints, ConstraintSet, InvariantFamily, Matrix, MatrixSet,
    Multivector, ParamPoly, Rat, DEFAULT_CASE_BUDGET,
};
use itertools::Itertools;
use num::Zero;

/// Three nilpotent 4×4 matrices with a rich invariant-subspace lattice.
/// The automatic shift is 1.
pub fn dim4_triple() -> MatrixSet {
    let a1 = Matrix::from_i64(
        4,
        4,
        &[
            0, 0, 0, 1, //
            0, 0, 0, 0, //
            0, 0, 0, 0, //
            0, 0, 0, 0,
        ],
    );
    let a2 = Matrix::from_i64(
        4,
        4,
        &[
            0, 0, 0, 0, //
            0, 0, 0, 1, //
            0, 0, 0, 0, //
            0, 0, 0, 0,
        ],
    );
    let a3 = Matrix::from_i64(
        4,
        4,
        &[
            0, 1, 0, 0, //
            0, 0, 1, 0, //
            0, 0, 0, 0, //
            0, 0, 0, 0,
        ],
    );
    MatrixSet::new(vec![a1, a2, a3]).unwrap()
}

fn dim7_diag() -> Matrix<Rat> {
    Matrix::from_i64(
        7,
        7,
        &[
            3, 0, 0, 0, 0, 0, 0, //
            0, 2, 0, 0, 0, 0, 0, //
            0, 0, 2, 0, 0, 0, 0, //
            0, 0, 0, 1, 0, 0, 0, //
            0, 0, 0, 0, 1, 0, 0, //
            0, 0, 0, 0, 0, 1, 0, //
            0, 0, 0, 0, 0, 0, 3,
        ],
    )
}

/// A 7×7 diagonal matrix paired with a nilpotent one; automatic shift 1.
pub fn dim7_pair_a() -> MatrixSet {
    let a2 = Matrix::from_i64(
        7,
        7,
        &[
            0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, //
            0, 1, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 1, 0, 0, 0, //
            1, 0, 0, 0, 0, 0, 0,
        ],
    );
    MatrixSet::new(vec![dim7_diag(), a2]).unwrap()
}

/// The same diagonal matrix paired with a non-nilpotent companion whose
/// spectrum is {0, 1}; automatic shift 1.
pub fn dim7_pair_b() -> MatrixSet {
    let a2 = Matrix::from_i64(
        7,
        7,
        &[
            0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 1, 0, 0, 0, //
            0, 1, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 1, 0, 0, //
            0, 0, 0, 0, 1, 0, 0, //
            1, 0, 0, 0, 0, 0, 0,
        ],
    );
    MatrixSet::new(vec![dim7_diag(), a2]).unwrap()
}

/// Three 9×9 matrices (one diagonal with spectrum {−2,…,2}, two nilpotent);
/// the automatic shift is 3.
pub fn dim9_triple() -> MatrixSet {
    let a1 = Matrix::from_i64(
        9,
        9,
        &[
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            0, 2, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 1, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, -2, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, -1, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, -1, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 1, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0,
        ],
    );
    let a2 = Matrix::from_i64(
        9,
        9,
        &[
            0, 0, 0, 1, 0, 0, 0, 0, 0, //
            -1, 0, 0, 0, 1, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 1, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, -1, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, -1, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0,
        ],
    );
    let a3 = Matrix::from_i64(
        9,
        9,
        &[
            0, -1, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            1, 0, 0, 0, -1, 0, 0, 0, 0, //
            0, 1, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 1, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, -1, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0, //
            0, 0, 0, 0, 0, 0, 0, 0, 0,
        ],
    );
    MatrixSet::new(vec![a1, a2, a3]).unwrap()
}

/// Parses a single generator like "e5", "-e1 + e5", "a e4 + e5" or
/// "2 a e1 - 3 e2" into a coordinate vector of length `n`. Parameters are
/// written `a` (index 0) and `b` (index 1); basis vectors are 1-based.
pub fn parse_vector(n: usize, desc: &str) -> Vec<ParamPoly> {
    let mut out = vec![ParamPoly::zero(); n];
    for term in desc.replace('-', "+-").split('+') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        let mut coeff = ParamPoly::from_i64(1);
        let mut index = None;
        let mut body = term;
        if let Some(rest) = body.strip_prefix('-') {
            coeff = -coeff;
            body = rest.trim_start();
        }
        for piece in body.split_whitespace() {
            if let Some(num) = piece.strip_prefix('e') {
                let k: usize = num.parse().expect("basis index");
                assert!((1..=n).contains(&k), "basis index out of range: {piece}");
                index = Some(k - 1);
            } else if piece == "a" {
                coeff = coeff * ParamPoly::var(0);
            } else if piece == "b" {
                coeff = coeff * ParamPoly::var(1);
            } else {
                let k: i64 = piece.parse().expect("integer coefficient");
                coeff = coeff * ParamPoly::from_i64(k);
            }
        }
        let i = index.expect("term without a basis vector");
        out[i] = out[i].clone() + coeff;
    }
    out
}

/// Parses a ";"-separated list of generators into a row matrix.
pub fn parse_generators(n: usize, desc: &str) -> Matrix<ParamPoly> {
    let rows: Vec<Vec<ParamPoly>> = desc.split(';').map(|g| parse_vector(n, g)).collect();
    Matrix::from_rows(rows)
}

/// Sample points used to instantiate parametrized families.
pub fn grid() -> Vec<Rat> {
    [0, 1, -1, 2, -2, 5, -5].iter().map(|&k| rat(k)).collect()
}

/// All assignments of grid values to `params` parameters.
pub fn param_assignments(params: usize, points: &[Rat]) -> Vec<Vec<Rat>> {
    if params == 0 {
        return vec![Vec::new()];
    }
    (0..params)
        .map(|_| points.iter().cloned())
        .multi_cartesian_product()
        .collect()
}

fn matrix_params(m: &Matrix<ParamPoly>) -> usize {
    (0..m.rows())
        .flat_map(|i| m.row(i))
        .map(ParamPoly::num_params)
        .max()
        .unwrap_or(0)
}

/// Concrete generator matrices obtained by substituting every grid
/// assignment into a parametrized family.
pub fn instances(gens: &Matrix<ParamPoly>, params: usize, points: &[Rat]) -> Vec<Matrix<Rat>> {
    param_assignments(params, points)
        .iter()
        .map(|vals| gens.map(|p| p.eval(vals)))
        .collect()
}

/// The concrete generator matrix of a parameter-free family.
pub fn constant_instance(f: &InvariantFamily) -> Matrix<Rat> {
    assert_eq!(f.free_params, 0);
    f.generators.map(|p| p.eval(&[]))
}

/// Exact invariance check for a constant basis: the images of the rows stay
/// inside the row span.
pub fn invariant_under(basis: &Matrix<Rat>, m: &Matrix<Rat>) -> bool {
    let image = basis.mul(&m.transpose());
    basis.vstack(&image).rank() == basis.rows()
}

/// Exact membership test: true when some assignment of the family's free
/// parameters spans the same subspace as `target`. Works by requiring the
/// wedge coordinates of the family to be proportional to those of the
/// target, solving the resulting polynomial system, and rejecting solutions
/// that collapse the family's wedge to zero.
pub fn family_contains(f: &InvariantFamily, target: &Matrix<Rat>) -> bool {
    if !f.is_solved() || f.dimension != target.rows() {
        return false;
    }
    if f.dimension == 0 {
        return true;
    }
    let n = target.cols() as u32;
    let gens: Vec<Vec<ParamPoly>> = (0..f.generators.rows())
        .map(|i| f.generators.row(i).to_vec())
        .collect();
    let lam = Multivector::wedge_all(n, &gens).unwrap();
    let rows: Vec<Vec<Rat>> = (0..target.rows()).map(|i| target.row(i).to_vec()).collect();
    let w = Multivector::wedge_all(n, &rows).unwrap();
    if w.is_zero() {
        return false;
    }
    let lc = lam.coords();
    let wc = w.coords();
    let mut polys = Vec::new();
    for i in 0..lc.len() {
        for j in (i + 1)..lc.len() {
            polys.push(
                lc[i].scale(&wc[j]) - lc[j].scale(&wc[i]),
            );
        }
    }
    let cs = ConstraintSet::new(f.free_params, polys);
    let cases = match solve_constraints(&cs, DEFAULT_CASE_BUDGET) {
        Ok(cases) => cases,
        Err(_) => return false,
    };
    let j0 = wc.iter().position(|c| !c.is_zero()).unwrap();
    cases.iter().any(|case| !lc[j0].compose(case.images()).is_zero())
}

/// Asserts that two scans of the same matrices describe identical subspace
/// sets dimension by dimension, ignoring eigenvalue tuples and chart
/// structure.
pub fn assert_scans_span_equal(
    a: &BTreeMap<usize, Vec<InvariantFamily>>,
    b: &BTreeMap<usize, Vec<InvariantFamily>>,
) {
    let points = grid();
    assert_eq!(a.len(), b.len(), "scans cover different dimension ranges");
    for (d, fa) in a {
        if *d == 0 {
            continue;
        }
        let fb = &b[d];
        for (src, dst, tag) in [(fa, fb, "first"), (fb, fa, "second")] {
            for f in src.iter().filter(|f| f.is_solved()) {
                for inst in instances(&f.generators, f.free_params, &points) {
                    assert!(
                        dst.iter().any(|g| family_contains(g, &inst)),
                        "dimension {} subspace from the {} scan is missing from the other",
                        d,
                        tag
                    );
                }
            }
        }
    }
}

/// One expected family: a dimension, the eigenvalue tuple of the shifted
/// compounds, and a generator description (possibly parametrized by `a`, `b`).
pub struct ExpectedRow {
    pub dim: usize,
    pub tuple: &'static [i64],
    pub desc: &'static str,
}

pub fn row(dim: usize, tuple: &'static [i64], desc: &'static str) -> ExpectedRow {
    ExpectedRow { dim, tuple, desc }
}

fn tuple_matches(f: &InvariantFamily, tuple: &[i64]) -> bool {
    match &f.eigen {
        Some(t) => {
            t.values().len() == tuple.len()
                && t.values().iter().zip(tuple).all(|(v, &k)| *v == rat(k))
        }
        None => false,
    }
}

/// Asserts that every grid instance of every expected row is matched, up to
/// span equality, by a grid instance of some solved emitted family with the
/// same dimension and eigenvalue tuple.
pub fn assert_rows_covered(
    scan: &BTreeMap<usize, Vec<InvariantFamily>>,
    n: usize,
    rows: &[ExpectedRow],
) {
    let points = grid();
    for r in rows {
        let gens = parse_generators(n, r.desc);
        let fams: Vec<&InvariantFamily> = scan
            .get(&r.dim)
            .map(|v| {
                v.iter()
                    .filter(|f| f.is_solved() && tuple_matches(f, r.tuple))
                    .collect()
            })
            .unwrap_or_default();
        assert!(
            !fams.is_empty(),
            "no solved family with dimension {} and tuple {:?}",
            r.dim,
            r.tuple
        );
        let emitted: Vec<Matrix<Rat>> = fams
            .iter()
            .flat_map(|f| instances(&f.generators, f.free_params, &points))
            .collect();
        for vals in param_assignments(matrix_params(&gens), &points) {
            let target = gens.map(|p| p.eval(&vals));
            assert_eq!(
                target.rank(),
                r.dim,
                "expected row '{}' degenerates at {:?}",
                r.desc,
                vals
            );
            let hit = emitted.iter().any(|inst| same_span(inst, &target))
                || fams.iter().any(|f| family_contains(f, &target));
            assert!(
                hit,
                "row '{}' at {:?} (dimension {}, tuple {:?}) was not produced",
                r.desc,
                vals,
                r.dim,
                r.tuple
            );
        }
    }
}

/// Asserts the reverse direction: every grid instance of every solved
/// emitted family lies in the span of some expected row instance with the
/// same dimension and eigenvalue tuple.
pub fn assert_families_covered(
    scan: &BTreeMap<usize, Vec<InvariantFamily>>,
    n: usize,
    rows: &[ExpectedRow],
) {
    let points = grid();
    for (d, fams) in scan {
        if *d == 0 {
            continue;
        }
        for f in fams.iter().filter(|f| f.is_solved()) {
            let matching: Vec<&ExpectedRow> = rows
                .iter()
                .filter(|r| r.dim == *d && tuple_matches(f, r.tuple))
                .collect();
            assert!(
                !matching.is_empty(),
                "family at dimension {} tuple {:?} has no expected counterpart",
                d,
                f.eigen
            );
            let expected: Vec<Matrix<Rat>> = matching
                .iter()
                .flat_map(|r| {
                    let gens = parse_generators(n, r.desc);
                    let p = matrix_params(&gens);
                    instances(&gens, p, &points)
                })
                .collect();
            for inst in instances(&f.generators, f.free_params, &points) {
                assert!(
                    expected.iter().any(|t| same_span(t, &inst)),
                    "family at dimension {} tuple {:?} chart {} emits a subspace \
                     outside the expected table",
                    d,
                    f.eigen,
                    f.chart
                );
            }
        }
    }
}

/// Asserts that the (dimension, tuple) pairs of the solved emitted families
/// are exactly those of the expected table.
pub fn assert_tuple_sets_match(
    scan: &BTreeMap<usize, Vec<InvariantFamily>>,
    rows: &[ExpectedRow],
) {
    let expected: BTreeSet<(usize, Vec<Rat>)> = rows
        .iter()
        .map(|r| (r.dim, r.tuple.iter().map(|&k| rat(k)).collect()))
        .collect();
    let got: BTreeSet<(usize, Vec<Rat>)> = scan
        .iter()
        .flat_map(|(d, fams)| {
            fams.iter()
                .filter(|f| f.is_solved() && f.eigen.is_some())
                .map(move |f| (*d, f.eigen.as_ref().unwrap().values().to_vec()))
        })
        .collect();
    assert_eq!(got, expected, "eigenvalue tuple sets differ");
}

/// Expected table for [`dim4_triple`]: the lattice is a single flag plus a
/// projective line of 3-dimensional subspaces.
pub fn dim4_rows() -> Vec<ExpectedRow> {
    vec![
        row(1, &[1, 1, 1], "e1"),
        row(2, &[1, 1, 1], "e1; e2"),
        row(3, &[1, 1, 1], "e1; e2; e3"),
        row(3, &[1, 1, 1], "e1; e2; a e3 + e4"),
        row(4, &[1, 1, 1], "e1; e2; e3; e4"),
    ]
}

/// Expected table for [`dim7_pair_a`] at shift 1.
pub fn dim7_a_rows() -> Vec<ExpectedRow> {
    vec![
        row(1, &[2, 1], "e5"),
        row(1, &[2, 1], "a e5 + e6"),
        row(1, &[3, 1], "e3"),
        row(1, &[4, 1], "e7"),
        row(2, &[4, 1], "e4; e6"),
        row(2, &[4, 1], "a e4 + e5; e6"),
        row(2, &[6, 1], "e3; e5"),
        row(2, &[6, 1], "e3; a e5 + e6"),
        row(2, &[8, 1], "e5; e7"),
        row(2, &[8, 1], "a e5 + e6; e7"),
        row(2, &[9, 1], "e2; e3"),
        row(2, &[12, 1], "e3; e7"),
        row(2, &[16, 1], "e1; e7"),
        row(3, &[8, 1], "e4; e5; e6"),
        row(3, &[12, 1], "e3; e4; e6"),
        row(3, &[12, 1], "e3; a e4 + e5; e6"),
        row(3, &[16, 1], "e4; e6; e7"),
        row(3, &[16, 1], "a e4 + e5; e6; e7"),
        row(3, &[18, 1], "e2; e3; e5"),
        row(3, &[18, 1], "e2; e3; a e5 + e6"),
        row(3, &[24, 1], "e3; e5; e7"),
        row(3, &[24, 1], "e3; a e5 + e6; e7"),
        row(3, &[32, 1], "e1; e5; e7"),
        row(3, &[32, 1], "e1; a e5 + e6; e7"),
        row(3, &[36, 1], "e2; e3; e7"),
        row(3, &[48, 1], "e1; e3; e7"),
        row(4, &[24, 1], "e3; e4; e5; e6"),
        row(4, &[32, 1], "e4; e5; e6; e7"),
        row(4, &[36, 1], "e2; e3; e4; e6"),
        row(4, &[36, 1], "e2; e3; a e4 + e5; e6"),
        row(4, &[48, 1], "e3; e4; e6; e7"),
        row(4, &[48, 1], "e3; a e4 + e5; e6; e7"),
        row(4, &[64, 1], "e1; e4; e6; e7"),
        row(4, &[64, 1], "e1; a e4 + e5; e6; e7"),
        row(4, &[72, 1], "e2; e3; e5; e7"),
        row(4, &[72, 1], "e2; e3; a e5 + e6; e7"),
        row(4, &[96, 1], "e1; e3; e5; e7"),
        row(4, &[96, 1], "e1; e3; a e5 + e6; e7"),
        row(4, &[144, 1], "e1; e2; e3; e7"),
        row(5, &[72, 1], "e2; e3; e4; e5; e6"),
        row(5, &[96, 1], "e3; e4; e5; e6; e7"),
        row(5, &[128, 1], "e1; e4; e5; e6; e7"),
        row(5, &[144, 1], "e2; e3; e4; e6; e7"),
        row(5, &[144, 1], "e2; e3; a e4 + e5; e6; e7"),
        row(5, &[192, 1], "e1; e3; e4; e6; e7"),
        row(5, &[192, 1], "e1; e3; a e4 + e5; e6; e7"),
        row(5, &[288, 1], "e1; e2; e3; e5; e7"),
        row(5, &[288, 1], "e1; e2; e3; a e5 + e6; e7"),
        row(6, &[288, 1], "e2; e3; e4; e5; e6; e7"),
        row(6, &[384, 1], "e1; e3; e4; e5; e6; e7"),
        row(6, &[576, 1], "e1; e2; e3; e4; e6; e7"),
        row(6, &[576, 1], "e1; e2; e3; a e4 + e5; e6; e7"),
        row(7, &[1152, 1], "e1; e2; e3; e4; e5; e6; e7"),
    ]
}

/// Expected table for [`dim7_pair_b`] at shift 1.
pub fn dim7_b_rows() -> Vec<ExpectedRow> {
    vec![
        row(1, &[2, 1], "e6"),
        row(1, &[2, 2], "e5 + e6"),
        row(1, &[3, 1], "e3"),
        row(1, &[4, 1], "e7"),
        row(2, &[4, 2], "e5; e6"),
        row(2, &[6, 1], "e3; e6"),
        row(2, &[6, 2], "e3; e5 + e6"),
        row(2, &[8, 1], "e6; e7"),
        row(2, &[8, 2], "e5 + e6; e7"),
        row(2, &[9, 1], "e2; e3"),
        row(2, &[12, 1], "e3; e7"),
        row(2, &[16, 1], "e1; e7"),
        row(3, &[12, 2], "e3; e5; e6"),
        row(3, &[16, 2], "e5; e6; e7"),
        row(3, &[18, 1], "e2; e3; e4"),
        row(3, &[18, 1], "e2; e3; a e4 + e6"),
        row(3, &[18, 2], "e2; e3; e5 + e6"),
        row(3, &[24, 1], "e3; e6; e7"),
        row(3, &[24, 2], "e3; e5 + e6; e7"),
        row(3, &[32, 1], "e1; e6; e7"),
        row(3, &[32, 2], "e1; e5 + e6; e7"),
        row(3, &[36, 1], "e2; e3; e7"),
        row(3, &[48, 1], "e1; e3; e7"),
        row(4, &[36, 1], "e2; e3; e4; e6"),
        row(4, &[36, 2], "e2; e3; e4; e5 + e6"),
        row(4, &[36, 2], "e2; e3; a e4 + e5; -a e4 + e6"),
        row(4, &[48, 2], "e3; e5; e6; e7"),
        row(4, &[64, 2], "e1; e5; e6; e7"),
        row(4, &[72, 1], "e2; e3; e4; e7"),
        row(4, &[72, 1], "e2; e3; a e4 + e6; e7"),
        row(4, &[72, 2], "e2; e3; e5 + e6; e7"),
        row(4, &[96, 1], "e1; e3; e6; e7"),
        row(4, &[96, 2], "e1; e3; e5 + e6; e7"),
        row(4, &[144, 1], "e1; e2; e3; e7"),
        row(5, &[72, 2], "e2; e3; e4; e5; e6"),
        row(5, &[144, 1], "e2; e3; e4; e6; e7"),
        row(5, &[144, 2], "e2; e3; e4; e5 + e6; e7"),
        row(5, &[144, 2], "e2; e3; a e4 + e5; -a e4 + e6; e7"),
        row(5, &[192, 2], "e1; e3; e5; e6; e7"),
        row(5, &[288, 1], "e1; e2; e3; e4; e7"),
        row(5, &[288, 1], "e1; e2; e3; a e4 + e6; e7"),
        row(5, &[288, 2], "e1; e2; e3; e5 + e6; e7"),
        row(6, &[288, 2], "e2; e3; e4; e5; e6; e7"),
        row(6, &[576, 1], "e1; e2; e3; e4; e6; e7"),
        row(6, &[576, 2], "e1; e2; e3; e4; e5 + e6; e7"),
        row(6, &[576, 2], "e1; e2; e3; a e4 + e5; -a e4 + e6; e7"),
        row(7, &[1152, 2], "e1; e2; e3; e4; e5; e6; e7"),
    ]
}

/// Expected table for [`dim9_triple`] at shift 3. The six-dimensional
/// two-parameter family is listed with independent parameters `a`, `b`.
pub fn dim9_rows() -> Vec<ExpectedRow> {
    vec![
        row(1, &[3, 3, 3], "e1 + e5"),
        row(1, &[3, 3, 3], "a e1 + a e5 + e9"),
        row(2, &[8, 9, 9], "e3; e6"),
        row(2, &[8, 9, 9], "a e6 + e7; -a e3 + e8"),
        row(2, &[9, 9, 9], "e1 + e5; e9"),
        row(3, &[24, 27, 27], "e3; e6; a e1 + a e5 + e9"),
        row(3, &[24, 27, 27], "e3; e1 + e5; e6"),
        row(3, &[24, 27, 27], "e7; e8; a e1 + a e5 + e9"),
        row(3, &[24, 27, 27], "e1 + e5; a e6 + e7; -a e3 + e8"),
        row(3, &[24, 27, 27], "a e6 + e7; -a e3 + e8; e9"),
        row(3, &[24, 27, 27], "a e6 + e7; -a e3 + e8; a e1 + a e5 + e9"),
        row(3, &[15, 27, 27], "e2; e4; -e1 + e5"),
        row(4, &[64, 81, 81], "e3; e6; e7; e8"),
        row(4, &[72, 81, 81], "e3; e1 + e5; e6; e9"),
        row(4, &[72, 81, 81], "e1 + e5; a e6 + e7; -a e3 + e8; e9"),
        row(4, &[45, 81, 81], "e1; e2; e4; e5"),
        row(4, &[45, 81, 81], "e2; e4; -e1 + e5; a e1 + e9"),
        row(5, &[192, 243, 243], "e3; e1 + e5; e6; e7; e8"),
        row(5, &[192, 243, 243], "e3; e6; e7; e8; a e1 + a e5 + e9"),
        row(5, &[120, 243, 243], "e2; e3; e4; -e1 + e5; e6"),
        row(5, &[120, 243, 243], "e2; e4; -e1 + e5; a e6 + e7; -a e3 + e8"),
        row(5, &[135, 243, 243], "e1; e2; e4; e5; e9"),
        row(6, &[576, 729, 729], "e3; e1 + e5; e6; e7; e8; e9"),
        row(6, &[360, 729, 729], "e1; e2; e3; e4; e5; e6"),
        row(6, &[360, 729, 729], "e1; e2; e4; e5; a e6 + e7; -a e3 + e8"),
        row(6, &[360, 729, 729], "e2; e3; e4; -e1 + e5; e6; a e1 + e9"),
        row(
            6,
            &[360, 729, 729],
            "e2; e4; -e1 + e5; a e6 + e7; -a e3 + e8; b e1 + e9",
        ),
        row(7, &[960, 2187, 2187], "e2; e3; e4; -e1 + e5; e6; e7; e8"),
        row(7, &[1080, 2187, 2187], "e1; e2; e3; e4; e5; e6; e9"),
        row(
            7,
            &[1080, 2187, 2187],
            "e1; e2; e4; e5; a e6 + e7; -a e3 + e8; e9",
        ),
        row(8, &[2880, 6561, 6561], "e1; e2; e3; e4; e5; e6; e7; e8"),
        row(
            8,
            &[2880, 6561, 6561],
            "e2; e3; e4; -e1 + e5; e6; e7; e8; a e1 + e9",
        ),
        row(
            9,
            &[8640, 19683, 19683],
            "e1; e2; e3; e4; e5; e6; e7; e8; e9",
        ),
    ]
}
