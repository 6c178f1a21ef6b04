//! Quadratic exchange relations on Plücker coordinates, the total
//! decomposability test they induce, and an exact case-splitting solver for
//! the constraint systems obtained by evaluating the relations on a
//! parametrized family of multivectors.
//!
//! A degree-d multivector is a wedge of d vectors exactly when all the
//! relations vanish on its coordinates. For chart families the relations
//! become polynomials in the chart parameters; [`solve_constraints`] reduces
//! such a system to a finite list of polynomial parameter assignments.

use crate::error::{Error, Result};
use crate::exterior::Multivector;
use crate::index_set::{sign_insert, sign_shuffle, IndexSet};
use crate::parampoly::ParamPoly;
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use crate::Rat;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// One quadratic form Σ c·x_R·x_S in Plücker coordinates; coordinates are
/// addressed by lexicographic rank and each pair is stored with R ≤ S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlueckerForm {
    terms: Vec<(i64, usize, usize)>,
}

impl PlueckerForm {
    pub fn terms(&self) -> &[(i64, usize, usize)] {
        &self.terms
    }

    /// Evaluates the form on the coordinates of a multivector.
    pub fn eval<T: Scalar>(&self, v: &Multivector<T>) -> T {
        let coords = v.coords();
        let mut acc = T::zero();
        for &(c, i, j) in &self.terms {
            let a = &coords[i];
            if a.is_zero() {
                continue;
            }
            let b = &coords[j];
            if b.is_zero() {
                continue;
            }
            acc = acc + T::from_rat(Rat::from_integer(c.into())) * a.clone() * b.clone();
        }
        acc
    }
}

/// All exchange relations for ⋀^d of an n-dimensional space, deduplicated up
/// to sign and with identically-zero relations dropped.
///
/// For index sets K (|K| = d+1) and L (|L| = n−d+1) with K ∩ L ≠ ∅ the
/// relation is Σ over s ∈ K∩L of
/// sgn(s→K∖s)·sgn(s→L∖s)·sgn((L∖s)′,L∖s)·x_{K∖s}·x_{(L∖s)′}.
pub fn pluecker_relations(n: u32, d: u32) -> Vec<PlueckerForm> {
    assert!(d >= 1 && d <= n, "degree {d} out of range for dimension {n}");
    let mut out = Vec::new();
    if d == n {
        return out;
    }
    let mut seen: BTreeSet<Vec<(i64, usize, usize)>> = BTreeSet::new();
    for k_set in IndexSet::all(n, d + 1) {
        for l_set in IndexSet::all(n, n - d + 1) {
            let common: Vec<u32> = k_set
                .elems()
                .iter()
                .copied()
                .filter(|&e| l_set.contains(e))
                .collect();
            if common.is_empty() {
                continue;
            }
            let mut merged: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            for s in common {
                let k_minus = k_set.without(s).unwrap();
                let l_minus = l_set.without(s).unwrap();
                let l_comp = l_minus.complement();
                let sgn = sign_insert(s, &k_minus).unwrap()
                    * sign_insert(s, &l_minus).unwrap()
                    * sign_shuffle(&l_comp, &l_minus).unwrap();
                let (mut r1, mut r2) = (k_minus.rank(), l_comp.rank());
                if r1 > r2 {
                    std::mem::swap(&mut r1, &mut r2);
                }
                *merged.entry((r1, r2)).or_insert(0) += i64::from(sgn);
            }
            let mut terms: Vec<(i64, usize, usize)> = merged
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|((i, j), c)| (c, i, j))
                .collect();
            if terms.is_empty() {
                continue;
            }
            if terms[0].0 < 0 {
                for t in &mut terms {
                    t.0 = -t.0;
                }
            }
            if seen.insert(terms.clone()) {
                out.push(PlueckerForm { terms });
            }
        }
    }
    out
}

/// Whether a nonzero multivector is a wedge of `d` vectors. Errors on the
/// zero multivector, which represents no subspace.
pub fn is_totally_decomposable<T: Scalar>(v: &Multivector<T>) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::ZeroMultivector);
    }
    let (n, d) = (v.n(), v.degree());
    if d <= 1 || d + 1 >= n {
        return Ok(true);
    }
    Ok(pluecker_relations(n, d).iter().all(|r| r.eval(v).is_zero()))
}

/// A deduplicated system of polynomial constraints on a fixed parameter
/// space t_1 … t_k. Polynomials are stored normalized (content 1, positive
/// leading coefficient) and sorted, so equal systems compare equal.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintSet {
    num_params: usize,
    polys: Vec<ParamPoly>,
}

impl ConstraintSet {
    pub fn new(num_params: usize, polys: impl IntoIterator<Item = ParamPoly>) -> Self {
        let set: BTreeSet<ParamPoly> = polys
            .into_iter()
            .map(|p| p.normalized())
            .filter(|p| !p.is_zero())
            .collect();
        let polys: Vec<ParamPoly> = set.into_iter().collect();
        for p in &polys {
            assert!(
                p.num_params() <= num_params,
                "constraint uses a parameter beyond the declared space"
            );
        }
        ConstraintSet { num_params, polys }
    }

    pub fn num_params(&self) -> usize {
        self.num_params
    }

    pub fn polys(&self) -> &[ParamPoly] {
        &self.polys
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }
}

/// Plücker constraints induced on a parametrized multivector family.
pub fn constrain_family(v: &Multivector<ParamPoly>, num_params: usize) -> ConstraintSet {
    let rels = pluecker_relations(v.n(), v.degree());
    ConstraintSet::new(num_params, rels.iter().map(|r| r.eval(v)))
}

/// One solution branch of a constraint system: every original parameter as a
/// polynomial in the `free_params` parameters that remain free.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveCase {
    images: Vec<ParamPoly>,
    free_params: usize,
}

impl SolveCase {
    /// The trivial solution of an empty system: all k parameters stay free.
    pub fn identity(k: usize) -> Self {
        SolveCase {
            images: (0..k).map(ParamPoly::var).collect(),
            free_params: k,
        }
    }

    pub fn images(&self) -> &[ParamPoly] {
        &self.images
    }

    pub fn free_params(&self) -> usize {
        self.free_params
    }

    /// Rewrites a polynomial over the original parameters in terms of this
    /// branch's free parameters.
    pub fn apply(&self, p: &ParamPoly) -> ParamPoly {
        p.compose(&self.images)
    }

    /// Chains a refinement of this branch's free parameters: the result maps
    /// the original parameters into `inner`'s free parameters.
    pub fn compose(outer: &SolveCase, inner: &SolveCase) -> SolveCase {
        debug_assert!(
            inner.images.len() >= outer.free_params,
            "refinement must cover the outer free parameters"
        );
        SolveCase {
            images: outer.images.iter().map(|p| inner.apply(p)).collect(),
            free_params: inner.free_params,
        }
    }
}

/// Working state of one solver branch: `images` maps the original parameters
/// to polynomials over the current working parameters 0..k_work, and
/// `residual` holds the remaining constraints over those same parameters.
#[derive(Clone)]
struct Branch {
    images: Vec<ParamPoly>,
    k_work: usize,
    residual: Vec<ParamPoly>,
}

impl Branch {
    /// Normalizes and deduplicates the residual; false means a nonzero
    /// constant appeared, so the branch has no solutions.
    fn tidy(&mut self) -> bool {
        let set: BTreeSet<ParamPoly> = self
            .residual
            .drain(..)
            .map(|p| p.normalized())
            .filter(|p| !p.is_zero())
            .collect();
        self.residual = set.into_iter().collect();
        self.residual.iter().all(|p| !p.is_constant())
    }

    /// Sets working parameter `var` to `value` (a polynomial in the other
    /// working parameters), renumbers the rest consecutively, and rewrites
    /// both the images and the residual.
    fn eliminate(&mut self, var: usize, value: &ParamPoly) {
        debug_assert_eq!(value.degree_in(var), 0, "assignment refers to itself");
        let rename: BTreeMap<usize, usize> = (0..self.k_work)
            .filter(|&i| i != var)
            .map(|i| (i, if i > var { i - 1 } else { i }))
            .collect();
        let value = value.rename_params(&rename);
        let working_images: Vec<ParamPoly> = (0..self.k_work)
            .map(|i| {
                if i == var {
                    value.clone()
                } else {
                    ParamPoly::var(rename[&i])
                }
            })
            .collect();
        for img in &mut self.images {
            *img = img.compose(&working_images);
        }
        for p in &mut self.residual {
            *p = p.compose(&working_images);
        }
        self.k_work -= 1;
    }

    /// Runs forced-parameter elimination to a fixpoint. Returns false when a
    /// contradiction surfaces.
    ///
    /// Two kinds of constraints force a parameter without any case split: a
    /// single-term constraint c·t_v^e, which forces t_v = 0, and a parameter
    /// occurring linearly with a constant coefficient, which is solved for
    /// that parameter.
    fn substitute_to_fixpoint(&mut self) -> bool {
        loop {
            if !self.tidy() {
                return false;
            }
            let mut found = None;
            'scan: for p in &self.residual {
                if let Some(v) = forced_zero_var(p) {
                    found = Some((v, ParamPoly::zero()));
                    break 'scan;
                }
                for v in 0..self.k_work {
                    if let Some((c, rest)) = p.linear_in(v) {
                        let value = rest.scale(&(-Rat::one() / c));
                        found = Some((v, value));
                        break 'scan;
                    }
                }
            }
            match found {
                Some((v, value)) => self.eliminate(v, &value),
                None => return true,
            }
        }
    }
}

/// For a one-term constraint c·t_v^e in a single parameter, the only way to
/// vanish is t_v = 0.
fn forced_zero_var(p: &ParamPoly) -> Option<usize> {
    let mut terms = p.terms();
    let (m, _) = terms.next()?;
    if terms.next().is_some() {
        return None;
    }
    let vars: Vec<usize> = m.vars().collect();
    if vars.len() == 1 {
        Some(vars[0])
    } else {
        None
    }
}

fn solve_branch(
    mut branch: Branch,
    splits_left: usize,
    out: &mut Vec<SolveCase>,
) -> Result<()> {
    if !branch.substitute_to_fixpoint() {
        return Ok(());
    }
    if branch.residual.is_empty() {
        let case = SolveCase {
            images: branch.images,
            free_params: branch.k_work,
        };
        if !out.contains(&case) {
            out.push(case);
        }
        return Ok(());
    }
    if splits_left == 0 {
        return Err(Error::CaseBudgetExceeded {
            k: branch.k_work,
            k_max: 0,
            constraints: branch.residual,
        });
    }

    let f = branch.residual[0].clone();

    // A common monomial factor splits the variety into the vanishing locus
    // of each participating parameter plus the locus of the cofactor.
    let content = f.monomial_content();
    if !content.is_one() {
        for v in content.vars() {
            let mut sub = branch.clone();
            sub.eliminate(v, &ParamPoly::zero());
            solve_branch(sub, splits_left - 1, out)?;
        }
        let cofactor = f
            .try_exact_div(&ParamPoly::from_monomial(content))
            .expect("content divides every term");
        let mut sub = branch;
        sub.residual[0] = cofactor;
        solve_branch(sub, splits_left - 1, out)?;
        return Ok(());
    }

    // A constraint in a single parameter with constant coefficients pins
    // that parameter to one of its rational roots.
    let vars: Vec<usize> = f.vars_used().into_iter().collect();
    if vars.len() == 1 {
        if let Some(coeffs) = f.as_univariate(vars[0]) {
            let (roots, _) = UniPoly::new(coeffs).rational_roots();
            for root in roots.into_keys() {
                let mut sub = branch.clone();
                sub.eliminate(vars[0], &ParamPoly::constant(root));
                solve_branch(sub, splits_left - 1, out)?;
            }
            return Ok(());
        }
    }

    Err(Error::CaseBudgetExceeded {
        k: branch.k_work,
        k_max: 0,
        constraints: branch.residual,
    })
}

/// Solves a Plücker constraint system over ℚ into a finite list of branches.
///
/// Parameters that occur linearly with a constant coefficient are eliminated
/// by substitution without limit; the remaining system is attacked by case
/// analysis (common-factor splits and rational roots of single-parameter
/// constraints) at most `k_max` levels deep. If the system is still not
/// resolved the error carries the original constraints.
pub fn solve_constraints(cs: &ConstraintSet, k_max: usize) -> Result<Vec<SolveCase>> {
    let branch = Branch {
        images: (0..cs.num_params()).map(ParamPoly::var).collect(),
        k_work: cs.num_params(),
        residual: cs.polys().to_vec(),
    };
    let mut out = Vec::new();
    solve_branch(branch, k_max, &mut out).map_err(|e| match e {
        Error::CaseBudgetExceeded { k, .. } => Error::CaseBudgetExceeded {
            k,
            k_max,
            constraints: cs.polys().to_vec(),
        },
        other => other,
    })?;
    Ok(out)
}
