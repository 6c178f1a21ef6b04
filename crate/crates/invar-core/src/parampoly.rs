//! Sparse multivariate polynomials over ℚ in the chart parameters t1, t2, ….
//!
//! These carry the free parameters of subspace families through wedge
//! products, Plücker constraints, and parameter-aware elimination. The
//! term order is graded lexicographic, which makes exact multivariate
//! division well-founded and gives every polynomial a canonical printed form.

use crate::scalar::Scalar;
use crate::Rat;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector with trailing zeros trimmed; `Monomial::one()` is the
/// empty vector. Ordered by total degree first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Monomial(e)
    }

    fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Monomial::new(
            (0..len)
                .map(|i| self.exponent(i) + other.exponent(i))
                .collect(),
        )
    }

    pub fn divides(&self, other: &Self) -> bool {
        (0..self.0.len()).all(|i| self.exponent(i) <= other.exponent(i))
    }

    /// other / self; caller must ensure divisibility.
    pub fn div_into(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        Monomial::new(
            (0..other.0.len())
                .map(|i| other.exponent(i) - self.exponent(i))
                .collect(),
        )
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let len = self.0.len().max(other.0.len());
                for i in 0..len {
                    match self.exponent(i).cmp(&other.exponent(i)) {
                        std::cmp::Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                std::cmp::Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Multivariate polynomial over ℚ; no zero coefficients are stored, so the
/// zero polynomial has an empty term map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl ParamPoly {
    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        ParamPoly { terms }
    }

    pub fn from_i64(c: i64) -> Self {
        ParamPoly::constant(Rat::from_integer(c.into()))
    }

    /// The parameter t_{i+1} (variables are 0-indexed internally).
    pub fn var(i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(i), Rat::one());
        ParamPoly { terms }
    }

    /// The monomial as a polynomial with coefficient 1.
    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Rat::one());
        ParamPoly { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rat {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of an exact monomial.
    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(var)).max().unwrap_or(0)
    }

    /// Indices of the parameters that actually occur.
    pub fn vars_used(&self) -> BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.vars().collect::<Vec<_>>()).collect()
    }

    /// 1 + the largest parameter index present (0 for constants).
    pub fn num_params(&self) -> usize {
        self.vars_used().iter().max().map_or(0, |&i| i + 1)
    }

    fn insert_add(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Replaces parameter `var` by `value` everywhere.
    pub fn substitute(&self, var: usize, value: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let mut exps: Vec<u32> = (0..m.0.len()).map(|i| m.exponent(i)).collect();
            if e > 0 {
                exps[var] = 0;
            }
            let base = ParamPoly {
                terms: BTreeMap::from([(Monomial::new(exps), c.clone())]),
            };
            let mut term = base;
            for _ in 0..e {
                term = term * value.clone();
            }
            out = out + term;
        }
        out
    }

    /// Simultaneous substitution t_i := images[i] for every parameter; every
    /// used variable must have an image.
    pub fn compose(&self, images: &[ParamPoly]) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut term = ParamPoly::constant(c.clone());
            for v in m.vars() {
                let img = images.get(v).expect("parameter without an image");
                for _ in 0..m.exponent(v) {
                    term = term * img.clone();
                }
            }
            out = out + term;
        }
        out
    }

    /// Greatest monomial dividing every term; `Monomial::one()` for zero.
    pub fn monomial_content(&self) -> Monomial {
        let mut iter = self.terms.keys();
        let Some(first) = iter.next() else {
            return Monomial::one();
        };
        let mut exps: Vec<u32> = (0..first.0.len()).map(|i| first.exponent(i)).collect();
        for m in iter {
            for (i, e) in exps.iter_mut().enumerate() {
                *e = (*e).min(m.exponent(i));
            }
        }
        Monomial::new(exps)
    }

    /// Evaluates at a full rational assignment (params beyond the slice are
    /// taken as 0).
    pub fn eval(&self, values: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = &t * values.get(i).unwrap_or(&Rat::zero());
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Renames parameters according to `map[old] = new`; every used variable
    /// must be mapped.
    pub fn rename_params(&self, map: &BTreeMap<usize, usize>) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut exps: Vec<u32> = Vec::new();
            for i in m.vars() {
                let j = *map.get(&i).expect("unmapped parameter");
                if exps.len() <= j {
                    exps.resize(j + 1, 0);
                }
                exps[j] = m.exponent(i);
            }
            out.insert_add(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Leading term under graded lex, `None` for zero.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Splits `self` as c·t_var + rest when the coefficient of t_var is a
    /// nonzero rational constant and t_var occurs nowhere else.
    pub fn linear_in(&self, var: usize) -> Option<(Rat, ParamPoly)> {
        let vm = Monomial::var(var);
        let c = self.coeff(&vm);
        if c.is_zero() {
            return None;
        }
        let mut rest = ParamPoly::zero();
        for (m, a) in &self.terms {
            if *m == vm {
                continue;
            }
            if m.exponent(var) > 0 {
                return None;
            }
            rest.insert_add(m.clone(), a.clone());
        }
        Some((c, rest))
    }

    /// Divides out the rational content and makes the leading coefficient
    /// positive; the zero polynomial stays zero. Canonical representative of
    /// the polynomial up to nonzero rational scaling.
    pub fn normalized(&self) -> ParamPoly {
        let Some((_, lead)) = self.leading() else {
            return ParamPoly::zero();
        };
        let mut num_gcd = crate::Int::zero();
        let mut den_lcm = crate::Int::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut scale = Rat::new(den_lcm, num_gcd);
        if lead.is_negative() {
            scale = -scale;
        }
        self.scale(&scale)
    }

    /// Exact multivariate division, `None` when the division leaves a
    /// remainder at any step.
    pub fn try_exact_div(&self, div: &ParamPoly) -> Option<ParamPoly> {
        assert!(!div.is_zero(), "division by zero polynomial");
        let (dm, dc) = div.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.div_into(rm);
            let qc = rc / &dc;
            let t = ParamPoly {
                terms: BTreeMap::from([(qm, qc)]),
            };
            rem = rem - t.clone() * div.clone();
            quot = quot + t;
        }
        Some(quot)
    }

    /// The polynomial restricted to a single variable, as dense ascending
    /// coefficients; `None` when other variables occur.
    pub fn as_univariate(&self, var: usize) -> Option<Vec<Rat>> {
        let mut coeffs = vec![Rat::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if m.total_degree() != e {
                return None;
            }
            coeffs[e as usize] = c.clone();
        }
        Some(coeffs)
    }
}

impl Zero for ParamPoly {
    fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ParamPoly {
    fn one() -> Self {
        ParamPoly::constant(Rat::one())
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;

    fn add(self, rhs: ParamPoly) -> ParamPoly {
        let mut out = self;
        for (m, c) in rhs.terms {
            out.insert_add(m, c);
        }
        out
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;

    fn sub(self, rhs: ParamPoly) -> ParamPoly {
        self + (-rhs)
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;

    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;

    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Scalar for ParamPoly {
    fn from_rat(r: Rat) -> Self {
        ParamPoly::constant(r)
    }

    fn to_rat(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    fn exact_div(&self, div: &Self) -> Self {
        self.try_exact_div(div)
            .expect("inexact polynomial division in a fraction-free context")
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render(&|i| format!("t{}", i + 1)))
    }
}

impl ParamPoly {
    /// Renders with a caller-chosen parameter naming (t1, t2 … or α, β …),
    /// terms in descending graded-lex order.
    pub fn render(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = m
                .vars()
                .map(|v| {
                    let e = m.exponent(v);
                    if e == 1 {
                        name(v)
                    } else {
                        format!("{}^{}", name(v), e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            if mono.is_empty() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{a}*{mono}"));
            }
        }
        out
    }
}
