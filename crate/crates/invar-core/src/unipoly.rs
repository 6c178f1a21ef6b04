//! Univariate polynomials over the rationals and exact rational root
//! extraction via the rational-root theorem.

use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial with rational coefficients, stored in ascending degree.
/// The zero polynomial has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix (used by the
    /// Cayley–Hamilton property test).
    pub fn eval_matrix(&self, m: &crate::Matrix<Rat>) -> crate::Matrix<Rat> {
        let n = m.rows();
        let mut acc = crate::Matrix::<Rat>::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = m.mul(&acc);
            for i in 0..n {
                acc[(i, i)] = &acc[(i, i)] + c;
            }
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }

    /// Synthetic division by (x − r); returns the quotient only when the
    /// remainder is exactly zero.
    fn deflate(&self, r: &Rat) -> Option<UniPoly> {
        if self.is_zero() {
            return None;
        }
        let n = self.coeffs.len();
        let mut q = vec![Rat::zero(); n - 1];
        let mut carry = Rat::zero();
        for i in (0..n).rev() {
            let v = &self.coeffs[i] + &(&carry * r);
            if i == 0 {
                if !v.is_zero() {
                    return None;
                }
            } else {
                q[i - 1] = v.clone();
                carry = v;
            }
        }
        Some(UniPoly::new(q))
    }

    /// Coefficients as a primitive integer polynomial (positive content
    /// removed, common denominator cleared). Sign of the leading coefficient
    /// is preserved. Returns `None` for the zero polynomial.
    fn primitive_integer(&self) -> Option<Vec<Int>> {
        if self.is_zero() {
            return None;
        }
        let mut l = Int::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        let ints: Vec<Int> = self.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
        let mut g = Int::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        Some(ints.into_iter().map(|c| c / &g).collect())
    }

    /// All rational roots with multiplicities, plus the residual factor left
    /// after dividing the linear factors out. The residual is the constant 1
    /// exactly when the full spectrum is rational (for monic input).
    ///
    /// Candidates come from the rational-root theorem on the primitive
    /// integer form: roots p/q must have p dividing the trailing and q
    /// dividing the leading coefficient.
    pub fn rational_roots(&self) -> (BTreeMap<Rat, usize>, UniPoly) {
        let mut roots = BTreeMap::new();
        let mut rem = self.clone();
        if rem.is_zero() || rem.degree() == Some(0) {
            return (roots, rem);
        }
        // Strip zero roots first so the trailing coefficient is nonzero.
        while rem.coeffs.first().is_some_and(Zero::is_zero) {
            *roots.entry(Rat::zero()).or_insert(0) += 1;
            rem = UniPoly::new(rem.coeffs[1..].to_vec());
        }
        let ints = match rem.primitive_integer() {
            Some(v) if v.len() > 1 => v,
            _ => return (roots, rem),
        };
        let trailing = ints.first().unwrap().abs();
        let leading = ints.last().unwrap().abs();
        let mut candidates: Vec<Rat> = Vec::new();
        for p in divisors(&trailing) {
            for q in divisors(&leading) {
                let c = Rat::new(p.clone(), q);
                if !candidates.contains(&c) {
                    candidates.push(c.clone());
                    candidates.push(-c);
                }
            }
        }
        candidates.sort();
        for c in candidates {
            while let Some(q) = rem.deflate(&c) {
                *roots.entry(c.clone()).or_insert(0) += 1;
                rem = q;
                if rem.degree() == Some(0) {
                    return (roots, rem);
                }
            }
        }
        (roots, rem)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// All positive divisors of |n|, via trial division plus Pollard's rho for
/// any large cofactor. Values beyond u128 fall back to treating the
/// unfactored cofactor as prime, which can only cause extra root candidates
/// to be skipped for astronomically large coefficients.
fn divisors(n: &Int) -> Vec<Int> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut factors: BTreeMap<Int, u32> = BTreeMap::new();
    let mut rest = n.clone();
    for p in [2u64, 3, 5, 7, 11, 13] {
        let p = Int::from(p);
        while (&rest % &p).is_zero() {
            *factors.entry(p.clone()).or_insert(0) += 1;
            rest /= &p;
        }
    }
    let mut p = Int::from(17u64);
    while &(&p * &p) <= &rest && p < Int::from(1u64 << 16) {
        while (&rest % &p).is_zero() {
            *factors.entry(p.clone()).or_insert(0) += 1;
            rest /= &p;
        }
        p += 2;
    }
    if !rest.is_one() {
        match rest.to_u128() {
            Some(r) => {
                for f in factor_u128(r) {
                    *factors.entry(Int::from(f)).or_insert(0) += 1;
                }
            }
            None => {
                *factors.entry(rest).or_insert(0) += 1;
            }
        }
    }
    let mut divs = vec![Int::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pe = Int::one();
            for _ in 0..=e {
                next.push(d * &pe);
                pe *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn factor_u128(n: u128) -> Vec<u128> {
    if n == 1 {
        return vec![];
    }
    if is_prime_u128(n) {
        return vec![n];
    }
    let d = pollard_rho(n);
    let mut out = factor_u128(d);
    out.extend(factor_u128(n / d));
    out
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    match a.checked_mul(b) {
        Some(p) => p % m,
        // Promote through big integers on 128-bit overflow.
        None => ((Int::from(a) * Int::from(b)) % Int::from(m)).to_u128().unwrap(),
    }
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1u128;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn is_prime_u128(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // Deterministic Miller-Rabin witness set for < 3.3 * 10^24.
    'witness: for a in [2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u128) -> u128 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u128;
    loop {
        let f = |x: u128| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u128, 2u128, 1u128);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd_u128(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
