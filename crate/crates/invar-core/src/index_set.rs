//! Strictly increasing index sequences: the basis labels of exterior powers.
//!
//! Indices are 1-based to match the usual e₁..e_n naming; conversion to
//! 0-based array positions happens here via [`IndexSet::rank`]. The basis of
//! ⋀^d V is ordered lexicographically on index sets (e₁∧e₂, e₁∧e₃, …), and
//! every coordinate vector and compound matrix in this crate uses that order.

use crate::error::{Error, Result};

/// Strictly increasing sequence of indices from 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    n: u32,
    elems: Vec<u32>,
}

/// Binomial coefficient C(n, k) as usize; the sizes in this crate stay far
/// below overflow (the computation goes through u128).
pub fn binomial(n: u32, k: u32) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as usize
}

impl IndexSet {
    /// Validates that `elems` is strictly increasing within 1..=n.
    pub fn new(n: u32, elems: Vec<u32>) -> Result<Self> {
        for w in elems.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::NotIncreasing);
            }
        }
        if let Some(&e) = elems.iter().find(|&&e| e < 1 || e > n) {
            return Err(Error::IndexOutOfRange { index: e, n });
        }
        Ok(IndexSet { n, elems })
    }

    pub fn empty(n: u32) -> Self {
        IndexSet { n, elems: Vec::new() }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[u32] {
        &self.elems
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elems.binary_search(&x).is_ok()
    }

    /// Lexicographic rank among all subsets of the same size, zero-based:
    /// {1,2} ranks 0 and {3,4} ranks 5 among the pairs in n=4.
    pub fn rank(&self) -> usize {
        let d = self.elems.len() as u32;
        let mut r = 0usize;
        let mut prev = 0u32;
        for (i, &x) in self.elems.iter().enumerate() {
            for y in prev + 1..x {
                r += binomial(self.n - y, d - i as u32 - 1);
            }
            prev = x;
        }
        r
    }

    /// Inverse of [`IndexSet::rank`] for subsets of size `d`.
    pub fn unrank(n: u32, d: u32, mut rank: usize) -> Self {
        let mut elems = Vec::with_capacity(d as usize);
        let mut x = 1u32;
        for i in 0..d {
            loop {
                let block = binomial(n - x, d - i - 1);
                if rank < block {
                    break;
                }
                rank -= block;
                x += 1;
            }
            elems.push(x);
            x += 1;
        }
        IndexSet { n, elems }
    }

    /// The increasing sequence (1..=n) ∖ self.
    pub fn complement(&self) -> IndexSet {
        let elems = (1..=self.n).filter(|&x| !self.contains(x)).collect();
        IndexSet { n: self.n, elems }
    }

    /// The set with `x` removed; `None` if `x` is not a member.
    pub fn without(&self, x: u32) -> Option<IndexSet> {
        let pos = self.elems.binary_search(&x).ok()?;
        let mut elems = self.elems.clone();
        elems.remove(pos);
        Some(IndexSet { n: self.n, elems })
    }

    /// Iterates over all d-subsets of 1..=n in lexicographic order.
    pub fn all(n: u32, d: u32) -> impl Iterator<Item = IndexSet> {
        (0..binomial(n, d)).map(move |r| IndexSet::unrank(n, d, r))
    }
}

/// The sign (−1)^|{x ∈ m : x < s}| of sorting (s, m₁, …, m_r) into
/// increasing order. Errors when s is already a member.
pub fn sign_insert(s: u32, m: &IndexSet) -> Result<i32> {
    if m.contains(s) {
        return Err(Error::AlreadyMember(s));
    }
    let below = m.elems.iter().filter(|&&x| x < s).count();
    Ok(if below % 2 == 0 { 1 } else { -1 })
}

/// The sign of the permutation sorting the concatenation (a, b), i.e.
/// (−1)^|{(x,y) : x ∈ a, y ∈ b, x > y}|. Errors when a and b overlap.
pub fn sign_shuffle(a: &IndexSet, b: &IndexSet) -> Result<i32> {
    let mut inversions = 0usize;
    for &x in &a.elems {
        if b.contains(x) {
            return Err(Error::Overlap);
        }
        inversions += b.elems.iter().filter(|&&y| y < x).count();
    }
    Ok(if inversions % 2 == 0 { 1 } else { -1 })
}
