//! Dense matrices over an exact coefficient domain.
//!
//! Provides construction and ring operations generically, plus the exact
//! elimination routines the search pipeline is built on: fraction-free
//! (Bareiss) echelon reduction, null spaces with a deterministic basis
//! normalization, linear solving, and characteristic polynomials.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::unipoly::UniPoly;
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Row-major dense matrix over a [`Scalar`] domain.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Builds a matrix from row-major data. `data.len()` must equal
    /// `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data length mismatch");
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::new(rows, cols, vec![T::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from nested rows; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix::new(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::new(self.rows, self.cols, self.data.iter().map(f).collect())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Stacks `self` on top of `other`; column counts must agree.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::new(self.rows + other.rows, self.cols, data)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    /// Submatrix with the given row and column selections (0-based).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination; exact over any
    /// [`Scalar`] domain because every division is by a previous pivot.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut m = self.clone();
        let mut prev = T::one();
        let mut sign_flip = false;
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !m[(r, k)].is_zero()) {
                    Some(r) => {
                        m.swap_rows(k, r);
                        sign_flip = !sign_flip;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(k, k)].clone() * m[(i, j)].clone()
                        - m[(i, k)].clone() * m[(k, j)].clone();
                    m[(i, j)] = num.exact_div(&prev);
                }
                m[(i, k)] = T::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        Ok(if sign_flip { -d } else { d })
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Outcome of [`solve_linear`]: the affine solution set of `m x = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    Inconsistent,
    Solution {
        particular: Vec<Rat>,
        kernel: Vec<Vec<Rat>>,
    },
}

/// Result of row reduction over the rationals.
#[derive(Debug, Clone)]
pub struct Rref {
    pub mat: Matrix<Rat>,
    /// Column index of each pivot, ascending.
    pub pivots: Vec<usize>,
}

impl Matrix<Rat> {
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Matrix::new(rows, cols, entries.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    /// Reduced row-echelon form over ℚ with the pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].clone();
            for j in c..m.cols {
                m[(r, j)] = &m[(r, j)] / &inv;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let sub = &f * &m[(r, j)];
                        m[(i, j)] = &m[(i, j)] - &sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Null-space basis by fraction-free Gaussian elimination.
    ///
    /// Rows are first cleared to integers, then reduced with the Bareiss
    /// scheme so every intermediate value stays an integer. Basis vectors are
    /// scaled to integer entries with content 1, the entry at the vector's
    /// own free column is positive, and vectors are ordered by ascending free
    /// column.
    pub fn null_space(&self) -> Vec<Vec<Rat>> {
        let rows = self.rows;
        let cols = self.cols;
        if cols == 0 {
            return Vec::new();
        }
        // Integerize each row: multiply by the lcm of its denominators.
        let mut m: Vec<Vec<Int>> = (0..rows)
            .map(|i| {
                let mut l = Int::one();
                for x in self.row(i) {
                    l = l.lcm(x.denom());
                }
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect()
            })
            .collect();

        // Bareiss forward elimination, recording pivot (row, col) pairs.
        let mut prev = Int::one();
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..rows {
                for j in c + 1..cols {
                    let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    debug_assert!((&num % &prev).is_zero());
                    m[i][j] = num / &prev;
                }
                m[i][c] = Int::zero();
            }
            prev = m[r][c].clone();
            pivots.push((r, c));
            r += 1;
        }

        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();

        // One basis vector per free column, by integer back-substitution:
        // before filling a pivot coordinate the whole vector is rescaled by
        // that pivot, which keeps every entry an integer.
        let mut basis = Vec::with_capacity(free_cols.len());
        for &f in &free_cols {
            let mut x = vec![Int::zero(); cols];
            x[f] = Int::one();
            for &(pr, pc) in pivots.iter().rev() {
                let mut s = Int::zero();
                for j in pc + 1..cols {
                    if !m[pr][j].is_zero() && !x[j].is_zero() {
                        s += &m[pr][j] * &x[j];
                    }
                }
                let d = &m[pr][pc];
                for e in x.iter_mut() {
                    *e *= d;
                }
                x[pc] = -s;
            }
            // Content-1 normalization with a positive entry at column f.
            let mut g = Int::zero();
            for e in &x {
                g = g.gcd(e);
            }
            if x[f].is_negative() {
                g = -g;
            }
            let v: Vec<Rat> = x.into_iter().map(|e| Rat::from_integer(e / &g)).collect();
            basis.push(v);
        }
        basis
    }

    /// Solves `m x = rhs` exactly, returning a particular solution together
    /// with a kernel basis, or [`LinearSolution::Inconsistent`].
    pub fn solve_linear(&self, rhs: &[Rat]) -> LinearSolution {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = rhs[i].clone();
        }
        let red = aug.rref();
        if red.pivots.last() == Some(&self.cols) {
            return LinearSolution::Inconsistent;
        }
        let mut particular = vec![Rat::zero(); self.cols];
        for (r, &c) in red.pivots.iter().enumerate() {
            particular[c] = red.mat[(r, self.cols)].clone();
        }
        LinearSolution::Solution {
            particular,
            kernel: self.null_space(),
        }
    }

    /// Characteristic polynomial det(xI − m), monic of degree n, by the
    /// Faddeev–LeVerrier recurrence.
    pub fn char_poly(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        // coeffs[n] = 1, filled downward: p(x) = x^n + c_1 x^(n-1) + ... + c_n
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut b = Matrix::<Rat>::identity(n);
        for k in 1..=n {
            b = self.mul(&b);
            let mut tr = Rat::zero();
            for i in 0..n {
                tr = &tr + &b[(i, i)];
            }
            let c = -(&tr / &Rat::from_integer(k.into()));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                b[(i, i)] = &b[(i, i)] + &c;
            }
        }
        Ok(UniPoly::new(coeffs))
    }
}
