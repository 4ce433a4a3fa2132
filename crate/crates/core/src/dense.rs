//! Row-major dense matrices and LU with partial pivoting.
//!
//! Dense storage exists to check the structured kernels and to invert
//! unstructured samples in the experiments; it is not meant as a general
//! linear-algebra layer.

use std::ops::{Index, IndexMut};

use num_complex::Complex;
use num_traits::{Num, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest order a structured matrix may be expanded to densely.
pub const MAX_DENSE_ORDER: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Copy> DenseMatrix<S> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major data. Panics if `data.len() != rows * cols`.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data has wrong length");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<S>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn map<R: Copy>(&self, f: impl Fn(S) -> R) -> DenseMatrix<R> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    /// Submatrix of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)])
    }
}

impl<S: Copy + Num> DenseMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let src = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(src) {
                    *d = *d + a * b;
                }
            }
        }
        out
    }

    pub fn matvec(&self, x: &[S]) -> Vec<S> {
        assert_eq!(self.cols, x.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(S::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: S) -> Self {
        self.map(|x| x * s)
    }
}

impl<T: Real> DenseMatrix<T> {
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).abs())
            .fold(T::zero(), T::max)
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|x| x.abs()).fold(T::zero(), T::max)
    }

    pub fn to_complex(&self) -> DenseMatrix<Complex<T>> {
        self.map(|x| Complex::new(x, T::zero()))
    }

    pub fn lu(&self) -> Result<Lu<T>> {
        Lu::factor(self)
    }
}

impl<T: Real> DenseMatrix<Complex<T>> {
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }
}

impl<S> Index<(usize, usize)> for DenseMatrix<S> {
    type Output = S;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &S {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for DenseMatrix<S> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// `PA = LU` with unit lower `L`, stored packed.
#[derive(Debug, Clone)]
pub struct Lu<T> {
    n: usize,
    packed: Vec<T>,
    perm: Vec<usize>,
    min_pivot: T,
}

impl<T: Real> Lu<T> {
    /// Factors a square matrix. Never fails on singular input; inspect
    /// [`Lu::min_pivot`] or call [`Lu::check`] before solving.
    pub fn factor(a: &DenseMatrix<T>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows,
                cols: a.cols,
            });
        }
        let n = a.rows;
        let mut m = a.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut min_pivot = T::infinity();
        for k in 0..n {
            let mut p = k;
            let mut best = m[k * n + k].abs();
            for i in (k + 1)..n {
                let v = m[i * n + k].abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if p != k {
                for j in 0..n {
                    m.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            min_pivot = min_pivot.min(best);
            let pivot = m[k * n + k];
            if pivot.is_zero() {
                continue;
            }
            let (head, tail) = m.split_at_mut((k + 1) * n);
            let pivot_row = &head[k * n..(k + 1) * n];
            for row in tail.chunks_exact_mut(n) {
                let l = row[k] / pivot;
                row[k] = l;
                if l.is_zero() {
                    continue;
                }
                for (x, &u) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                    *x -= l * u;
                }
            }
        }
        if n == 0 {
            min_pivot = T::zero();
        }
        Ok(Self {
            n,
            packed: m,
            perm,
            min_pivot,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Smallest pivot magnitude encountered.
    pub fn min_pivot(&self) -> T {
        self.min_pivot
    }

    /// Fails with `SingularMatrix` when the smallest pivot is at or below
    /// `threshold`.
    pub fn check(self, threshold: T) -> Result<Self> {
        if self.min_pivot <= threshold || !self.min_pivot.is_finite() {
            Err(Error::SingularMatrix {
                pivot: self.min_pivot.to_f64_lossy(),
                threshold: threshold.to_f64_lossy(),
            })
        } else {
            Ok(self)
        }
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.n;
        assert_eq!(b.len(), n);
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let row = &self.packed[i * n..i * n + i];
            let s = row.iter().zip(&x[..i]).fold(T::zero(), |acc, (&l, &y)| acc + l * y);
            x[i] -= s;
        }
        for i in (0..n).rev() {
            let row = &self.packed[i * n + i + 1..(i + 1) * n];
            let s = row.iter().zip(&x[i + 1..]).fold(T::zero(), |acc, (&u, &y)| acc + u * y);
            x[i] = (x[i] - s) / self.packed[i * n + i];
        }
        x
    }

    /// Solves `Aᵀ y = b`.
    pub fn solve_transpose(&self, b: &[T]) -> Vec<T> {
        let n = self.n;
        assert_eq!(b.len(), n);
        // Uᵀ z = b, then Lᵀ w = z, then y = Pᵀ w.
        let mut z = b.to_vec();
        for i in 0..n {
            let zi = z[i] / self.packed[i * n + i];
            z[i] = zi;
            for j in (i + 1)..n {
                let u = self.packed[i * n + j];
                z[j] -= u * zi;
            }
        }
        for i in (0..n).rev() {
            let wi = z[i];
            for j in 0..i {
                let l = self.packed[i * n + j];
                z[j] -= l * wi;
            }
        }
        let mut y = vec![T::zero(); n];
        for (i, &p) in self.perm.iter().enumerate() {
            y[p] = z[i];
        }
        y
    }

    pub fn inverse(&self) -> DenseMatrix<T> {
        let n = self.n;
        let mut inv = DenseMatrix::zeros(n, n);
        let mut e = vec![T::zero(); n];
        for j in 0..n {
            e[j] = T::one();
            let col = self.solve(&e);
            e[j] = T::zero();
            for (i, v) in col.into_iter().enumerate() {
                inv[(i, j)] = v;
            }
        }
        inv
    }
}

/// Exchange matrix `J` (ones on the antidiagonal).
pub fn exchange_matrix<S: Copy + Num>(n: usize) -> DenseMatrix<S> {
    DenseMatrix::from_fn(n, n, |i, j| if i + j + 1 == n { S::one() } else { S::zero() })
}

/// Downshift matrix `Z` (ones on the first subdiagonal).
pub fn shift_matrix<S: Copy + Num>(n: usize) -> DenseMatrix<S> {
    DenseMatrix::from_fn(n, n, |i, j| if i == j + 1 { S::one() } else { S::zero() })
}

impl<S: Copy + Zero> DenseMatrix<S> {
    pub fn is_all_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}
