//! Generating-vector representations of Toeplitz, f-circulant and Hankel
//! matrices.
//!
//! Indexing is 0-based. A Toeplitz matrix of order `n` stores
//! `(t_{1-n}, …, t_{n-1})` with the main diagonal `t_0` at index `n - 1`, so
//! entry `(i, j)` is `diagonals[n - 1 + i - j]`.

use crate::dense::{exchange_matrix, DenseMatrix, MAX_DENSE_ORDER};
use crate::error::{Error, Result};
use crate::scalar::Real;

fn check_finite<T: Real>(what: &'static str, v: &[T]) -> Result<()> {
    if v.is_empty() {
        return Err(Error::Empty(what));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite(what));
    }
    Ok(())
}

fn check_dense_order(n: usize) -> Result<()> {
    if n > MAX_DENSE_ORDER {
        Err(Error::TooLarge {
            order: n,
            max: MAX_DENSE_ORDER,
        })
    } else {
        Ok(())
    }
}

/// An `n×n` Toeplitz matrix `T = (t_{i-j})`.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzSpec<T> {
    diagonals: Vec<T>,
    order: usize,
}

impl<T: Real> ToeplitzSpec<T> {
    /// Takes `(t_{1-n}, …, t_{n-1})`; the length must be odd.
    pub fn new(diagonals: Vec<T>) -> Result<Self> {
        check_finite("Toeplitz diagonals", &diagonals)?;
        if diagonals.len() % 2 == 0 {
            return Err(Error::InvalidLength {
                what: "Toeplitz diagonals",
                expected: diagonals.len() + 1,
                actual: diagonals.len(),
            });
        }
        let order = diagonals.len().div_ceil(2);
        Ok(Self { diagonals, order })
    }

    /// Builds from the first column `(t_0, …, t_{n-1})` and first row
    /// `(t_0, t_{-1}, …, t_{1-n})`. The first row's leading entry is ignored.
    pub fn from_column_row(column: &[T], row: &[T]) -> Result<Self> {
        if column.len() != row.len() {
            return Err(Error::InvalidLength {
                what: "Toeplitz first row",
                expected: column.len(),
                actual: row.len(),
            });
        }
        let mut diagonals: Vec<T> = row.iter().skip(1).rev().copied().collect();
        diagonals.extend_from_slice(column);
        Self::new(diagonals)
    }

    /// The identity of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut d = vec![T::zero(); 2 * n - 1];
        d[n - 1] = T::one();
        Self {
            diagonals: d,
            order: n,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn diagonals(&self) -> &[T] {
        &self.diagonals
    }

    /// `t_k` for `1 - n <= k <= n - 1`.
    #[inline]
    pub fn t(&self, k: isize) -> T {
        self.diagonals[(self.order as isize - 1 + k) as usize]
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> T {
        self.diagonals[self.order - 1 + i - j]
    }

    /// `(t_0, …, t_{n-1})`.
    pub fn first_column(&self) -> &[T] {
        &self.diagonals[self.order - 1..]
    }

    /// `(t_0, t_{-1}, …, t_{1-n})`.
    pub fn first_row(&self) -> Vec<T> {
        self.diagonals[..self.order].iter().rev().copied().collect()
    }

    pub fn transpose(&self) -> Self {
        Self {
            diagonals: self.diagonals.iter().rev().copied().collect(),
            order: self.order,
        }
    }

    /// The leading principal `k×k` block, itself Toeplitz.
    pub fn leading(&self, k: usize) -> Self {
        assert!(k >= 1 && k <= self.order);
        let c = self.order - 1;
        Self {
            diagonals: self.diagonals[c + 1 - k..c + k].to_vec(),
            order: k,
        }
    }

    pub fn to_dense(&self) -> Result<DenseMatrix<T>> {
        check_dense_order(self.order)?;
        Ok(DenseMatrix::from_fn(self.order, self.order, |i, j| self.entry(i, j)))
    }
}

/// An f-circulant `Z_f(t)`: first column `t`, wrap-around entries scaled by `f`.
/// `f = 1` is a circulant and `f = 0` the lower-triangular Toeplitz `Z(t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FCirculantSpec<T> {
    first_column: Vec<T>,
    factor: T,
}

impl<T: Real> FCirculantSpec<T> {
    pub fn new(first_column: Vec<T>, factor: T) -> Result<Self> {
        check_finite("f-circulant column", &first_column)?;
        if !factor.is_finite() {
            return Err(Error::NonFinite("f-circulant factor"));
        }
        Ok(Self {
            first_column,
            factor,
        })
    }

    pub fn circulant(first_column: Vec<T>) -> Result<Self> {
        Self::new(first_column, T::one())
    }

    pub fn lower_triangular(first_column: Vec<T>) -> Result<Self> {
        Self::new(first_column, T::zero())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.first_column.len()
    }

    pub fn first_column(&self) -> &[T] {
        &self.first_column
    }

    #[inline]
    pub fn factor(&self) -> T {
        self.factor
    }

    pub fn with_factor(&self, factor: T) -> Self {
        Self {
            first_column: self.first_column.clone(),
            factor,
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        let n = self.order();
        if i >= j {
            self.first_column[i - j]
        } else {
            self.factor * self.first_column[n + i - j]
        }
    }

    /// The same matrix as a general Toeplitz spec: `t_{-k} = f·t_{n-k}`.
    pub fn to_toeplitz(&self) -> ToeplitzSpec<T> {
        let n = self.order();
        let mut d: Vec<T> = (1..n)
            .rev()
            .map(|k| self.factor * self.first_column[n - k])
            .collect();
        d.extend_from_slice(&self.first_column);
        ToeplitzSpec {
            diagonals: d,
            order: n,
        }
    }

    pub fn to_dense(&self) -> Result<DenseMatrix<T>> {
        let n = self.order();
        check_dense_order(n)?;
        Ok(DenseMatrix::from_fn(n, n, |i, j| self.entry(i, j)))
    }
}

/// An `n×n` Hankel matrix `H = (h_{i+j})`, stored as `(h_0, …, h_{2n-2})`.
#[derive(Debug, Clone, PartialEq)]
pub struct HankelSpec<T> {
    antidiagonals: Vec<T>,
    order: usize,
}

impl<T: Real> HankelSpec<T> {
    pub fn new(antidiagonals: Vec<T>) -> Result<Self> {
        check_finite("Hankel antidiagonals", &antidiagonals)?;
        if antidiagonals.len() % 2 == 0 {
            return Err(Error::InvalidLength {
                what: "Hankel antidiagonals",
                expected: antidiagonals.len() + 1,
                actual: antidiagonals.len(),
            });
        }
        let order = antidiagonals.len().div_ceil(2);
        Ok(Self {
            antidiagonals,
            order,
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn antidiagonals(&self) -> &[T] {
        &self.antidiagonals
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> T {
        self.antidiagonals[i + j]
    }

    pub fn to_dense(&self) -> Result<DenseMatrix<T>> {
        check_dense_order(self.order)?;
        Ok(DenseMatrix::from_fn(self.order, self.order, |i, j| self.entry(i, j)))
    }
}

/// The Toeplitz matrix `H·J` (Hankel with its columns reversed).
///
/// `(HJ)_{ij} = h_{i + n-1-j}`, which is `t_{i-j}` for the diagonal vector
/// equal to the antidiagonal vector; the storage carries over unchanged.
pub fn hankel_to_toeplitz<T: Real>(h: &HankelSpec<T>) -> ToeplitzSpec<T> {
    ToeplitzSpec {
        diagonals: h.antidiagonals.clone(),
        order: h.order,
    }
}

/// Inverse of [`hankel_to_toeplitz`]: the Hankel matrix `T·J`.
pub fn toeplitz_to_hankel<T: Real>(t: &ToeplitzSpec<T>) -> HankelSpec<T> {
    HankelSpec {
        antidiagonals: t.diagonals.clone(),
        order: t.order,
    }
}

/// `Jv`.
pub fn reflect<T: Copy>(v: &[T]) -> Vec<T> {
    v.iter().rev().copied().collect()
}

/// `Zv = (0, v_0, …, v_{n-2})`.
pub fn downshift<T: Real>(v: &[T]) -> Vec<T> {
    if v.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(v.len());
    out.push(T::zero());
    out.extend_from_slice(&v[..v.len() - 1]);
    out
}

/// Dense lower-triangular Toeplitz `Z(v)` with first column `v`.
pub fn lower_triangular_dense<T: Real>(v: &[T]) -> DenseMatrix<T> {
    let n = v.len();
    DenseMatrix::from_fn(n, n, |i, j| if i >= j { v[i - j] } else { T::zero() })
}

/// `‖J T J − Tᵀ‖_F`, zero for every Toeplitz matrix.
pub fn persymmetry_residual<T: Real>(t: &ToeplitzSpec<T>) -> Result<T> {
    let dense = t.to_dense()?;
    let j = exchange_matrix::<T>(t.order());
    let jtj = j.matmul(&dense).matmul(&j);
    let diff = jtj.sub(&dense.transpose());
    Ok(diff.as_slice().iter().map(|x| *x * *x).sum::<T>().sqrt())
}
