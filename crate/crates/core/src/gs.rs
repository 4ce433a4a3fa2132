//! Gohberg–Semencul representations of Toeplitz inverses.
//!
//! An inverse is stored as a short signed sum `Σ c_k Z(a_k) Z(b_k)ᵀ` of
//! products of lower-triangular Toeplitz matrices, built from corner columns
//! of the inverse of `T_n` (variant A) or of a bordered `T_{n+1}` (variants B
//! and C). Reconstruction is dense; application goes through FFT embeddings.

use crate::dense::{DenseMatrix, Lu};
use crate::error::{Error, Result};
use crate::norms::{toeplitz_norm, vector_norm, NormFamily};
use crate::scalar::Real;
use crate::spectral::ToeplitzOperator;
use crate::structured::{downshift, lower_triangular_dense, reflect, ToeplitzSpec};

/// `p = T⁻¹e₁` and `q = T⁻¹e_n` with their residuals `‖Tp − e₁‖₂`,
/// `‖Tq − e_n‖₂`.
#[derive(Debug, Clone, PartialEq)]
pub struct CornerSolve<T> {
    pub p: Vec<T>,
    pub q: Vec<T>,
    pub residual_p: T,
    pub residual_q: T,
}

fn factor_toeplitz<T: Real>(spec: &ToeplitzSpec<T>) -> Result<(Lu<T>, T)> {
    let dense = spec.to_dense()?;
    let norm1 = toeplitz_norm(spec, NormFamily::One)?;
    let threshold = T::SINGULAR_RTOL * norm1;
    let lu = Lu::factor(&dense)?;
    if lu.min_pivot() <= threshold || !lu.min_pivot().is_finite() {
        return Err(Error::SingularToeplitz {
            pivot: lu.min_pivot().to_f64_lossy(),
            threshold: threshold.to_f64_lossy(),
        });
    }
    Ok((lu, norm1))
}

fn residual<T: Real>(spec: &ToeplitzSpec<T>, x: &[T], unit: usize) -> T {
    let n = spec.order();
    let r: Vec<T> = (0..n)
        .map(|i| {
            let s: T = (0..n).map(|j| spec.entry(i, j) * x[j]).sum();
            if i == unit {
                s - T::one()
            } else {
                s
            }
        })
        .collect();
    vector_norm(&r, NormFamily::Two)
}

/// Solves for the first and last columns of `T⁻¹` by LU with partial
/// pivoting; `SingularToeplitz` if a pivot is at most `SINGULAR_RTOL·‖T‖₁`.
pub fn solve_corner_columns<T: Real>(spec: &ToeplitzSpec<T>) -> Result<CornerSolve<T>> {
    let (lu, _) = factor_toeplitz(spec)?;
    Ok(corners_from_lu(spec, &lu))
}

fn corners_from_lu<T: Real>(spec: &ToeplitzSpec<T>, lu: &Lu<T>) -> CornerSolve<T> {
    let n = spec.order();
    let mut e = vec![T::zero(); n];
    e[0] = T::one();
    let p = lu.solve(&e);
    e[0] = T::zero();
    e[n - 1] = T::one();
    let q = lu.solve(&e);
    CornerSolve {
        residual_p: residual(spec, &p, 0),
        residual_q: residual(spec, &q, n - 1),
        p,
        q,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GsVariant {
    /// `p₁T_n⁻¹ = Z(p)Z(Jq)ᵀ − Z(Zq)Z(ZJp)ᵀ`.
    A,
    /// `v₀T_n⁻¹ = Z(v)Z(Jw′)ᵀ − Z(w)Z(Jv′)ᵀ` from the bordered system.
    B,
    /// The inverse of the shifted block `T_{1,0}` from the bordered system.
    C,
}

#[derive(Debug, Clone, PartialEq)]
struct Term<T> {
    coef: T,
    left: Vec<T>,
    right: Vec<T>,
}

/// Corner columns plus the signed triangular-Toeplitz terms they define.
///
/// For variant A `first = p`, `last = q`, `pivot = p₁`. For B and C
/// `first = v̂ = T_{n+1}⁻¹e₁`, `last = ŵ = T_{n+1}⁻¹e_{n+1}` and the pivot is
/// `v₀` (B) or `v_n` (C). Variant C additionally divides by `v₀`.
#[derive(Debug, Clone, PartialEq)]
pub struct GohbergSemenculFactors<T> {
    variant: GsVariant,
    first: Vec<T>,
    last: Vec<T>,
    pivot: T,
    order: usize,
    terms: Vec<Term<T>>,
}

/// `PIVOT_RTOL · ‖T‖₁ · ‖x‖∞`.
pub fn pivot_tolerance<T: Real>(norm1: T, x: &[T]) -> T {
    T::PIVOT_RTOL * norm1 * vector_norm(x, NormFamily::Infinity)
}

fn check_pivot<T: Real>(pivot: T, tolerance: T) -> Result<()> {
    if pivot.abs() <= tolerance || !pivot.is_finite() {
        Err(Error::ZeroPivot {
            pivot: pivot.to_f64_lossy(),
            tolerance: tolerance.to_f64_lossy(),
        })
    } else {
        Ok(())
    }
}

fn term<T: Real>(coef: T, left: Vec<T>, right: Vec<T>) -> Term<T> {
    Term { coef, left, right }
}

/// `T_{1,0} = (t_{i−j})`, `i = 1..n`, `j = 0..n−1`: rows 1..n and columns
/// 0..n−1 of `T_{n+1}`.
pub fn shifted_block<T: Real>(bordered: &ToeplitzSpec<T>) -> Result<ToeplitzSpec<T>> {
    let d = bordered.diagonals();
    if bordered.order() < 2 {
        return Err(Error::InvalidLength {
            what: "bordered Toeplitz order",
            expected: 2,
            actual: bordered.order(),
        });
    }
    ToeplitzSpec::new(d[2..].to_vec())
}

impl<T: Real> GohbergSemenculFactors<T> {
    /// Variant A from already computed corner columns; `norm1 = ‖T‖₁`.
    pub fn from_corners(p: Vec<T>, q: Vec<T>, norm1: T) -> Result<Self> {
        let n = p.len();
        if n == 0 {
            return Err(Error::Empty("corner column"));
        }
        if q.len() != n {
            return Err(Error::InvalidLength {
                what: "last corner column",
                expected: n,
                actual: q.len(),
            });
        }
        let pivot = p[0];
        check_pivot(pivot, pivot_tolerance(norm1, &p))?;
        let c = pivot.recip();
        let terms = vec![
            term(c, p.clone(), reflect(&q)),
            term(-c, downshift(&q), downshift(&reflect(&p))),
        ];
        Ok(Self {
            variant: GsVariant::A,
            first: p,
            last: q,
            pivot,
            order: n,
            terms,
        })
    }

    /// Variant A for `T_n⁻¹`.
    pub fn variant_a(spec: &ToeplitzSpec<T>) -> Result<Self> {
        let (lu, norm1) = factor_toeplitz(spec)?;
        let corners = corners_from_lu(spec, &lu);
        Self::from_corners(corners.p, corners.q, norm1)
    }

    fn bordered(bordered: &ToeplitzSpec<T>) -> Result<(Vec<T>, Vec<T>, T)> {
        if bordered.order() < 2 {
            return Err(Error::InvalidLength {
                what: "bordered Toeplitz order",
                expected: 2,
                actual: bordered.order(),
            });
        }
        let (lu, norm1) = factor_toeplitz(bordered)?;
        let corners = corners_from_lu(bordered, &lu);
        Ok((corners.p, corners.q, norm1))
    }

    /// Variant B: `T_n⁻¹` for the leading `n×n` block of `T_{n+1}`.
    pub fn variant_b(bordered: &ToeplitzSpec<T>) -> Result<Self> {
        let (v_hat, w_hat, norm1) = Self::bordered(bordered)?;
        let n = bordered.order() - 1;
        let pivot = v_hat[0];
        check_pivot(pivot, pivot_tolerance(norm1, &v_hat))?;
        let c = pivot.recip();
        let (v, v1) = (v_hat[..n].to_vec(), v_hat[1..].to_vec());
        let (w, w1) = (w_hat[..n].to_vec(), w_hat[1..].to_vec());
        let terms = vec![term(c, v, reflect(&w1)), term(-c, w, reflect(&v1))];
        Ok(Self {
            variant: GsVariant::B,
            first: v_hat,
            last: w_hat,
            pivot,
            order: n,
            terms,
        })
    }

    /// Variant C: the inverse of `T_{1,0}`, see [`shifted_block`].
    ///
    /// `T_{1,0}⁻¹ = (1/v_n)[Z(Zv)Z(Jv′)ᵀ − Z(v)Z(Jv)ᵀ]
    ///            + (1/v₀)[Z(v)Z(Jw)ᵀ − Z(Zw)Z(Jv′)ᵀ]`,
    /// so both `v_n` and `v₀` must clear the pivot tolerance.
    pub fn variant_c(bordered: &ToeplitzSpec<T>) -> Result<Self> {
        let (v_hat, w_hat, norm1) = Self::bordered(bordered)?;
        let n = bordered.order() - 1;
        let tol = pivot_tolerance(norm1, &v_hat);
        let pivot = v_hat[n];
        check_pivot(pivot, tol)?;
        check_pivot(v_hat[0], tol)?;
        let (cn, c0) = (pivot.recip(), v_hat[0].recip());
        let (v, v1) = (v_hat[..n].to_vec(), v_hat[1..].to_vec());
        let w = w_hat[..n].to_vec();
        let terms = vec![
            term(cn, downshift(&v), reflect(&v1)),
            term(-cn, v.clone(), reflect(&v)),
            term(c0, v, reflect(&w)),
            term(-c0, downshift(&w), reflect(&v1)),
        ];
        Ok(Self {
            variant: GsVariant::C,
            first: v_hat,
            last: w_hat,
            pivot,
            order: n,
            terms,
        })
    }

    pub fn variant(&self) -> GsVariant {
        self.variant
    }

    pub fn first(&self) -> &[T] {
        &self.first
    }

    pub fn last(&self) -> &[T] {
        &self.last
    }

    pub fn pivot(&self) -> T {
        self.pivot
    }

    /// Order of the represented inverse.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Dense `Σ c_k Z(a_k) Z(b_k)ᵀ`.
    pub fn reconstruct(&self) -> DenseMatrix<T> {
        let n = self.order;
        let mut out = DenseMatrix::zeros(n, n);
        for t in &self.terms {
            let prod = lower_triangular_dense(&t.left).matmul(&lower_triangular_dense(&t.right).transpose());
            out = out.add(&prod.scale(t.coef));
        }
        out
    }

    /// FFT-backed operator applying the represented inverse.
    pub fn operator(&self) -> GsOperator<T> {
        GsOperator {
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| {
                    (
                        t.coef,
                        ToeplitzOperator::lower_triangular(&t.left),
                        ToeplitzOperator::lower_triangular(&t.right),
                    )
                })
                .collect(),
        }
    }

    /// Bounds on `‖T⁻¹‖_h`. For variant A these are
    /// `2‖p‖₁‖q‖₁/|p₁|` (h = 1, 2, ∞) and `2n‖p‖‖q‖/|p₁|`; for B and C the
    /// same estimate `Σ|c_k|·‖a_k‖₁‖b_k‖₁` is taken term by term.
    pub fn inverse_norm_bound(&self) -> InverseNormBound<T> {
        let n = T::from_usize_lossy(self.order);
        match self.variant {
            GsVariant::A => {
                let s = T::lit(2.0) / self.pivot.abs();
                InverseNormBound {
                    bound_h: s * vector_norm(&self.first, NormFamily::One) * vector_norm(&self.last, NormFamily::One),
                    bound_2n: s * n * vector_norm(&self.first, NormFamily::Two) * vector_norm(&self.last, NormFamily::Two),
                }
            }
            _ => {
                let mut b = InverseNormBound { bound_h: T::zero(), bound_2n: T::zero() };
                for t in &self.terms {
                    b.bound_h += t.coef.abs()
                        * vector_norm(&t.left, NormFamily::One)
                        * vector_norm(&t.right, NormFamily::One);
                    b.bound_2n += t.coef.abs()
                        * n
                        * vector_norm(&t.left, NormFamily::Two)
                        * vector_norm(&t.right, NormFamily::Two);
                }
                b
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseNormBound<T> {
    pub bound_h: T,
    pub bound_2n: T,
}

/// Cached FFT embeddings of the triangular factors.
#[derive(Debug, Clone)]
pub struct GsOperator<T> {
    order: usize,
    terms: Vec<(T, ToeplitzOperator<T>, ToeplitzOperator<T>)>,
}

impl<T: Real> GsOperator<T> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.order {
            return Err(Error::InvalidLength {
                what: "Gohberg-Semencul operand",
                expected: self.order,
                actual: x.len(),
            });
        }
        let mut out = vec![T::zero(); self.order];
        for (c, left, right) in &self.terms {
            let y = left.apply(&right.apply_transpose(x));
            for (o, v) in out.iter_mut().zip(y) {
                *o += *c * v;
            }
        }
        Ok(out)
    }
}

/// `T⁻¹x` from the factors in O(n log n).
pub fn gs_apply<T: Real>(factors: &GohbergSemenculFactors<T>, x: &[T]) -> Result<Vec<T>> {
    factors.operator().apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn two_by_two() -> ToeplitzSpec<f64> {
        // [[1,5],[3,1]]
        ToeplitzSpec::new(vec![5.0, 1.0, 3.0]).unwrap()
    }

    #[test]
    fn corners_identity() {
        let c = solve_corner_columns(&ToeplitzSpec::<f64>::identity(4)).unwrap();
        assert_eq!(c.p, vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(c.q, vec![0.0, 0.0, 0.0, 1.0]);
        assert_eq!(c.residual_p, 0.0);
    }

    #[test]
    fn corners_two_by_two() {
        let c = solve_corner_columns(&two_by_two()).unwrap();
        assert_relative_eq!(c.p[0], -1.0 / 14.0, epsilon = 1e-15);
        assert_relative_eq!(c.p[1], 3.0 / 14.0, epsilon = 1e-15);
        assert_relative_eq!(c.q[0], 5.0 / 14.0, epsilon = 1e-15);
        assert_relative_eq!(c.q[1], -1.0 / 14.0, epsilon = 1e-15);
    }

    #[test]
    fn singular_toeplitz_rejected() {
        let t = ToeplitzSpec::new(vec![1.0; 5]).unwrap();
        assert!(matches!(solve_corner_columns(&t), Err(Error::SingularToeplitz { .. })));
    }

    #[test]
    fn variant_a_identity_and_two_by_two() {
        let f = GohbergSemenculFactors::variant_a(&ToeplitzSpec::<f64>::identity(5)).unwrap();
        assert_eq!(f.reconstruct(), DenseMatrix::identity(5));
        let f = GohbergSemenculFactors::variant_a(&two_by_two()).unwrap();
        let expect = DenseMatrix::from_rows(&[vec![-1.0, 5.0], vec![3.0, -1.0]]).scale(1.0 / 14.0);
        assert!(f.reconstruct().max_abs_diff(&expect) < 1e-15);
        let y = gs_apply(&f, &[1.0, 0.0]).unwrap();
        assert_relative_eq!(y[0], -1.0 / 14.0, epsilon = 1e-15);
        assert_relative_eq!(y[1], 3.0 / 14.0, epsilon = 1e-15);
    }

    #[test]
    fn variant_a_zero_corner() {
        // T = [[0,1],[1,0]] is nonsingular but p = e₂ has p₁ = 0
        let t = ToeplitzSpec::new(vec![1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(GohbergSemenculFactors::variant_a(&t), Err(Error::ZeroPivot { .. })));
    }

    #[test]
    fn variant_b_identity() {
        let f = GohbergSemenculFactors::variant_b(&ToeplitzSpec::<f64>::identity(6)).unwrap();
        assert_eq!(f.order(), 5);
        assert!(f.reconstruct().max_abs_diff(&DenseMatrix::identity(5)) < 1e-15);
    }

    #[test]
    fn variant_b_zero_pivot() {
        // nonsingular T₃ whose leading 2×2 block [[1,1],[1,1]] is singular
        let t = ToeplitzSpec::new(vec![2.0, 1.0, 1.0, 1.0, 0.0]).unwrap();
        assert!(matches!(GohbergSemenculFactors::variant_b(&t), Err(Error::ZeroPivot { .. })));
    }

    #[test]
    fn variant_c_identity_block_has_zero_v0() {
        // T_{1,0} = I means t₁ = 1 and the other in-block diagonals vanish;
        // then T_n is the downshift and v₀ = 0.
        let mut d = vec![0.0; 9];
        d[5] = 1.0; // t₁
        d[0] = 1.0; // t₋₄ keeps T₅ nonsingular
        let t = ToeplitzSpec::new(d).unwrap();
        let block = shifted_block(&t).unwrap();
        assert_eq!(block.to_dense().unwrap(), DenseMatrix::identity(4));
        assert!(matches!(GohbergSemenculFactors::variant_c(&t), Err(Error::ZeroPivot { .. })));
    }

    #[test]
    fn variant_c_small_example() {
        let t = ToeplitzSpec::new(vec![0.5, -1.0, 2.0, 4.0, 1.0, 0.3, -0.7]).unwrap();
        let f = GohbergSemenculFactors::variant_c(&t).unwrap();
        let block = shifted_block(&t).unwrap().to_dense().unwrap();
        let product = block.matmul(&f.reconstruct());
        assert!(product.max_abs_diff(&DenseMatrix::identity(3)) < 1e-12);
    }

    #[test]
    fn inverse_bound_identity() {
        let f = GohbergSemenculFactors::variant_a(&ToeplitzSpec::<f64>::identity(3)).unwrap();
        let b = f.inverse_norm_bound();
        assert_eq!(b.bound_h, 2.0);
        assert_eq!(b.bound_2n, 6.0);
    }

    #[test]
    fn apply_length_mismatch() {
        let f = GohbergSemenculFactors::variant_a(&two_by_two()).unwrap();
        assert!(gs_apply(&f, &[1.0]).is_err());
    }
}
