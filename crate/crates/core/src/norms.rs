//! Vector and matrix norms, spectral-norm estimation by power iteration and
//! checkers for the norm inequalities satisfied by structured matrices.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dense::{DenseMatrix, Lu};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::spectral::{circulant_eigenvalues, FourierPlan, ToeplitzOperator};
use crate::structured::{FCirculantSpec, ToeplitzSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormFamily {
    One,
    Two,
    Infinity,
    Frobenius,
}

impl NormFamily {
    pub const ALL: [NormFamily; 4] = [Self::One, Self::Two, Self::Infinity, Self::Frobenius];

    pub fn label(self) -> &'static str {
        match self {
            Self::One => "1",
            Self::Two => "2",
            Self::Infinity => "inf",
            Self::Frobenius => "fro",
        }
    }
}

impl fmt::Display for NormFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseNormError(String);

impl fmt::Display for ParseNormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown norm {:?} (expected 1, 2, inf or fro)", self.0)
    }
}

impl std::error::Error for ParseNormError {}

impl FromStr for NormFamily {
    type Err = ParseNormError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "1" | "one" => Ok(Self::One),
            "2" | "two" | "spectral" => Ok(Self::Two),
            "inf" | "infinity" => Ok(Self::Infinity),
            "f" | "fro" | "frobenius" => Ok(Self::Frobenius),
            _ => Err(ParseNormError(s.to_owned())),
        }
    }
}

/// Frobenius of a vector is its 2-norm.
pub fn vector_norm<T: Real>(v: &[T], family: NormFamily) -> T {
    match family {
        NormFamily::One => v.iter().map(|x| x.abs()).sum(),
        NormFamily::Two | NormFamily::Frobenius => euclidean(v),
        NormFamily::Infinity => v.iter().fold(T::zero(), |m, x| m.max(x.abs())),
    }
}

/// Overflow-safe 2-norm.
fn euclidean<T: Real>(v: &[T]) -> T {
    let scale = v.iter().fold(T::zero(), |m, x| m.max(x.abs()));
    if scale.is_zero() || !scale.is_finite() {
        return scale;
    }
    let s: T = v.iter().map(|&x| (x / scale) * (x / scale)).sum();
    scale * s.sqrt()
}

fn complex_euclidean<T: Real>(v: &[Complex<T>]) -> T {
    let scale = v.iter().fold(T::zero(), |m, x| m.max(x.re.abs()).max(x.im.abs()));
    if scale.is_zero() {
        return scale;
    }
    let s: T = v.iter().map(|x| (x / scale).norm_sqr()).sum();
    scale * s.sqrt()
}

/// A linear map that can be applied together with its transpose.
pub trait LinearOperator<T> {
    /// `(rows, cols)`.
    fn dims(&self) -> (usize, usize);
    fn apply(&self, x: &[T]) -> Vec<T>;
    fn apply_transpose(&self, y: &[T]) -> Vec<T>;
}

impl<T: Real> LinearOperator<T> for DenseMatrix<T> {
    fn dims(&self) -> (usize, usize) {
        (self.rows(), self.cols())
    }

    fn apply(&self, x: &[T]) -> Vec<T> {
        self.matvec(x)
    }

    fn apply_transpose(&self, y: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.cols()];
        for (i, &yi) in y.iter().enumerate() {
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o += a * yi;
            }
        }
        out
    }
}

impl<T: Real> LinearOperator<T> for ToeplitzOperator<T> {
    fn dims(&self) -> (usize, usize) {
        (self.order(), self.order())
    }

    fn apply(&self, x: &[T]) -> Vec<T> {
        ToeplitzOperator::apply(self, x)
    }

    fn apply_transpose(&self, y: &[T]) -> Vec<T> {
        ToeplitzOperator::apply_transpose(self, y)
    }
}

/// `A⁻¹` as an operator, from an LU factorization of `A`.
#[derive(Debug, Clone, Copy)]
pub struct Inverse<'a, T>(pub &'a Lu<T>);

impl<T: Real> LinearOperator<T> for Inverse<'_, T> {
    fn dims(&self) -> (usize, usize) {
        (self.0.order(), self.0.order())
    }

    fn apply(&self, x: &[T]) -> Vec<T> {
        self.0.solve(x)
    }

    fn apply_transpose(&self, y: &[T]) -> Vec<T> {
        self.0.solve_transpose(y)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PowerOptions<T> {
    /// Relative change of the Gram eigenvalue estimate that ends a run.
    pub tolerance: T,
    /// Iteration cap per run; `None` means `max(10·n, 100)`.
    pub max_iterations: Option<usize>,
    /// Seed of the random second start.
    pub restart_seed: u64,
}

impl<T: Real> Default for PowerOptions<T> {
    fn default() -> Self {
        Self {
            tolerance: T::POWER_TOL,
            max_iterations: None,
            restart_seed: 0x5eed_0f_90e7,
        }
    }
}

/// Result of a spectral-norm estimate. `value` is always a lower bound of
/// the true norm; when `converged` is false `[lower, upper]` brackets it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralEstimate<T> {
    pub value: T,
    pub lower: T,
    pub upper: T,
    pub iterations: usize,
    pub converged: bool,
}

impl<T: Real> SpectralEstimate<T> {
    pub fn into_result(self) -> Result<T> {
        if self.converged {
            Ok(self.value)
        } else {
            Err(Error::PowerIterationStall {
                lower: self.lower.to_f64_lossy(),
                upper: self.upper.to_f64_lossy(),
                iterations: self.iterations,
            })
        }
    }
}

struct Run<T> {
    lambda: T,
    iterations: usize,
    converged: bool,
}

fn power_run<T: Real, O: LinearOperator<T> + ?Sized>(
    op: &O,
    mut x: Vec<T>,
    tol: T,
    max_iter: usize,
) -> Run<T> {
    let nx = euclidean(&x);
    if nx.is_zero() {
        return Run { lambda: T::zero(), iterations: 0, converged: false };
    }
    for v in x.iter_mut() {
        *v /= nx;
    }
    let mut prev = T::zero();
    for k in 1..=max_iter {
        let z = op.apply_transpose(&op.apply(&x));
        let lambda = euclidean(&z);
        if lambda.is_zero() || !lambda.is_finite() {
            return Run { lambda: T::zero(), iterations: k, converged: false };
        }
        if (lambda - prev).abs() <= tol * lambda {
            return Run { lambda, iterations: k, converged: true };
        }
        prev = lambda;
        x = z.into_iter().map(|v| v / lambda).collect();
    }
    Run { lambda: prev, iterations: max_iter, converged: false }
}

/// Estimates `‖A‖₂` by power iteration on `AᵀA`.
///
/// Runs from the normalized all-ones vector and again from one seeded random
/// start, keeping the larger estimate. The all-ones vector is an eigenvector
/// of every circulant and of any matrix with constant line sums, where it
/// converges at once to the wrong singular value. `upper` is a known upper
/// bound (typically `√(‖A‖₁‖A‖∞)`), used for the bracket on stall.
pub fn spectral_norm_estimate<T: Real, O: LinearOperator<T> + ?Sized>(
    op: &O,
    upper: T,
    opts: &PowerOptions<T>,
) -> SpectralEstimate<T> {
    let (_, cols) = op.dims();
    if cols == 0 {
        return SpectralEstimate {
            value: T::zero(),
            lower: T::zero(),
            upper: T::zero(),
            iterations: 0,
            converged: true,
        };
    }
    let max_iter = opts.max_iterations.unwrap_or((10 * cols).max(100));
    let first = power_run(op, vec![T::one(); cols], opts.tolerance, max_iter);
    let mut iterations = first.iterations;
    let mut lambda = first.lambda;
    let mut converged = first.converged;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.restart_seed);
    let start: Vec<T> = (0..cols)
        .map(|_| T::lit(rng.gen_range(-1.0..1.0)))
        .collect();
    let second = power_run(op, start, opts.tolerance, max_iter);
    iterations += second.iterations;
    if second.lambda > lambda || (second.lambda == lambda && second.converged) {
        lambda = second.lambda;
        converged = second.converged;
    }
    if lambda.is_zero() && second.iterations > 0 {
        // both starts annihilated: the operator is zero
        converged = true;
    }
    let value = lambda.sqrt();
    SpectralEstimate {
        value,
        lower: value,
        upper: if converged { value } else { upper.max(value) },
        iterations,
        converged,
    }
}

fn max_column_sum<T: Real>(a: &DenseMatrix<T>) -> T {
    let mut sums = vec![T::zero(); a.cols()];
    for i in 0..a.rows() {
        for (s, x) in sums.iter_mut().zip(a.row(i)) {
            *s += x.abs();
        }
    }
    sums.into_iter().fold(T::zero(), T::max)
}

fn max_row_sum<T: Real>(a: &DenseMatrix<T>) -> T {
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| x.abs()).sum::<T>())
        .fold(T::zero(), T::max)
}

/// `‖A‖₂` estimate with the `√(‖A‖₁‖A‖∞)` fallback bracket.
pub fn dense_spectral_estimate<T: Real>(a: &DenseMatrix<T>) -> SpectralEstimate<T> {
    let upper = (max_column_sum(a) * max_row_sum(a)).sqrt();
    spectral_norm_estimate(a, upper, &PowerOptions::default())
}

/// Fails with `PowerIterationStall` only for the 2-norm.
pub fn matrix_norm<T: Real>(a: &DenseMatrix<T>, family: NormFamily) -> Result<T> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::Empty("matrix"));
    }
    Ok(match family {
        NormFamily::One => max_column_sum(a),
        NormFamily::Infinity => max_row_sum(a),
        NormFamily::Frobenius => euclidean(a.as_slice()),
        NormFamily::Two => dense_spectral_estimate(a).into_result()?,
    })
}

/// Norms of a Toeplitz matrix from its diagonals: 1, ∞ and Frobenius in
/// O(n), the 2-norm by power iteration with FFT matvecs.
pub fn toeplitz_norm<T: Real>(spec: &ToeplitzSpec<T>, family: NormFamily) -> Result<T> {
    let n = spec.order();
    let d = spec.diagonals();
    match family {
        NormFamily::One | NormFamily::Infinity => {
            // prefix[k] = Σ_{m<k} |d_m|; d index of t_k is k + n - 1
            let mut prefix = vec![T::zero(); d.len() + 1];
            for (k, x) in d.iter().enumerate() {
                prefix[k + 1] = prefix[k] + x.abs();
            }
            let window = |lo: usize| prefix[lo + n] - prefix[lo];
            // column j holds t_{-j..n-1-j}, row i holds t_{i-n+1..i}
            let best = (0..n).map(window).fold(T::zero(), T::max);
            Ok(best)
        }
        NormFamily::Frobenius => {
            let weighted: Vec<T> = d
                .iter()
                .enumerate()
                .map(|(k, &x)| {
                    let w = n - (k as isize - (n as isize - 1)).unsigned_abs();
                    x * T::from_usize_lossy(w).sqrt()
                })
                .collect();
            Ok(euclidean(&weighted))
        }
        NormFamily::Two => toeplitz_spectral_estimate(spec).into_result(),
    }
}

pub fn toeplitz_spectral_estimate<T: Real>(spec: &ToeplitzSpec<T>) -> SpectralEstimate<T> {
    let op = ToeplitzOperator::new(spec);
    let upper = (toeplitz_norm(spec, NormFamily::One).unwrap_or(T::infinity())
        * toeplitz_norm(spec, NormFamily::Infinity).unwrap_or(T::infinity()))
    .sqrt();
    spectral_norm_estimate(&op, upper, &PowerOptions::default())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Relation<T> {
    AtMost,
    Equal { rtol: T },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck<T> {
    pub label: String,
    pub left: T,
    pub right: T,
    pub relation: Relation<T>,
    pub satisfied: bool,
    /// Observations are reported but do not count toward `all_satisfied`.
    pub gating: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormBoundReport<T> {
    checks: Vec<BoundCheck<T>>,
}

impl<T: Real> Default for NormBoundReport<T> {
    fn default() -> Self {
        Self { checks: Vec::new() }
    }
}

impl<T: Real> NormBoundReport<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// `left ≤ right + BOUND_SLACK·max(1, right)`.
    pub fn holds_at_most(left: T, right: T) -> bool {
        left <= right + T::BOUND_SLACK * right.max(T::one())
    }

    fn push(&mut self, label: impl Into<String>, left: T, right: T, relation: Relation<T>, gating: bool) {
        let satisfied = match relation {
            Relation::AtMost => Self::holds_at_most(left, right),
            Relation::Equal { rtol } => (left - right).abs() <= rtol * right.abs().max(left.abs()),
        };
        self.checks.push(BoundCheck {
            label: label.into(),
            left,
            right,
            relation,
            satisfied,
            gating,
        });
    }

    pub fn at_most(&mut self, label: impl Into<String>, left: T, right: T) {
        self.push(label, left, right, Relation::AtMost, true);
    }

    pub fn equal(&mut self, label: impl Into<String>, left: T, right: T, rtol: T) {
        self.push(label, left, right, Relation::Equal { rtol }, true);
    }

    pub fn observe_at_most(&mut self, label: impl Into<String>, left: T, right: T) {
        self.push(label, left, right, Relation::AtMost, false);
    }

    pub fn observe_equal(&mut self, label: impl Into<String>, left: T, right: T, rtol: T) {
        self.push(label, left, right, Relation::Equal { rtol }, false);
    }

    pub fn checks(&self) -> &[BoundCheck<T>] {
        &self.checks
    }

    pub fn get(&self, label: &str) -> Option<&BoundCheck<T>> {
        self.checks.iter().find(|c| c.label == label)
    }

    pub fn all_satisfied(&self) -> bool {
        self.checks.iter().filter(|c| c.gating).all(|c| c.satisfied)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundCheck<T>> {
        self.checks.iter().filter(|c| c.gating && !c.satisfied)
    }

    pub fn extend(&mut self, other: NormBoundReport<T>) {
        self.checks.extend(other.checks);
    }
}

/// Checks `‖A‖² ≤ ‖A‖₁‖A‖∞`, `‖A‖_h/√n ≤ ‖A‖ ≤ √n‖A‖_h` (h = 1, ∞),
/// `‖A‖ ≤ ‖A‖_F ≤ √ρ‖A‖` and, given a partner `B`, submultiplicativity
/// `‖AB‖_h ≤ ‖A‖_h‖B‖_h` for every family.
///
/// `rank` defaults to `min(rows, cols)`.
pub fn check_norm_relations<T: Real>(
    a: &DenseMatrix<T>,
    rank: Option<usize>,
    partner: Option<&DenseMatrix<T>>,
) -> Result<NormBoundReport<T>> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::Empty("matrix"));
    }
    let n1 = matrix_norm(a, NormFamily::One)?;
    let ninf = matrix_norm(a, NormFamily::Infinity)?;
    let nf = matrix_norm(a, NormFamily::Frobenius)?;
    let n2 = dense_spectral_estimate(a).value;
    let dim = T::from_usize_lossy(a.rows().max(a.cols())).sqrt();
    let rho = T::from_usize_lossy(rank.unwrap_or(a.rows().min(a.cols()))).sqrt();

    let mut r = NormBoundReport::new();
    r.at_most("‖A‖₂² ≤ ‖A‖₁‖A‖∞", n2 * n2, n1 * ninf);
    r.at_most("‖A‖₁/√n ≤ ‖A‖₂", n1 / dim, n2);
    r.at_most("‖A‖₂ ≤ √n‖A‖₁", n2, dim * n1);
    r.at_most("‖A‖∞/√n ≤ ‖A‖₂", ninf / dim, n2);
    r.at_most("‖A‖₂ ≤ √n‖A‖∞", n2, dim * ninf);
    r.at_most("‖A‖₂ ≤ ‖A‖_F", n2, nf);
    r.at_most("‖A‖_F ≤ √ρ‖A‖₂", nf, rho * n2);

    if let Some(b) = partner {
        if b.rows() != a.cols() {
            return Err(Error::InvalidLength {
                what: "partner rows",
                expected: a.cols(),
                actual: b.rows(),
            });
        }
        let ab = a.matmul(b);
        for family in NormFamily::ALL {
            let (lhs, fa, fb) = if family == NormFamily::Two {
                (dense_spectral_estimate(&ab).value, n2, dense_spectral_estimate(b).value)
            } else {
                (matrix_norm(&ab, family)?, matrix_norm(a, family)?, matrix_norm(b, family)?)
            };
            r.at_most(format!("‖AB‖_{family} ≤ ‖A‖_{family}‖B‖_{family}"), lhs, fa * fb);
        }
    }
    Ok(r)
}

fn require_circulant<T: Real>(spec: &FCirculantSpec<T>) -> Result<()> {
    if spec.factor() != T::one() {
        Err(Error::FactorMismatch {
            expected: 1.0,
            actual: spec.factor().to_f64_lossy(),
        })
    } else {
        Ok(())
    }
}

/// `‖Z₁(t)‖_F` through the spectrum, `‖Ωt‖₂`; no dense expansion.
pub fn circulant_frobenius_norm<T: Real>(spec: &FCirculantSpec<T>) -> Result<T> {
    require_circulant(spec)?;
    Ok(complex_euclidean(circulant_eigenvalues(spec)?.eigenvalues()))
}

/// Exact norms of a circulant (`f = 1`): the 2-norm is `max|u_i|`, the
/// Frobenius norm `‖u‖₂`.
pub fn circulant_norm<T: Real>(spec: &FCirculantSpec<T>, family: NormFamily) -> Result<T> {
    require_circulant(spec)?;
    match family {
        NormFamily::Two => Ok(circulant_eigenvalues(spec)?.max_modulus()),
        NormFamily::Frobenius => circulant_frobenius_norm(spec),
        _ => toeplitz_norm(&spec.to_toeplitz(), family),
    }
}

/// For a circulant `Z₁(t)`: `‖Z₁‖ ≤ ‖Z₁‖₁ = ‖Z₁‖∞ = ‖t‖₁`,
/// `‖Z₁‖_F = √n‖t‖` and `‖Z(t)‖_h ≤ ‖Z₁(t)‖_h` against the lower-triangular
/// Toeplitz matrix with the same first column.
pub fn circulant_norm_bounds<T: Real>(spec: &FCirculantSpec<T>) -> Result<NormBoundReport<T>> {
    require_circulant(spec)?;
    let t = spec.first_column();
    let sqrt_n = T::from_usize_lossy(spec.order()).sqrt();
    let as_toeplitz = spec.to_toeplitz();
    let c1 = toeplitz_norm(&as_toeplitz, NormFamily::One)?;
    let cinf = toeplitz_norm(&as_toeplitz, NormFamily::Infinity)?;
    let c2 = circulant_norm(spec, NormFamily::Two)?;
    let cf = circulant_frobenius_norm(spec)?;
    let t1 = vector_norm(t, NormFamily::One);
    let t2 = vector_norm(t, NormFamily::Two);

    let mut r = NormBoundReport::new();
    r.at_most("‖Z₁‖₂ ≤ ‖Z₁‖₁", c2, c1);
    r.equal("‖Z₁‖₁ = ‖Z₁‖∞", c1, cinf, T::BOUND_SLACK);
    r.equal("‖Z₁‖∞ = ‖t‖₁", cinf, t1, T::BOUND_SLACK);
    r.equal("‖Z₁‖_F = √n‖t‖", cf, sqrt_n * t2, T::BOUND_SLACK);

    let tri = spec.with_factor(T::zero()).to_toeplitz();
    for family in [NormFamily::One, NormFamily::Infinity, NormFamily::Frobenius] {
        let lhs = toeplitz_norm(&tri, family)?;
        let rhs = match family {
            NormFamily::One => c1,
            NormFamily::Infinity => cinf,
            _ => cf,
        };
        r.at_most(format!("‖Z‖_{family} ≤ ‖Z₁‖_{family}"), lhs, rhs);
    }
    // the estimate is a lower bound of ‖Z‖₂, so this check cannot fail spuriously
    r.at_most("‖Z‖_2 ≤ ‖Z₁‖_2", toeplitz_spectral_estimate(&tri).value, c2);
    Ok(r)
}

/// `‖T‖ ≤ ‖T‖₁, ‖T‖∞ ≤ ‖t₊‖₁ ≤ √(2n−1)‖t₊‖` and `‖T‖_F ≤ √(2n−1)‖t₊‖`.
///
/// `‖T‖₁ = ‖T‖∞` is recorded as a non-gating observation.
pub fn toeplitz_norm_bounds<T: Real>(spec: &ToeplitzSpec<T>) -> Result<NormBoundReport<T>> {
    let d = spec.diagonals();
    let n1 = toeplitz_norm(spec, NormFamily::One)?;
    let ninf = toeplitz_norm(spec, NormFamily::Infinity)?;
    let nf = toeplitz_norm(spec, NormFamily::Frobenius)?;
    let n2 = toeplitz_spectral_estimate(spec).value;
    let d1 = vector_norm(d, NormFamily::One);
    let d2 = vector_norm(d, NormFamily::Two);
    let root = T::from_usize_lossy(d.len()).sqrt();

    let mut r = NormBoundReport::new();
    r.at_most("‖T‖₂ ≤ ‖T‖₁", n2, n1);
    r.at_most("‖T‖₂ ≤ ‖T‖∞", n2, ninf);
    r.at_most("‖T‖₁ ≤ ‖t₊‖₁", n1, d1);
    r.at_most("‖T‖∞ ≤ ‖t₊‖₁", ninf, d1);
    r.at_most("‖t₊‖₁ ≤ √(2n−1)‖t₊‖", d1, root * d2);
    r.at_most("‖T‖_F ≤ √(2n−1)‖t₊‖", nf, root * d2);
    r.observe_equal("‖T‖₁ = ‖T‖∞", n1, ninf, T::BOUND_SLACK);
    Ok(r)
}

/// `(‖Z₁(t)⁻¹‖_F, ‖Z₁(t)⁻¹‖₂) = (‖(Ωt)⁻¹‖₂, 1/min|u_i|)`.
pub fn circulant_inverse_norms<T: Real>(spec: &FCirculantSpec<T>) -> Result<(T, T)> {
    require_circulant(spec)?;
    let eig = circulant_eigenvalues(spec)?;
    eig.check_nonsingular()?;
    let recip: Vec<Complex<T>> = eig.eigenvalues().iter().map(|u| u.inv()).collect();
    Ok((complex_euclidean(&recip), eig.min_modulus().recip()))
}

fn dense_inverse_spectral<T: Real>(a: &DenseMatrix<T>) -> Option<T> {
    let threshold = T::PIVOT_RTOL * max_column_sum(a);
    let lu = Lu::factor(a).ok()?.check(threshold).ok()?;
    Some(dense_spectral_estimate(&lu.inverse()).value)
}

/// Compares `‖Z_f(v)‖` and `‖Z_f(v)⁻¹‖` with the circulant `Z₁(v)` through
/// `g(f) = max(|f|, 1/|f|)`:
/// `‖Z₁(v)‖/g ≤ ‖Z_f(v)‖ ≤ g‖Z₁(v)‖`, and the same for inverses when both
/// are nonsingular. These comparisons are gating.
///
/// The diagonally scaled comparison `‖Z₁(D_h v)‖/g ≤ ‖Z_f(v)‖ ≤ g‖Z₁(D_h v)‖`
/// with `hⁿ = f` is added as observations; `‖Z₁(D_h v)‖` and its inverse
/// norm are exact through the DFT of `D_h v`.
pub fn f_circulant_scaling_check<T: Real>(spec: &FCirculantSpec<T>) -> Result<NormBoundReport<T>> {
    let f = spec.factor();
    if f.is_zero() {
        return Err(Error::ZeroFactor);
    }
    let n = spec.order();
    let g = f.abs().max(f.abs().recip());
    let zf = spec.to_dense()?;
    let z1 = spec.with_factor(T::one()).to_dense()?;
    let nf = dense_spectral_estimate(&zf).value;
    let n1 = dense_spectral_estimate(&z1).value;

    let mut r = NormBoundReport::new();
    r.at_most("‖Z₁(v)‖/g ≤ ‖Z_f(v)‖", n1 / g, nf);
    r.at_most("‖Z_f(v)‖ ≤ g‖Z₁(v)‖", nf, g * n1);
    let (inv_f, inv_1) = (dense_inverse_spectral(&zf), dense_inverse_spectral(&z1));
    if let (Some(a), Some(b)) = (inv_f, inv_1) {
        r.at_most("‖Z₁(v)⁻¹‖/g ≤ ‖Z_f(v)⁻¹‖", b / g, a);
        r.at_most("‖Z_f(v)⁻¹‖ ≤ g‖Z₁(v)⁻¹‖", a, g * b);
    }

    // h = |f|^{1/n} e^{iπ/n} for f < 0
    let nn = T::from_usize_lossy(n);
    let modulus = f.abs().powf(nn.recip());
    let arg = if f < T::zero() { T::PI() / nn } else { T::zero() };
    let h = Complex::from_polar(modulus, arg);
    let mut w: Vec<Complex<T>> = Vec::with_capacity(n);
    let mut p = Complex::new(T::one(), T::zero());
    for &x in spec.first_column() {
        w.push(p * x);
        p = p * h;
    }
    FourierPlan::new(n)?.forward(&mut w);
    let smax = w.iter().map(|u| u.norm()).fold(T::zero(), T::max);
    let smin = w.iter().map(|u| u.norm()).fold(T::infinity(), T::min);
    r.observe_at_most("‖Z₁(D_h v)‖/g ≤ ‖Z_f(v)‖", smax / g, nf);
    r.observe_at_most("‖Z_f(v)‖ ≤ g‖Z₁(D_h v)‖", nf, g * smax);
    if let Some(a) = inv_f {
        if smin > T::SINGULAR_RTOL * smax {
            let b = smin.recip();
            r.observe_at_most("‖Z₁(D_h v)⁻¹‖/g ≤ ‖Z_f(v)⁻¹‖", b / g, a);
            r.observe_at_most("‖Z_f(v)⁻¹‖ ≤ g‖Z₁(D_h v)⁻¹‖", a, g * b);
        }
    }
    Ok(r)
}
