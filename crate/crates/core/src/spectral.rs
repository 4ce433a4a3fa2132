//! Discrete Fourier transforms of arbitrary length and the diagonalization
//! of f-circulant matrices.
//!
//! The forward transform is `Ωv` with `Ω = (ω^{ij})`, `ω = exp(2πi/n)`; the
//! inverse is `Ω⁻¹ = (1/n)Ω^H`. Powers of two use an iterative radix-2
//! Cooley–Tukey kernel, every other length goes through Bluestein's chirp-z
//! reduction to a power-of-two cyclic convolution.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::structured::{FCirculantSpec, ToeplitzSpec};

/// A reusable transform plan for one length.
#[derive(Debug, Clone)]
pub struct FourierPlan<T> {
    len: usize,
    kernel: Kernel<T>,
}

#[derive(Debug, Clone)]
enum Kernel<T> {
    Single,
    Radix2 {
        // exp(+2πik/n), k < n/2
        twiddles: Vec<Complex<T>>,
    },
    Bluestein {
        inner: Box<FourierPlan<T>>,
        // exp(+πi k²/n), k < n
        chirp: Vec<Complex<T>>,
        // transform of the conjugate chirp laid out circularly
        kernel_hat: Vec<Complex<T>>,
    },
}

impl<T: Real> FourierPlan<T> {
    pub fn new(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::Empty("transform length"));
        }
        let kernel = if len == 1 {
            Kernel::Single
        } else if len.is_power_of_two() {
            Kernel::Radix2 {
                twiddles: (0..len / 2).map(|k| unit_root(k, len)).collect(),
            }
        } else {
            let m = (2 * len - 1).next_power_of_two();
            let inner = FourierPlan::new(m)?;
            let two_n = 2 * len as u128;
            let chirp: Vec<Complex<T>> = (0..len)
                .map(|k| {
                    // k² mod 2n keeps the angle argument small
                    let r = ((k as u128 * k as u128) % two_n) as usize;
                    unit_root(r, 2 * len)
                })
                .collect();
            let mut b = vec![Complex::zero(); m];
            b[0] = chirp[0].conj();
            for k in 1..len {
                b[k] = chirp[k].conj();
                b[m - k] = chirp[k].conj();
            }
            inner.forward(&mut b);
            Kernel::Bluestein {
                inner: Box::new(inner),
                chirp,
                kernel_hat: b,
            }
        };
        Ok(Self { len, kernel })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// In-place `buf ← Ω·buf`. Panics if `buf.len() != self.len()`.
    pub fn forward(&self, buf: &mut [Complex<T>]) {
        assert_eq!(buf.len(), self.len, "buffer length differs from plan length");
        match &self.kernel {
            Kernel::Single => {}
            Kernel::Radix2 { twiddles } => radix2(buf, twiddles),
            Kernel::Bluestein {
                inner,
                chirp,
                kernel_hat,
            } => {
                let m = inner.len();
                let mut a = vec![Complex::zero(); m];
                for ((dst, &x), &c) in a.iter_mut().zip(buf.iter()).zip(chirp) {
                    *dst = x * c;
                }
                inner.forward(&mut a);
                for (x, &k) in a.iter_mut().zip(kernel_hat) {
                    *x = *x * k;
                }
                inner.inverse(&mut a);
                for ((dst, &x), &c) in buf.iter_mut().zip(&a).zip(chirp) {
                    *dst = x * c;
                }
            }
        }
    }

    /// In-place `buf ← Ω⁻¹·buf = (1/n)Ω^H·buf`.
    pub fn inverse(&self, buf: &mut [Complex<T>]) {
        for x in buf.iter_mut() {
            *x = x.conj();
        }
        self.forward(buf);
        let scale = T::one() / T::from_usize_lossy(self.len);
        for x in buf.iter_mut() {
            *x = x.conj() * scale;
        }
    }

    pub fn forward_real(&self, v: &[T]) -> Vec<Complex<T>> {
        let mut buf: Vec<Complex<T>> = v.iter().map(|&x| Complex::new(x, T::zero())).collect();
        self.forward(&mut buf);
        buf
    }
}

#[inline]
fn unit_root<T: Real>(k: usize, n: usize) -> Complex<T> {
    let angle = T::TAU() * T::from_usize_lossy(k) / T::from_usize_lossy(n);
    Complex::new(angle.cos(), angle.sin())
}

fn radix2<T: Real>(buf: &mut [Complex<T>], twiddles: &[Complex<T>]) {
    let n = buf.len();
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            buf.swap(i, j);
        }
    }
    let mut size = 2;
    while size <= n {
        let half = size / 2;
        let stride = n / size;
        for start in (0..n).step_by(size) {
            for k in 0..half {
                let w = twiddles[k * stride];
                let a = buf[start + k];
                let b = buf[start + k + half] * w;
                buf[start + k] = a + b;
                buf[start + k + half] = a - b;
            }
        }
        size *= 2;
    }
}

/// `Ωv`.
pub fn dft<T: Real>(v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let plan = FourierPlan::new(v.len())?;
    let mut out = v.to_vec();
    plan.forward(&mut out);
    Ok(out)
}

/// `(1/n)Ω^H v`.
pub fn idft<T: Real>(v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
    let plan = FourierPlan::new(v.len())?;
    let mut out = v.to_vec();
    plan.inverse(&mut out);
    Ok(out)
}

/// Eigenvalues of an f-circulant, `u = U_g t = Ω D(g) t` with `gⁿ = f`.
///
/// The represented matrix is `D(g)⁻¹ Ω⁻¹ D(u) Ω D(g)`; for `f = 1` this is
/// the unitary diagonalization `Ω⁻¹ D(Ωt) Ω`.
#[derive(Debug, Clone)]
pub struct SpectralDiagonal<T> {
    eigenvalues: Vec<Complex<T>>,
    factor: T,
    root: T,
    plan: FourierPlan<T>,
}

impl<T: Real> SpectralDiagonal<T> {
    /// A circulant (`f = 1`) given directly by its eigenvalues.
    pub fn from_eigenvalues(eigenvalues: Vec<Complex<T>>) -> Result<Self> {
        let plan = FourierPlan::new(eigenvalues.len())?;
        if eigenvalues.iter().any(|u| !u.re.is_finite() || !u.im.is_finite()) {
            return Err(Error::NonFinite("eigenvalues"));
        }
        Ok(Self {
            eigenvalues,
            factor: T::one(),
            root: T::one(),
            plan,
        })
    }

    pub fn eigenvalues(&self) -> &[Complex<T>] {
        &self.eigenvalues
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    #[inline]
    pub fn factor(&self) -> T {
        self.factor
    }

    /// The positive n-th root `g` of the factor.
    #[inline]
    pub fn root(&self) -> T {
        self.root
    }

    pub fn plan(&self) -> &FourierPlan<T> {
        &self.plan
    }

    pub fn min_modulus(&self) -> T {
        self.eigenvalues.iter().map(|u| u.norm()).fold(T::infinity(), T::min)
    }

    pub fn max_modulus(&self) -> T {
        self.eigenvalues.iter().map(|u| u.norm()).fold(T::zero(), T::max)
    }

    /// `SINGULAR_RTOL · max_i |u_i|`.
    pub fn singular_threshold(&self) -> T {
        T::SINGULAR_RTOL * self.max_modulus()
    }

    pub fn is_singular(&self) -> bool {
        self.min_modulus() <= self.singular_threshold()
    }

    pub fn check_nonsingular(&self) -> Result<()> {
        let (min, thr) = (self.min_modulus(), self.singular_threshold());
        if min <= thr {
            Err(Error::SingularCirculant {
                min_modulus: min.to_f64_lossy(),
                threshold: thr.to_f64_lossy(),
            })
        } else {
            Ok(())
        }
    }

    fn scale_powers(&self, x: &mut [Complex<T>], inverse: bool) {
        if self.root == T::one() {
            return;
        }
        let g = if inverse { self.root.recip() } else { self.root };
        let mut p = T::one();
        for v in x.iter_mut() {
            *v = *v * p;
            p *= g;
        }
    }

    fn diagonal_apply(&self, x: &[Complex<T>], reciprocal: bool) -> Vec<Complex<T>> {
        assert_eq!(x.len(), self.order(), "vector length differs from order");
        let mut buf = x.to_vec();
        self.scale_powers(&mut buf, false);
        self.plan.forward(&mut buf);
        for (v, u) in buf.iter_mut().zip(&self.eigenvalues) {
            *v = if reciprocal { *v / *u } else { *v * *u };
        }
        self.plan.inverse(&mut buf);
        self.scale_powers(&mut buf, true);
        buf
    }

    pub fn apply_complex(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        self.diagonal_apply(x, false)
    }

    /// `Z_f(t)·x` for real `x`; the imaginary roundoff is dropped.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        let cx: Vec<Complex<T>> = x.iter().map(|&v| Complex::new(v, T::zero())).collect();
        self.diagonal_apply(&cx, false).into_iter().map(|c| c.re).collect()
    }

    pub fn solve_complex(&self, x: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        self.check_nonsingular()?;
        Ok(self.diagonal_apply(x, true))
    }

    /// `Z_f(t)⁻¹·x` by reciprocal eigenvalues.
    pub fn solve(&self, x: &[T]) -> Result<Vec<T>> {
        let cx: Vec<Complex<T>> = x.iter().map(|&v| Complex::new(v, T::zero())).collect();
        Ok(self.solve_complex(&cx)?.into_iter().map(|c| c.re).collect())
    }

    /// First column of the inverse (itself an f-circulant).
    pub fn inverse_first_column(&self) -> Result<Vec<Complex<T>>> {
        let mut e = vec![Complex::zero(); self.order()];
        e[0] = Complex::new(T::one(), T::zero());
        self.solve_complex(&e)
    }
}

fn check_len<T>(what: &'static str, expected: usize, x: &[T]) -> Result<()> {
    if x.len() != expected {
        Err(Error::InvalidLength {
            what,
            expected,
            actual: x.len(),
        })
    } else {
        Ok(())
    }
}

/// Diagonalizes an f-circulant with `f > 0` through `g = f^{1/n}`.
pub fn circulant_eigenvalues<T: Real>(spec: &FCirculantSpec<T>) -> Result<SpectralDiagonal<T>> {
    let f = spec.factor();
    if f.is_zero() {
        return Err(Error::ZeroFactor);
    }
    if f < T::zero() {
        return Err(Error::NegativeFactor(f.to_f64_lossy()));
    }
    let n = spec.order();
    let plan = FourierPlan::new(n)?;
    let root = if f == T::one() {
        T::one()
    } else {
        f.powf(T::from_usize_lossy(n).recip())
    };
    let mut buf: Vec<Complex<T>> = spec
        .first_column()
        .iter()
        .map(|&x| Complex::new(x, T::zero()))
        .collect();
    let mut diag = SpectralDiagonal {
        eigenvalues: Vec::new(),
        factor: f,
        root,
        plan,
    };
    diag.scale_powers(&mut buf, false);
    diag.plan.forward(&mut buf);
    diag.eigenvalues = buf;
    Ok(diag)
}

/// `Z_f(t)·x`: spectral route for `f > 0`, circulant embedding otherwise.
pub fn circulant_matvec<T: Real>(spec: &FCirculantSpec<T>, x: &[T]) -> Result<Vec<T>> {
    check_len("circulant operand", spec.order(), x)?;
    if spec.factor() > T::zero() {
        Ok(circulant_eigenvalues(spec)?.apply(x))
    } else {
        toeplitz_matvec(&spec.to_toeplitz(), x)
    }
}

/// `Z_f(t)⁻¹·x` for `f > 0`.
pub fn circulant_inverse_apply<T: Real>(spec: &FCirculantSpec<T>, x: &[T]) -> Result<Vec<T>> {
    check_len("circulant operand", spec.order(), x)?;
    circulant_eigenvalues(spec)?.solve(x)
}

/// Fast `T·x` and `Tᵀ·x` through a zero-padded circulant embedding of
/// power-of-two size `m ≥ 2n − 1`.
#[derive(Debug, Clone)]
pub struct ToeplitzOperator<T> {
    order: usize,
    plan: FourierPlan<T>,
    column_hat: Vec<Complex<T>>,
    row_hat: Vec<Complex<T>>,
}

impl<T: Real> ToeplitzOperator<T> {
    pub fn new(spec: &ToeplitzSpec<T>) -> Self {
        let n = spec.order();
        let m = (2 * n - 1).next_power_of_two();
        let plan = FourierPlan::new(m).expect("embedding size is positive");
        let embed = |t: &dyn Fn(isize) -> T| {
            let mut c = vec![Complex::zero(); m];
            for k in 0..n {
                c[k] = Complex::new(t(k as isize), T::zero());
            }
            for k in 1..n {
                c[m - k] = Complex::new(t(-(k as isize)), T::zero());
            }
            plan.forward(&mut c);
            c
        };
        let column_hat = embed(&|k| spec.t(k));
        let row_hat = embed(&|k| spec.t(-k));
        Self {
            order: n,
            plan,
            column_hat,
            row_hat,
        }
    }

    /// `Z(a)`: lower-triangular Toeplitz with first column `a`.
    pub fn lower_triangular(a: &[T]) -> Self {
        let n = a.len();
        let mut d = vec![T::zero(); n - 1];
        d.extend_from_slice(a);
        Self::new(&ToeplitzSpec::new(d).expect("finite generator"))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Length of the circulant embedding.
    pub fn embedding_len(&self) -> usize {
        self.plan.len()
    }

    fn convolve(&self, hat: &[Complex<T>], x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.order, "vector length differs from order");
        let m = self.plan.len();
        let mut buf = vec![Complex::zero(); m];
        for (b, &v) in buf.iter_mut().zip(x) {
            *b = Complex::new(v, T::zero());
        }
        self.plan.forward(&mut buf);
        for (b, &h) in buf.iter_mut().zip(hat) {
            *b = *b * h;
        }
        self.plan.inverse(&mut buf);
        buf.truncate(self.order);
        buf.into_iter().map(|c| c.re).collect()
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        self.convolve(&self.column_hat, x)
    }

    pub fn apply_transpose(&self, x: &[T]) -> Vec<T> {
        self.convolve(&self.row_hat, x)
    }
}

/// `T·x` in O(n log n).
pub fn toeplitz_matvec<T: Real>(spec: &ToeplitzSpec<T>, x: &[T]) -> Result<Vec<T>> {
    check_len("Toeplitz operand", spec.order(), x)?;
    Ok(ToeplitzOperator::new(spec).apply(x))
}
