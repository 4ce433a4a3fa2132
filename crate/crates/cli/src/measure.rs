//! One trial: draw a matrix, then measure `‖A‖` and `‖A⁻¹‖` in the
//! requested families.

use num_complex::Complex64;
use structnorm::norms::{
    dense_spectral_estimate, matrix_norm, spectral_norm_estimate, toeplitz_spectral_estimate, Inverse,
    PowerOptions,
};
use structnorm::spectral::FourierPlan;
use structnorm::structured::hankel_to_toeplitz;
use structnorm::{Lu, Matrix, NormFamily, Toeplitz};
use structnorm_random::{sample_circulant, sample_general, sample_hankel, sample_toeplitz};
use structnorm_random::{Ensemble, EntryDistribution, RandomStream};

use crate::error::{ExperimentError, Result};

/// Redraws allowed in a row before a size is abandoned.
pub const MAX_RESAMPLES: usize = 100;

/// Relative LU pivot (or `min|u_i|/max|u_i|`) below which a draw is
/// treated as singular and redrawn.
pub const SINGULAR_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    /// `‖A‖_h`, one entry per requested family.
    pub norm: Vec<f64>,
    /// `‖A⁻¹‖_h`, aligned with `norm`.
    pub inverse: Vec<f64>,
    pub stalled: usize,
    pub resampled: usize,
}

impl Measurement {
    pub fn condition(&self, i: usize) -> f64 {
        self.norm[i] * self.inverse[i]
    }
}

enum Draw {
    Dense { a: Matrix, toeplitz: Option<Toeplitz> },
    ComplexDense { re: Matrix, im: Matrix },
    Circulant(Vec<Complex64>),
}

fn draw(class: Ensemble, n: usize, dist: &EntryDistribution, complex: bool, s: &mut RandomStream) -> Result<Draw> {
    if class == Ensemble::Circulant {
        let re = sample_circulant(n, dist, s)?;
        let im = if complex { Some(sample_circulant(n, dist, s)?) } else { None };
        let t = re
            .first_column()
            .iter()
            .enumerate()
            .map(|(i, &x)| Complex64::new(x, im.as_ref().map_or(0.0, |m| m.first_column()[i])))
            .collect();
        return Ok(Draw::Circulant(t));
    }
    let one = |s: &mut RandomStream| -> Result<(Matrix, Option<Toeplitz>)> {
        Ok(match class {
            Ensemble::General => (sample_general(n, dist, s), None),
            Ensemble::Toeplitz => {
                let t = sample_toeplitz(n, dist, s)?;
                (t.to_dense()?, Some(t))
            }
            // ‖H‖_h = ‖HJ‖_h and ‖H⁻¹‖_h = ‖J H⁻¹‖_h in all four families
            _ => {
                let t = hankel_to_toeplitz(&sample_hankel(n, dist, s)?);
                (t.to_dense()?, Some(t))
            }
        })
    };
    let (re, toeplitz) = one(s)?;
    if complex {
        let (im, _) = one(s)?;
        Ok(Draw::ComplexDense { re, im })
    } else {
        Ok(Draw::Dense { a: re, toeplitz })
    }
}

/// Draws until a nonsingular sample appears and measures it.
pub fn sample_and_measure(
    class: Ensemble,
    n: usize,
    families: &[NormFamily],
    dist: &EntryDistribution,
    complex: bool,
    stream: &mut RandomStream,
) -> Result<Measurement> {
    for resampled in 0..MAX_RESAMPLES {
        let m = match draw(class, n, dist, complex, stream)? {
            Draw::Dense { a, toeplitz } => measure_dense(&a, toeplitz.as_ref(), families)?,
            Draw::ComplexDense { re, im } => measure_complex_dense(&re, &im, families)?,
            Draw::Circulant(t) => measure_circulant(&t, families)?,
        };
        if let Some(mut m) = m {
            m.resampled = resampled;
            return Ok(m);
        }
    }
    Err(ExperimentError::TooManySingular { n, attempts: MAX_RESAMPLES })
}

fn factor_checked(a: &Matrix) -> Result<Option<Lu<f64>>> {
    let norm1 = matrix_norm(a, NormFamily::One)?;
    let lu = Lu::factor(a)?;
    Ok((lu.min_pivot() > SINGULAR_RTOL * norm1).then_some(lu))
}

fn inverse_spectral(lu: &Lu<f64>, explicit: Option<&Matrix>, stalled: &mut usize) -> f64 {
    let upper = explicit.map_or(f64::INFINITY, |inv| {
        (matrix_norm(inv, NormFamily::One).unwrap_or(f64::INFINITY)
            * matrix_norm(inv, NormFamily::Infinity).unwrap_or(f64::INFINITY))
        .sqrt()
    });
    let est = spectral_norm_estimate(&Inverse(lu), upper, &PowerOptions::default());
    *stalled += usize::from(!est.converged);
    est.value
}

pub fn measure_dense(a: &Matrix, toeplitz: Option<&Toeplitz>, families: &[NormFamily]) -> Result<Option<Measurement>> {
    let Some(lu) = factor_checked(a)? else {
        return Ok(None);
    };
    let explicit = families
        .iter()
        .any(|&f| f != NormFamily::Two)
        .then(|| lu.inverse());
    let mut stalled = 0;
    let mut norm = Vec::with_capacity(families.len());
    let mut inverse = Vec::with_capacity(families.len());
    for &f in families {
        if f == NormFamily::Two {
            let est = match toeplitz {
                Some(t) => toeplitz_spectral_estimate(t),
                None => dense_spectral_estimate(a),
            };
            stalled += usize::from(!est.converged);
            norm.push(est.value);
            inverse.push(inverse_spectral(&lu, explicit.as_ref(), &mut stalled));
        } else {
            norm.push(matrix_norm(a, f)?);
            inverse.push(matrix_norm(explicit.as_ref().expect("explicit inverse"), f)?);
        }
    }
    Ok(Some(Measurement { norm, inverse, stalled, resampled: 0 }))
}

/// `B + iC` as the real `[[B, −C], [C, B]]`, which has the same singular
/// values (each doubled).
pub fn realify(re: &Matrix, im: &Matrix) -> Matrix {
    let n = re.rows();
    Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => re[(i, j)],
        (true, false) => -im[(i, j - n)],
        (false, true) => im[(i - n, j)],
        (false, false) => re[(i - n, j - n)],
    })
}

pub fn measure_complex_dense(re: &Matrix, im: &Matrix, families: &[NormFamily]) -> Result<Option<Measurement>> {
    let n = re.rows();
    let real = realify(re, im);
    let Some(lu) = factor_checked(&real)? else {
        return Ok(None);
    };
    let moduli = Matrix::from_fn(n, n, |i, j| re[(i, j)].hypot(im[(i, j)]));
    let inverse_moduli = families.iter().any(|&f| f != NormFamily::Two).then(|| {
        let mut out = Matrix::zeros(n, n);
        let mut e = vec![0.0; 2 * n];
        for j in 0..n {
            e[j] = 1.0;
            let z = lu.solve(&e);
            e[j] = 0.0;
            for i in 0..n {
                out[(i, j)] = z[i].hypot(z[i + n]);
            }
        }
        out
    });
    let mut stalled = 0;
    let mut norm = Vec::with_capacity(families.len());
    let mut inverse = Vec::with_capacity(families.len());
    for &f in families {
        if f == NormFamily::Two {
            let est = dense_spectral_estimate(&real);
            stalled += usize::from(!est.converged);
            norm.push(est.value);
            inverse.push(inverse_spectral(&lu, None, &mut stalled));
        } else {
            norm.push(matrix_norm(&moduli, f)?);
            inverse.push(matrix_norm(inverse_moduli.as_ref().expect("explicit inverse"), f)?);
        }
    }
    Ok(Some(Measurement { norm, inverse, stalled, resampled: 0 }))
}

fn modulus_sum(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).sum()
}

fn modulus_euclid(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Exact circulant norms from the spectrum `u = Ωt`; the inverse has
/// spectrum `1/u` and first column `Ω⁻¹(1/u)`.
pub fn measure_circulant(t: &[Complex64], families: &[NormFamily]) -> Result<Option<Measurement>> {
    let plan = FourierPlan::new(t.len())?;
    let mut u = t.to_vec();
    plan.forward(&mut u);
    let max = u.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let min = u.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    if !(min > SINGULAR_RTOL * max) {
        return Ok(None);
    }
    let recip: Vec<Complex64> = u.iter().map(|z| z.inv()).collect();
    let mut norm = Vec::with_capacity(families.len());
    let mut inverse = Vec::with_capacity(families.len());
    for &f in families {
        let (a, b) = match f {
            NormFamily::One | NormFamily::Infinity => {
                let mut col = recip.clone();
                plan.inverse(&mut col);
                (modulus_sum(t), modulus_sum(&col))
            }
            NormFamily::Two => (max, 1.0 / min),
            NormFamily::Frobenius => (modulus_euclid(&u), modulus_euclid(&recip)),
        };
        norm.push(a);
        inverse.push(b);
    }
    Ok(Some(Measurement { norm, inverse, stalled: 0, resampled: 0 }))
}
