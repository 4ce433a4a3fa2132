use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use structnorm::norms::{matrix_norm, NormFamily};
use structnorm::spectral::{dft, idft};
use structnorm::{DenseMatrix, FCirculant, Hankel, Lu, Matrix, Toeplitz};

use crate::stream::{EntryDistribution, GaussianParams, RandomStream};
use crate::{RandomError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    General,
    Toeplitz,
    Circulant,
    Hankel,
}

impl Ensemble {
    pub const ALL: [Ensemble; 4] = [Self::General, Self::Toeplitz, Self::Circulant, Self::Hankel];

    pub fn label(self) -> &'static str {
        match self {
            Self::General => "general",
            Self::Toeplitz => "toeplitz",
            Self::Circulant => "circulant",
            Self::Hankel => "hankel",
        }
    }

    /// Number of independent entries of an `n×n` member.
    pub fn parameters(self, n: usize) -> usize {
        match self {
            Self::General => n * n,
            Self::Toeplitz | Self::Hankel => 2 * n - 1,
            Self::Circulant => n,
        }
    }

    pub fn sample_dense(self, n: usize, dist: &EntryDistribution, stream: &mut RandomStream) -> Result<Matrix> {
        Ok(match self {
            Self::General => sample_general(n, dist, stream),
            Self::Toeplitz => sample_toeplitz(n, dist, stream)?.to_dense()?,
            Self::Circulant => sample_circulant(n, dist, stream)?.to_dense()?,
            Self::Hankel => sample_hankel(n, dist, stream)?.to_dense()?,
        })
    }
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Ensemble {
    type Err = RandomError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "general" | "dense" => Ok(Self::General),
            "toeplitz" => Ok(Self::Toeplitz),
            "circulant" => Ok(Self::Circulant),
            "hankel" => Ok(Self::Hankel),
            _ => Err(RandomError::InvalidParameter(format!(
                "unknown matrix class {s:?} (expected general, toeplitz, circulant or hankel)"
            ))),
        }
    }
}

/// Row-major `n×n` matrix of independent entries.
pub fn sample_general(n: usize, dist: &EntryDistribution, stream: &mut RandomStream) -> Matrix {
    DenseMatrix::from_row_major(n, n, dist.sample(n * n, stream))
}

/// Draws `t_{1−n}, …, t_{n−1}` in that order.
pub fn sample_toeplitz(n: usize, dist: &EntryDistribution, stream: &mut RandomStream) -> Result<Toeplitz> {
    Ok(Toeplitz::new(dist.sample(2 * n - 1, stream))?)
}

pub fn sample_circulant(n: usize, dist: &EntryDistribution, stream: &mut RandomStream) -> Result<FCirculant> {
    Ok(FCirculant::circulant(dist.sample(n, stream))?)
}

pub fn sample_hankel(n: usize, dist: &EntryDistribution, stream: &mut RandomStream) -> Result<Hankel> {
    Ok(Hankel::new(dist.sample(2 * n - 1, stream))?)
}

/// `‖Z₁(t)⁻¹‖₂` for the circulant whose spectrum `u = Ωt` has i.i.d. real
/// `N(μ, σ²)` coordinates: draw `u`, form `t = Ω⁻¹u`, transform back and
/// return `1/min_i |(Ωt)_i|`. The generator `t` is complex in general.
pub fn iid_spectrum_inverse_norm(params: &GaussianParams, n: usize, stream: &mut RandomStream) -> Result<f64> {
    let u: Vec<Complex64> = (0..n).map(|_| Complex64::new(stream.gaussian(params), 0.0)).collect();
    let t = idft(&u)?;
    let back = dft(&t)?;
    let min = back.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    Ok(1.0 / min)
}

/// `‖M − μeeᵀ‖_F / σ` for one draw `M` of the Gaussian ensemble.
pub fn rank_one_deviation(
    params: &GaussianParams,
    n: usize,
    ensemble: Ensemble,
    stream: &mut RandomStream,
) -> Result<f64> {
    let m = ensemble.sample_dense(n, &EntryDistribution::Gaussian(*params), stream)?;
    let centered = m.map(|x| x - params.mean());
    Ok(matrix_norm(&centered, NormFamily::Frobenius)? / params.std_dev())
}

/// Smallest partial-pivoting LU pivot exceeds `1e−12·‖A‖₁`.
pub fn full_rank_check(a: &Matrix) -> bool {
    let Ok(norm1) = matrix_norm(a, NormFamily::One) else {
        return false;
    };
    match Lu::factor(a) {
        Ok(lu) => lu.min_pivot() > 1e-12 * norm1,
        Err(_) => false,
    }
}
