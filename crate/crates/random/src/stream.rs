use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::{RandomError, Result};

/// Mean and standard deviation of a Gaussian entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianParams {
    mean: f64,
    std_dev: f64,
}

impl GaussianParams {
    pub fn new(mean: f64, std_dev: f64) -> Result<Self> {
        if !mean.is_finite() || !std_dev.is_finite() || std_dev <= 0.0 {
            return Err(RandomError::InvalidParameter(format!(
                "gaussian needs finite mean and positive finite sigma, got mu={mean}, sigma={std_dev}"
            )));
        }
        Ok(Self { mean, std_dev })
    }

    pub fn standard() -> Self {
        Self { mean: 0.0, std_dev: 1.0 }
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn std_dev(&self) -> f64 {
        self.std_dev
    }
}

/// A deterministic ChaCha8 stream.
///
/// The 256-bit key is `(seed, domain)` in little-endian order padded with
/// zeros and the ChaCha stream id is the substream index, so
/// `keyed(seed, domain, i)` and `keyed(seed, domain, j)` never overlap.
#[derive(Debug, Clone)]
pub struct RandomStream {
    rng: ChaCha8Rng,
    seed: u64,
    index: u64,
    spare: Option<f64>,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self::keyed(seed, 0, 0)
    }

    /// Substream `index` of `seed` in the default domain.
    pub fn substream(seed: u64, index: u64) -> Self {
        Self::keyed(seed, 0, index)
    }

    pub fn keyed(seed: u64, domain: u64, index: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&domain.to_le_bytes());
        let mut rng = ChaCha8Rng::from_seed(key);
        rng.set_stream(index);
        Self { rng, seed, index, spare: None }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let x = lo + (hi - lo) * self.next_f64();
        // rounding can land on hi when the width is not a power of two
        if x < hi {
            x
        } else {
            lo
        }
    }

    /// Box–Muller; the second variate of each pair is kept for the next call.
    pub fn standard_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = std::f64::consts::TAU * u2;
        self.spare = Some(r * theta.sin());
        r * theta.cos()
    }

    pub fn gaussian(&mut self, params: &GaussianParams) -> f64 {
        params.mean + params.std_dev * self.standard_normal()
    }
}

pub fn sample_gaussian(params: &GaussianParams, n: usize, stream: &mut RandomStream) -> Vec<f64> {
    (0..n).map(|_| stream.gaussian(params)).collect()
}

/// I.i.d. draws on `[lo, hi)`.
pub fn sample_uniform(lo: f64, hi: f64, n: usize, stream: &mut RandomStream) -> Result<Vec<f64>> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(RandomError::InvalidParameter(format!(
            "uniform range needs lo < hi, got [{lo}, {hi})"
        )));
    }
    Ok((0..n).map(|_| stream.uniform(lo, hi)).collect())
}

/// Law of the independent matrix entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntryDistribution {
    /// Uniform on `[−1, 1)`.
    UniformSym,
    Gaussian(GaussianParams),
}

impl EntryDistribution {
    pub fn draw(&self, stream: &mut RandomStream) -> f64 {
        match self {
            Self::UniformSym => stream.uniform(-1.0, 1.0),
            Self::Gaussian(p) => stream.gaussian(p),
        }
    }

    pub fn sample(&self, n: usize, stream: &mut RandomStream) -> Vec<f64> {
        (0..n).map(|_| self.draw(stream)).collect()
    }
}
