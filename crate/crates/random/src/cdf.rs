use std::collections::HashMap;
use std::f64::consts::{FRAC_2_PI, SQRT_2};
use std::sync::{Arc, Mutex, OnceLock};

use libm::erfc;
use statrs::function::gamma::gamma_lr;

use crate::empirical::EmpiricalCdf;
use crate::stream::{GaussianParams, RandomStream};
use crate::{RandomError, Result};

/// `Φ((y − μ)/σ)`.
pub fn normal_cdf(y: f64, params: &GaussianParams) -> f64 {
    let x = (y - params.mean()) / params.std_dev();
    0.5 * erfc(-x / SQRT_2)
}

/// `P(|g| ≥ s) = 2(1 − Φ(s))` for a standard Gaussian `g`.
pub fn gaussian_tail(s: f64) -> f64 {
    if s <= 0.0 {
        return 1.0;
    }
    erfc(s / SQRT_2)
}

/// CDF of the 2-norm of a standard Gaussian `n`-vector, `P(n/2, y²/2)`.
pub fn chi_cdf(y: f64, n: usize) -> f64 {
    if y <= 0.0 || n == 0 {
        return 0.0;
    }
    if y.is_infinite() {
        return 1.0;
    }
    gamma_lr(n as f64 / 2.0, y * y / 2.0)
}

const NONCENTRAL_SAMPLES: usize = 100_000;
const NONCENTRAL_SEED: u64 = 0x6e6f_6e63_656e_7472;

type ChiKey = (u64, u64, usize);

fn noncentral_table(params: &GaussianParams, n: usize) -> Arc<EmpiricalCdf> {
    static CACHE: OnceLock<Mutex<HashMap<ChiKey, Arc<EmpiricalCdf>>>> = OnceLock::new();
    let key = (params.mean().to_bits(), params.std_dev().to_bits(), n);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("chi cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let mut stream = RandomStream::keyed(NONCENTRAL_SEED, n as u64, 0);
    let norms: Vec<f64> = (0..NONCENTRAL_SAMPLES)
        .map(|_| {
            (0..n)
                .map(|_| {
                    let g = stream.gaussian(params);
                    g * g
                })
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    let table = Arc::new(EmpiricalCdf::new(norms).expect("finite samples"));
    cache
        .lock()
        .expect("chi cache poisoned")
        .entry(key)
        .or_insert(table)
        .clone()
}

/// CDF of `‖x‖₂` for `x` with i.i.d. `N(μ, σ²)` entries. Closed form for
/// `μ = 0`; for `μ ≠ 0` a cached Monte Carlo table of 10⁵ draws.
pub fn chi_cdf_scaled(y: f64, params: &GaussianParams, n: usize) -> f64 {
    if y <= 0.0 || n == 0 {
        return 0.0;
    }
    if params.mean() == 0.0 {
        chi_cdf(y / params.std_dev(), n)
    } else {
        noncentral_table(params, n).evaluate(y)
    }
}

fn inverse_norm_q(z: f64, params: &GaussianParams) -> f64 {
    let r = 1.0 / z;
    (normal_cdf(r, params) - normal_cdf(-r, params)).clamp(0.0, 1.0)
}

/// `1 − (1 − q)ⁿ` with `q = P(|u| ≤ 1/z)`, `u ~ N(μ, σ²)`, the closed form
/// stated for the CDF of `‖Z₁(t)⁻¹‖ = 1/min_i |u_i|` over `n` independent
/// coordinates. It is in fact `P(1/min_i |u_i| ≥ z)`, the upper tail; see
/// [`circulant_inverse_cdf_exact`] for the CDF itself.
pub fn circulant_inverse_cdf(z: f64, params: &GaussianParams, n: usize) -> f64 {
    if z <= 0.0 {
        return 0.0;
    }
    let q = inverse_norm_q(z, params);
    if q >= 1.0 {
        return 1.0;
    }
    -(n as f64 * (-q).ln_1p()).exp_m1()
}

/// `(1 − q)ⁿ = P(min_i |u_i| ≥ 1/z)`, the CDF of `1/min_i |u_i|`.
pub fn circulant_inverse_cdf_exact(z: f64, params: &GaussianParams, n: usize) -> f64 {
    if z <= 0.0 {
        return 0.0;
    }
    (n as f64 * (-inverse_norm_q(z, params)).ln_1p()).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureKind {
    Toeplitz,
    Circulant,
}

/// Lower bound on `P(‖A‖_h ≤ y)` for every `h ∈ {1, 2, ∞, F}`:
/// `χ_{2n−1}(y/√(2n−1))` for Toeplitz, `χ_n(y/√n)` for circulant, with the
/// χ-CDF of the entry law `params`.
pub fn norm_cdf_lower_bound(y: f64, params: &GaussianParams, n: usize, kind: StructureKind) -> f64 {
    let m = match kind {
        StructureKind::Toeplitz => 2 * n - 1,
        StructureKind::Circulant => n,
    };
    chi_cdf_scaled(y / (m as f64).sqrt(), params, m)
}

/// `min(1, √(2/π)·y/σ)`, an upper bound on `P(|tᵀb| ≤ y)` for a unit `t`
/// and `b` with independent `N(μ_i, σ²)` entries.
pub fn inner_product_cdf_bound(y: f64, sigma: f64) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    (FRAC_2_PI.sqrt() * y / sigma).min(1.0)
}

/// `min(1, √(2n/π)·y/(σ·|u_n|))`.
pub fn corner_bound_cdf(y: f64, sigma: f64, n: usize, corner_magnitude: f64) -> f64 {
    if y <= 0.0 {
        return 0.0;
    }
    ((2.0 * n as f64 / std::f64::consts::PI).sqrt() * y / (sigma * corner_magnitude)).min(1.0)
}

/// `k^{(1 + 1/(k−1))/2}·t`: bounds `(|det M|/t)^{1/(k−1)}` for any `k×k`
/// matrix `M` with entries of modulus at most `t`.
pub fn hadamard_geometric_mean_bound(k: usize, t: f64) -> Result<f64> {
    if k < 2 || !(t > 0.0) {
        return Err(RandomError::InvalidParameter(format!(
            "hadamard bound needs k >= 2 and t > 0, got k={k}, t={t}"
        )));
    }
    let k = k as f64;
    Ok(k.powf(0.5 * (1.0 + 1.0 / (k - 1.0))) * t)
}
