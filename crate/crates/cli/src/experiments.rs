use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use structnorm::norms::{toeplitz_norm, toeplitz_spectral_estimate};
use structnorm::structured::hankel_to_toeplitz;
use structnorm::NormFamily;
use structnorm_random::{
    circulant_inverse_cdf, circulant_inverse_cdf_exact, inner_product_cdf_bound, iid_spectrum_inverse_norm, ks_distance, norm_cdf_lower_bound,
    sample_circulant, sample_gaussian, sample_hankel, sample_toeplitz, EmpiricalCdf, Ensemble, EntryDistribution,
    GaussianParams, RandomStream, StructureKind,
};

use crate::config::ExperimentConfig;
use crate::error::{ExperimentError, Result};
use crate::measure::sample_and_measure;
use crate::stats::{mean_std, StatsSummary};

/// Means over the trials of one class and size.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioRecord {
    pub n: usize,
    pub matrix_class: String,
    pub mean_norm_1: f64,
    pub mean_norm_2: f64,
    pub mean_ratio: f64,
    pub mean_inverse_norm_1: f64,
    pub mean_inverse_norm_2: f64,
    pub mean_inverse_ratio: f64,
}

/// One Monte Carlo suite at one size: a KS distance against an exact CDF,
/// or a count of grid points where an analytic bound is violated by more
/// than three standard errors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdfRecord {
    pub n: usize,
    pub suite: String,
    pub samples: usize,
    pub ks_distance: Option<f64>,
    pub grid_points: usize,
    pub violations: usize,
    /// False for observations reported without a pass/fail meaning.
    pub gating: bool,
}

/// Points in every dominance grid.
pub const GRID_POINTS: usize = 50;

fn pool(config: &ExperimentConfig) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| ExperimentError::Numeric(format!("thread pool: {e}")))
}

/// Substream domain of the matrix trials at order `n`. Condition and ratio
/// runs with the same seed see the same matrices.
fn matrix_domain(n: usize) -> u64 {
    n as u64
}

fn suite_domain(suite: u64, n: usize) -> u64 {
    (suite << 40) | n as u64
}

fn trials<T: Send>(
    pool: &rayon::ThreadPool,
    count: usize,
    f: impl Fn(u64) -> Result<T> + Sync + Send,
) -> Result<Vec<T>> {
    pool.install(|| (0..count as u64).into_par_iter().map(f).collect())
}

/// Condition numbers `‖A‖_h‖A⁻¹‖_h` in the configured family, one
/// [`StatsSummary`] per size.
pub fn run_condition_experiment(config: &ExperimentConfig) -> Result<Vec<StatsSummary>> {
    config.validate()?;
    let pool = pool(config)?;
    let families = [config.norm_family];
    let mut out = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        let ms = trials(&pool, config.trials_per_size, |k| {
            let mut s = RandomStream::keyed(config.seed, matrix_domain(n), k);
            sample_and_measure(config.matrix_class, n, &families, &config.distribution, config.complex, &mut s)
        })?;
        let kappa: Vec<f64> = ms.iter().map(|m| m.condition(0)).collect();
        let mut summary = StatsSummary::from_values(
            n,
            config.matrix_class.label(),
            &format!("kappa_{}", config.norm_family),
            &kappa,
        );
        summary.resampled = ms.iter().map(|m| m.resampled).sum();
        summary.stalled = ms.iter().map(|m| m.stalled).sum();
        out.push(summary);
    }
    Ok(out)
}

/// `‖A‖₁`, `‖A‖₂`, their ratio and the same for `A⁻¹`, averaged per size.
pub fn run_norm_ratio_experiment(config: &ExperimentConfig) -> Result<Vec<RatioRecord>> {
    config.validate()?;
    let pool = pool(config)?;
    let families = [NormFamily::One, NormFamily::Two];
    let mut out = Vec::with_capacity(config.sizes.len());
    for &n in &config.sizes {
        let ms = trials(&pool, config.trials_per_size, |k| {
            let mut s = RandomStream::keyed(config.seed, matrix_domain(n), k);
            sample_and_measure(config.matrix_class, n, &families, &config.distribution, config.complex, &mut s)
        })?;
        let col = |f: &dyn Fn(&crate::measure::Measurement) -> f64| mean_std(&ms.iter().map(f).collect::<Vec<_>>()).0;
        out.push(RatioRecord {
            n,
            matrix_class: config.matrix_class.label().to_owned(),
            mean_norm_1: col(&|m| m.norm[0]),
            mean_norm_2: col(&|m| m.norm[1]),
            mean_ratio: col(&|m| m.norm[0] / m.norm[1]),
            mean_inverse_norm_1: col(&|m| m.inverse[0]),
            mean_inverse_norm_2: col(&|m| m.inverse[1]),
            mean_inverse_ratio: col(&|m| m.inverse[0] / m.inverse[1]),
        });
    }
    Ok(out)
}

fn linear_grid(values: &EmpiricalCdf) -> Vec<f64> {
    let v = values.values();
    let (lo, hi) = (v[0], v[v.len() - 1]);
    (0..GRID_POINTS)
        .map(|i| lo + (hi - lo) * i as f64 / (GRID_POINTS - 1) as f64)
        .collect()
}

fn standard_error(p: f64, f: f64, m: usize) -> f64 {
    (p * (1.0 - p)).max(f * (1.0 - f)).max(0.0).sqrt() / (m as f64).sqrt()
}

/// Grid points where `F_emp(y) < bound(y) − 3·SE`.
pub fn lower_bound_violations(emp: &EmpiricalCdf, bound: impl Fn(f64) -> f64) -> usize {
    linear_grid(emp)
        .into_iter()
        .filter(|&y| {
            let (p, f) = (bound(y), emp.evaluate(y));
            f < p - 3.0 * standard_error(p, f, emp.len())
        })
        .count()
}

/// Grid points where `F_emp(y) > bound(y) + 3·SE`.
pub fn upper_bound_violations(emp: &EmpiricalCdf, bound: impl Fn(f64) -> f64) -> usize {
    linear_grid(emp)
        .into_iter()
        .filter(|&y| {
            let (p, f) = (bound(y), emp.evaluate(y));
            f > p + 3.0 * standard_error(p, f, emp.len())
        })
        .count()
}

const SUITE_IID: u64 = 1;
const SUITE_REAL_T: u64 = 2;
const SUITE_NORMS: u64 = 3;
const SUITE_INNER: u64 = 4;

/// `[‖A‖₁, ‖A‖₂, ‖A‖∞, ‖A‖_F]` of one Gaussian draw.
fn structured_norms(
    class: Ensemble,
    n: usize,
    dist: &EntryDistribution,
    s: &mut RandomStream,
) -> Result<[f64; 4]> {
    if class == Ensemble::Circulant {
        let c = sample_circulant(n, dist, s)?;
        let t = c.to_toeplitz();
        return Ok([
            toeplitz_norm(&t, NormFamily::One)?,
            structnorm::norms::circulant_norm(&c, NormFamily::Two)?,
            toeplitz_norm(&t, NormFamily::Infinity)?,
            structnorm::norms::circulant_frobenius_norm(&c)?,
        ]);
    }
    let t = match class {
        Ensemble::Toeplitz => sample_toeplitz(n, dist, s)?,
        _ => hankel_to_toeplitz(&sample_hankel(n, dist, s)?),
    };
    Ok([
        toeplitz_norm(&t, NormFamily::One)?,
        toeplitz_spectral_estimate(&t).value,
        toeplitz_norm(&t, NormFamily::Infinity)?,
        toeplitz_norm(&t, NormFamily::Frobenius)?,
    ])
}

/// Monte Carlo validation of the Gaussian CDF results at every configured
/// size with `trials_per_size` samples per suite:
///
/// * `circulant_inverse_iid_u`: KS distance of `‖Z₁(t)⁻¹‖` against
///   `1 − (1 − q)ⁿ` when `Ωt` has i.i.d. real Gaussian coordinates (gating);
/// * `circulant_inverse_iid_u_exact`: the same sample against `(1 − q)ⁿ`;
/// * `circulant_inverse_real_t_exact`: real Gaussian `t` against `(1 − q)ⁿ`;
/// * `norm_lower_bound_{h}`: the χ lower bound on the CDF of `‖A‖_h`;
/// * `inner_product_{e1,flat}`: the `√(2/π)·y/σ` upper bound on the CDF of
///   `|tᵀb|` for `t = e₁` and `t = e/√n`.
pub fn run_cdf_validation(config: &ExperimentConfig) -> Result<Vec<CdfRecord>> {
    config.validate()?;
    let Some(params) = config.gaussian() else {
        return Err(ExperimentError::Config(
            "cdf validation needs --dist gaussian; the analytic CDFs are Gaussian only".into(),
        ));
    };
    let kind = match config.matrix_class {
        Ensemble::Circulant => StructureKind::Circulant,
        Ensemble::Toeplitz | Ensemble::Hankel => StructureKind::Toeplitz,
        Ensemble::General => {
            return Err(ExperimentError::Config(
                "cdf validation supports the circulant, toeplitz and hankel classes".into(),
            ))
        }
    };
    if config.complex {
        return Err(ExperimentError::Config("cdf validation is real-valued only".into()));
    }
    if config.trials_per_size < structnorm_random::MIN_KS_SAMPLES {
        return Err(ExperimentError::Config(format!(
            "cdf validation needs at least {} trials",
            structnorm_random::MIN_KS_SAMPLES
        )));
    }
    let pool = pool(config)?;
    let m = config.trials_per_size;
    let dist = EntryDistribution::Gaussian(params);
    let seed = config.seed;
    let mut out = Vec::new();
    for &n in &config.sizes {
        if kind == StructureKind::Circulant {
            let iid = trials(&pool, m, |k| {
                let mut s = RandomStream::keyed(seed, suite_domain(SUITE_IID, n), k);
                Ok(iid_spectrum_inverse_norm(&params, n, &mut s)?)
            })?;
            out.push(ks_record(n, "circulant_inverse_iid_u", &iid, &params, Closed::Stated)?);
            out.push(ks_record(n, "circulant_inverse_iid_u_exact", &iid, &params, Closed::Exact)?);
            let real = trials(&pool, m, |k| {
                let mut s = RandomStream::keyed(seed, suite_domain(SUITE_REAL_T, n), k);
                let c = sample_circulant(n, &dist, &mut s)?;
                let eig = structnorm::spectral::circulant_eigenvalues(&c)?;
                Ok(1.0 / eig.min_modulus())
            })?;
            out.push(ks_record(n, "circulant_inverse_real_t_exact", &real, &params, Closed::Exact)?);
        }

        let norms = trials(&pool, m, |k| {
            let mut s = RandomStream::keyed(seed, suite_domain(SUITE_NORMS, n), k);
            structured_norms(config.matrix_class, n, &dist, &mut s)
        })?;
        for (i, family) in [NormFamily::One, NormFamily::Two, NormFamily::Infinity, NormFamily::Frobenius]
            .into_iter()
            .enumerate()
        {
            let emp = EmpiricalCdf::new(norms.iter().map(|v| v[i]).collect())?;
            out.push(CdfRecord {
                n,
                suite: format!("norm_lower_bound_{family}"),
                samples: m,
                ks_distance: None,
                grid_points: GRID_POINTS,
                violations: lower_bound_violations(&emp, |y| norm_cdf_lower_bound(y, &params, n, kind)),
                gating: true,
            });
        }

        let inner = trials(&pool, m, |k| {
            let mut s = RandomStream::keyed(seed, suite_domain(SUITE_INNER, n), k);
            let b = sample_gaussian(&params, n, &mut s);
            let flat = b.iter().sum::<f64>() / (n as f64).sqrt();
            Ok([b[0].abs(), flat.abs()])
        })?;
        for (i, label) in ["inner_product_e1", "inner_product_flat"].into_iter().enumerate() {
            let emp = EmpiricalCdf::new(inner.iter().map(|v| v[i]).collect())?;
            out.push(CdfRecord {
                n,
                suite: label.to_owned(),
                samples: m,
                ks_distance: None,
                grid_points: GRID_POINTS,
                violations: upper_bound_violations(&emp, |y| inner_product_cdf_bound(y, params.std_dev())),
                gating: true,
            });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Closed {
    /// `1 − (1 − q)ⁿ`, gating.
    Stated,
    /// `(1 − q)ⁿ`, reported as an observation.
    Exact,
}

fn ks_record(n: usize, suite: &str, values: &[f64], params: &GaussianParams, closed: Closed) -> Result<CdfRecord> {
    let emp = EmpiricalCdf::new(values.to_vec())?;
    let cmp = match closed {
        Closed::Stated => ks_distance(&emp, |z| circulant_inverse_cdf(z, params, n), suite)?,
        Closed::Exact => ks_distance(&emp, |z| circulant_inverse_cdf_exact(z, params, n), suite)?,
    };
    Ok(CdfRecord {
        n,
        suite: suite.to_owned(),
        samples: values.len(),
        ks_distance: Some(cmp.ks_distance),
        grid_points: 0,
        violations: 0,
        gating: closed == Closed::Stated,
    })
}
