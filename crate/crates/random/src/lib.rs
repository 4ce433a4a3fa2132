//! Random structured matrices and the distributions of their norms.
//!
//! Sampling is driven by [`RandomStream`], a ChaCha8 generator keyed by a
//! 64-bit seed and a substream index, so Monte Carlo runs give identical
//! samples however the trials are scheduled.

mod cdf;
mod empirical;
mod ensemble;
mod stream;

pub use cdf::{
    chi_cdf, chi_cdf_scaled, circulant_inverse_cdf, circulant_inverse_cdf_exact, corner_bound_cdf, gaussian_tail,
    hadamard_geometric_mean_bound, inner_product_cdf_bound, norm_cdf_lower_bound, normal_cdf,
    StructureKind,
};
pub use empirical::{ks_distance, CdfComparison, EmpiricalCdf, MIN_KS_SAMPLES};
pub use ensemble::{
    full_rank_check, iid_spectrum_inverse_norm, rank_one_deviation, sample_circulant,
    sample_general, sample_hankel, sample_toeplitz, Ensemble,
};
pub use stream::{sample_gaussian, sample_uniform, EntryDistribution, GaussianParams, RandomStream};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RandomError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Core(#[from] structnorm::Error),
}

pub type Result<T, E = RandomError> = std::result::Result<T, E>;
