//! Structured matrices (Toeplitz, Hankel, f-circulant), their fast
//! transforms, norm estimates and Gohberg–Semencul inverse representations.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`); the unsuffixed
//! aliases below fix the scalar to `f64`.

pub mod dense;
pub mod error;
pub mod gs;
pub mod norms;
pub mod scalar;
pub mod spectral;
pub mod structured;

pub use dense::{DenseMatrix, Lu};
pub use error::{Error, Result};
pub use gs::{CornerSolve, GohbergSemenculFactors, GsVariant};
pub use norms::{NormBoundReport, NormFamily, SpectralEstimate};
pub use scalar::Real;
pub use spectral::{FourierPlan, SpectralDiagonal, ToeplitzOperator};
pub use structured::{FCirculantSpec, HankelSpec, ToeplitzSpec};

pub type Toeplitz = ToeplitzSpec<f64>;
pub type FCirculant = FCirculantSpec<f64>;
pub type Hankel = HankelSpec<f64>;
pub type Matrix = DenseMatrix<f64>;
pub type Spectrum = SpectralDiagonal<f64>;
pub type Plan = FourierPlan<f64>;

pub type Toeplitz32 = ToeplitzSpec<f32>;
pub type FCirculant32 = FCirculantSpec<f32>;
pub type Matrix32 = DenseMatrix<f32>;
pub type GsFactors = GohbergSemenculFactors<f64>;
