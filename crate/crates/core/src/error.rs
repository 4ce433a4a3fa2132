use thiserror::Error;

/// Errors raised by the structured-matrix kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what}: expected length {expected}, got {actual}")]
    InvalidLength {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("{0}: entries must be finite")]
    NonFinite(&'static str),
    #[error("{0}: vector must be nonempty")]
    Empty(&'static str),
    #[error("dense expansion limited to order {max}, requested {order}")]
    TooLarge { order: usize, max: usize },
    #[error("factor f = 0 has no diagonalization")]
    ZeroFactor,
    #[error("negative factor f = {0} is not supported by the spectral path")]
    NegativeFactor(f64),
    #[error("circulant is numerically singular: min |u_i| = {min_modulus:e} <= {threshold:e}")]
    SingularCirculant { min_modulus: f64, threshold: f64 },
    #[error("Toeplitz matrix is numerically singular: LU pivot {pivot:e} <= {threshold:e}")]
    SingularToeplitz { pivot: f64, threshold: f64 },
    #[error("matrix is numerically singular: LU pivot {pivot:e} <= {threshold:e}")]
    SingularMatrix { pivot: f64, threshold: f64 },
    #[error("Gohberg-Semencul pivot {pivot:e} is below tolerance {tolerance:e}")]
    ZeroPivot { pivot: f64, tolerance: f64 },
    #[error("power iteration stalled after {iterations} iterations; norm in [{lower:e}, {upper:e}]")]
    PowerIterationStall {
        lower: f64,
        upper: f64,
        iterations: usize,
    },
    #[error("operation requires factor f = {expected}, got {actual}")]
    FactorMismatch { expected: f64, actual: f64 },
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
