//! The floating-point scalar abstraction shared by the structured kernels.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

/// A real floating-point scalar (`f32` or `f64`) together with the
/// tolerances the library uses at that precision.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssign
    + Sum
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Relative threshold below which `min |u_i| / max |u_i|` marks a
    /// circulant as singular.
    const SINGULAR_RTOL: Self;
    /// Relative pivot threshold for Gohberg–Semencul factors and rank checks.
    const PIVOT_RTOL: Self;
    /// Additive slack factor used by every norm-bound comparison.
    const BOUND_SLACK: Self;
    /// Relative change at which power iteration is declared converged.
    const POWER_TOL: Self;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    const SINGULAR_RTOL: Self = 1e-13;
    const PIVOT_RTOL: Self = 1e-12;
    const BOUND_SLACK: Self = 1e-12;
    const POWER_TOL: Self = 1e-10;
}

impl Real for f32 {
    const SINGULAR_RTOL: Self = 1e-5;
    const PIVOT_RTOL: Self = 1e-5;
    const BOUND_SLACK: Self = 1e-5;
    const POWER_TOL: Self = 1e-5;
}
