//! Pseudospectral laboratory for the Kawahara equation
//!
//! ```text
//! u_t + alpha * u_xxxxx + beta * u_xxx + (u^2)_x = 0,   x in [-L, L) periodic
//! ```
//!
//! The crate has five layers:
//!
//! * [`spectral`] — grids, discrete Fourier transforms, the dispersion
//!   relation `phi(xi) = alpha xi^5 - beta xi^3`, the exact linear
//!   propagator `U(t)`, frequency projections and the smooth cutoff `eta`.
//! * [`norms`] — Sobolev, Bourgain `X_{s,b}` and mixed space-time Lebesgue
//!   norms on discrete lattices, plus the two-resolution ratio machinery
//!   used to stress-test a catalog of linear/Strichartz/maximal estimates.
//! * [`dynamics`] — the nonlinear solver (integrating-factor Strang
//!   splitting), the frequency-truncated flow, and the Picard/Duhamel
//!   fixed-point map used as a contraction oracle.
//! * [`bilinear`] — numerical verification of the bilinear estimates for
//!   `d/dx(u1 u2)` in `X_{s,b}` scales, and the indicator-rectangle
//!   counterexample family that exhibits blow-up below the critical index.
//! * [`convergence`] — rough-data generation, truncation convergence,
//!   pointwise (exceedance/Chebyshev) and uniform convergence experiments.

// negated float comparisons like `!(x > 0.0)` are NaN guards; index-based
// loops over mode arrays mirror the lattice arithmetic
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::needless_range_loop)]

pub mod bilinear;
pub mod convergence;
pub mod csv;
pub mod dynamics;
pub mod error;
pub mod fitting;
pub mod norms;
pub mod spectral;

pub use error::CoreError;
pub use spectral::{DispersionParams, GridSpec, SpectralField1D};

// the coefficient type appears throughout the public API
pub use num_complex;

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
