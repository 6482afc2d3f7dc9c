//! Core spectral machinery: dispersion relation, periodic grid, discrete
//! Fourier transform pair, smooth cutoff, Fourier multipliers and the exact
//! linear propagator.

mod cutoff;
mod duhamel;
mod field;
mod grid;
mod multiplier;
mod params;
mod transform;

pub use cutoff::{eta, window_taper, CutoffEta};
pub use duhamel::duhamel_integral;
pub use field::SpectralField1D;
pub use grid::GridSpec;
pub use multiplier::{
    fractional_derivative, project_high, project_low, propagate, spatial_derivative,
};
pub use params::DispersionParams;
pub use transform::{fft_forward, fft_inverse};
