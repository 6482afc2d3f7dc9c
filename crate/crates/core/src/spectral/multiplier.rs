//! Fourier multipliers: the exact linear propagator, low/high frequency
//! projections and derivative weights.

use super::field::SpectralField1D;
use super::params::DispersionParams;
use num_complex::Complex64;

/// Exact linear flow `U(t)`: multiplies each coefficient by
/// `exp(-i t phi(xi_k))`.
///
/// The multiplier is evaluated once per conjugate pair and applied as
/// `(value, conj(value))`, which is the correct multiplier for the mirrored
/// mode (`phi` is odd) and keeps conjugate symmetry of real fields exact.
pub fn propagate(u: &SpectralField1D, t: f64, params: &DispersionParams) -> SpectralField1D {
    let grid = u.grid();
    let mut out = u.clone();
    let coeffs = out.coeffs_mut();
    let m = grid.points();
    for i in 0..=m / 2 {
        let phase = -t * params.phi(grid.xi(i));
        let mult = Complex64::new(phase.cos(), phase.sin());
        coeffs[i] *= mult;
        if i != 0 && i != m / 2 {
            coeffs[m - i] *= mult.conj();
        }
    }
    out
}

/// Keep modes with `|xi_k| <= cutoff`, zero the rest. Boundary modes with
/// `|xi_k| == cutoff` belong to the low piece, so that together with
/// [`project_high`] this is an exact partition of the identity.
pub fn project_low(u: &SpectralField1D, cutoff: f64) -> SpectralField1D {
    let grid = u.grid();
    let mut out = u.clone();
    for (i, c) in out.coeffs_mut().iter_mut().enumerate() {
        if grid.xi(i).abs() > cutoff {
            *c = Complex64::new(0.0, 0.0);
        }
    }
    out
}

/// Keep modes with `|xi_k| > cutoff`, zero the rest.
pub fn project_high(u: &SpectralField1D, cutoff: f64) -> SpectralField1D {
    let grid = u.grid();
    let mut out = u.clone();
    for (i, c) in out.coeffs_mut().iter_mut().enumerate() {
        if grid.xi(i).abs() <= cutoff {
            *c = Complex64::new(0.0, 0.0);
        }
    }
    out
}

/// `d/dx`: multiply by `i xi_k`.
pub fn spatial_derivative(u: &SpectralField1D) -> SpectralField1D {
    let grid = u.grid();
    let mut out = u.clone();
    for (i, c) in out.coeffs_mut().iter_mut().enumerate() {
        *c *= Complex64::new(0.0, grid.xi(i));
    }
    out
}

/// `|D_x|^s`: multiply by `|xi_k|^s`. The zero mode is annihilated for
/// `s > 0` and left untouched for `s == 0`.
pub fn fractional_derivative(u: &SpectralField1D, s: f64) -> SpectralField1D {
    let grid = u.grid();
    let mut out = u.clone();
    for (i, c) in out.coeffs_mut().iter_mut().enumerate() {
        let xi = grid.xi(i).abs();
        if xi == 0.0 {
            if s != 0.0 {
                *c = Complex64::new(0.0, 0.0);
            }
        } else {
            *c *= xi.powf(s);
        }
    }
    out
}
