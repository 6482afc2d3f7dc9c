//! Weight functions and the resonance identity.

use crate::spectral::{DispersionParams, SpectralField1D};

/// Japanese bracket `<x> = (1 + x^2)^(1/2)`. Exponent fits near `xi = 0`
/// are sensitive to this exact form; do not replace by `max(1, |x|)`.
pub fn bracket(x: f64) -> f64 {
    (1.0 + x * x).sqrt()
}

/// `H^s` norm: weighted lattice `l^2` of the coefficients,
/// `(sum_k <xi_k>^(2s) |c_k|^2 dxi)^(1/2)`.
pub fn sobolev_norm(u: &SpectralField1D, s: f64) -> f64 {
    let grid = u.grid();
    let sum: f64 = u
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| bracket(grid.xi(i)).powf(2.0 * s) * c.norm_sqr())
        .sum();
    (sum * grid.dxi()).sqrt()
}

/// Resonance gap of the frequency triple `xi = xi1 + xi2`:
///
/// ```text
/// 5 |alpha| |xi| |xi1| |xi2| |xi^2 + xi1^2 - xi*xi1 - 3 beta / (5 alpha)|
/// ```
///
/// which equals `|phi(xi) - phi(xi1) - phi(xi2)|` identically.
pub fn resonance_gap(xi1: f64, xi2: f64, params: &DispersionParams) -> f64 {
    let xi = xi1 + xi2;
    5.0 * params.alpha().abs()
        * xi.abs()
        * xi1.abs()
        * xi2.abs()
        * (xi * xi + xi1 * xi1 - xi * xi1 - 3.0 * params.beta() / (5.0 * params.alpha())).abs()
}
