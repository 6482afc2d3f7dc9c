//! `X_{s,b}` norms of the derivative of a product on the global lattice.

use crate::norms::SpaceTimeSpectrum;
use crate::spectral::DispersionParams;
use crate::Result;

/// `||d/dx (u v)||` in the `X_{s_out, b_out}` lattice norm: the product is
/// formed in physical space-time, the derivative and the weights are applied
/// spectrally.
pub fn bilinear_lhs(
    u: &SpaceTimeSpectrum,
    v: &SpaceTimeSpectrum,
    s_out: f64,
    b_out: f64,
    params: &DispersionParams,
) -> Result<f64> {
    let product = u.product_spectrum(v)?;
    Ok(product.weighted_norm(s_out, b_out, 1.0, params))
}
