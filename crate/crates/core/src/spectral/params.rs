//! Physical coefficients of the fifth-order dispersion and the derived
//! low/high frequency threshold `a`.

use crate::error::CoreError;
use crate::Result;

/// Coefficients of the linear part `alpha * d^5/dx^5 + beta * d^3/dx^3`.
///
/// `a = max(1, sqrt(2*|3*beta/(5*alpha)|))` separates the frequency range
/// where the two dispersive terms can cancel from the genuinely fifth-order
/// regime; every region decomposition below works relative to it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionParams {
    alpha: f64,
    beta: f64,
    a: f64,
}

impl DispersionParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if alpha == 0.0 || !alpha.is_finite() || !beta.is_finite() {
            return Err(CoreError::invalid_params(
                "alpha must be nonzero and both coefficients finite",
            ));
        }
        let a = Self::threshold_a(alpha, beta);
        Ok(Self { alpha, beta, a })
    }

    /// `max(1, (2*|3*beta/(5*alpha)|)^(1/2))`.
    fn threshold_a(alpha: f64, beta: f64) -> f64 {
        (2.0 * (3.0 * beta / (5.0 * alpha)).abs()).sqrt().max(1.0)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The derived threshold `a >= 1`.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Dispersion relation `phi(xi) = alpha * xi^5 - beta * xi^3`.
    ///
    /// Written so that `phi(-xi) == -phi(xi)` holds exactly in floating
    /// point (both monomials are odd and negation is exact).
    pub fn phi(&self, xi: f64) -> f64 {
        let xi3 = xi * xi * xi;
        let xi5 = xi3 * xi * xi;
        self.alpha * xi5 - self.beta * xi3
    }
}
