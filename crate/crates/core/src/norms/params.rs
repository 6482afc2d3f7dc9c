//! Index bookkeeping for the `X_{s,b}` scale.

use crate::error::CoreError;
use crate::spectral::DispersionParams;
use crate::Result;

/// Sobolev/modulation indices and the small parameter `epsilon` they are
/// derived from.
///
/// Derived quantities: `b' = -1/2 + 2 epsilon`, `s1 = 1/2 + 2 epsilon`.
/// `d` is the high-frequency threshold used by the high-pass Strichartz
/// estimates and must satisfy `d >= 4a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormParams {
    pub s: f64,
    pub b: f64,
    pub epsilon: f64,
    pub s2: f64,
    pub d: f64,
}

impl NormParams {
    pub fn new(
        s: f64,
        b: f64,
        epsilon: f64,
        s2: f64,
        d: f64,
        params: &DispersionParams,
    ) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 0.25) {
            return Err(CoreError::invalid_params(
                "epsilon must lie in (0, 1/4) so that b' = -1/2 + 2 epsilon is negative",
            ));
        }
        if !(b > 0.0) {
            return Err(CoreError::invalid_params("b must be positive"));
        }
        if s2 < -0.5 + epsilon {
            return Err(CoreError::invalid_params(
                "s2 must satisfy s2 >= -1/2 + epsilon",
            ));
        }
        if d < 4.0 * params.a() {
            return Err(CoreError::invalid_params("d must satisfy d >= 4a"));
        }
        Ok(Self {
            s,
            b,
            epsilon,
            s2,
            d,
        })
    }

    /// Defaults for a given `epsilon`: `s = 1/4`, `b = 1/2 + epsilon`,
    /// `s2 = -1/2 + epsilon`, `d = 4a`.
    pub fn with_epsilon(epsilon: f64, params: &DispersionParams) -> Result<Self> {
        Self::new(
            0.25,
            0.5 + epsilon,
            epsilon,
            -0.5 + epsilon,
            4.0 * params.a(),
            params,
        )
    }

    /// `b' = -1/2 + 2 epsilon`.
    pub fn b_prime(&self) -> f64 {
        -0.5 + 2.0 * self.epsilon
    }

    /// `s1 = 1/2 + 2 epsilon`.
    pub fn s1(&self) -> f64 {
        0.5 + 2.0 * self.epsilon
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_indices() {
        let p = DispersionParams::new(1.0, 0.0).unwrap();
        let np = NormParams::with_epsilon(0.1, &p).unwrap();
        assert_eq!(np.b_prime(), -0.3);
        assert_eq!(np.s1(), 0.7);
        assert!(np.b_prime() < 0.0 && np.b > 0.0);
    }

    #[test]
    fn rejects_bad_indices() {
        let p = DispersionParams::new(1.0, 0.0).unwrap();
        assert!(NormParams::new(0.0, 0.6, 0.3, 0.0, 4.0, &p).is_err()); // epsilon too big
        assert!(NormParams::new(0.0, 0.6, 0.1, -0.9, 4.0, &p).is_err()); // s2 too small
        assert!(NormParams::new(0.0, 0.6, 0.1, 0.0, 1.0, &p).is_err()); // d < 4a
    }
}
