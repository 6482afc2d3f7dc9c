//! The reduced bilinear kernels: the weight left over after moving all
//! norms to `L^2` by duality.

use crate::norms::{bracket, NormParams};
use crate::spectral::DispersionParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    /// equal indices on both factors: weight `|xi| <xi>^s` over
    /// `<sigma>^{-b'} <xi_1>^s <sigma_1>^b <xi_2>^s <sigma_2>^b`
    K1,
    /// output index `s1`, factor index `s2`
    K2,
}

/// Evaluate the kernel at `(xi1, tau1, xi, tau)` with `xi2 = xi - xi1`,
/// `tau2 = tau - tau1` and `sigma = tau + phi(xi)`, `sigma_j = tau_j + phi(xi_j)`.
pub fn kernel_k(
    which: KernelKind,
    xi1: f64,
    tau1: f64,
    xi: f64,
    tau: f64,
    np: &NormParams,
    params: &DispersionParams,
) -> f64 {
    let xi2 = xi - xi1;
    let tau2 = tau - tau1;
    let sigma = tau + params.phi(xi);
    let sigma1 = tau1 + params.phi(xi1);
    let sigma2 = tau2 + params.phi(xi2);
    let modulation = bracket(sigma).powf(-np.b_prime())
        * bracket(sigma1).powf(np.b)
        * bracket(sigma2).powf(np.b);
    match which {
        KernelKind::K1 => {
            xi.abs() * bracket(xi).powf(np.s)
                / (modulation * bracket(xi1).powf(np.s) * bracket(xi2).powf(np.s))
        }
        KernelKind::K2 => {
            xi.abs() * bracket(xi).powf(np.s1())
                / (modulation * bracket(xi1).powf(np.s2) * bracket(xi2).powf(np.s2))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::resonance_gap;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn setup() -> (DispersionParams, NormParams) {
        let params = DispersionParams::new(1.0, 0.0).unwrap();
        let np = NormParams::with_epsilon(0.1, &params).unwrap();
        (params, np)
    }

    #[test]
    fn vanishes_only_at_zero_output_frequency() {
        let (params, np) = setup();
        assert_eq!(
            kernel_k(KernelKind::K1, 1.0, 0.3, 0.0, 0.7, &np, &params),
            0.0
        );
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let v = kernel_k(
                KernelKind::K1,
                rng.gen_range(-5.0..5.0),
                rng.gen_range(-50.0..50.0),
                rng.gen_range(0.01..5.0),
                rng.gen_range(-50.0..50.0),
                &np,
                &params,
            );
            assert!(v > 0.0);
        }
    }

    #[test]
    fn resonant_point_hand_value() {
        // xi1 = 1, tau1 = -phi(1), xi = 2, tau = -phi(2), s = 0:
        // sigma = sigma1 = 0 and sigma2 = -(phi(2) - 2 phi(1)), so the
        // kernel reduces to |xi| <sigma2>^{-b} with |sigma2| given by the
        // resonance gap.
        let params = DispersionParams::new(1.0, 0.0).unwrap();
        let np = NormParams::new(0.0, 0.6, 0.1, 0.0, 4.0, &params).unwrap();
        let got = kernel_k(
            KernelKind::K1,
            1.0,
            -params.phi(1.0),
            2.0,
            -params.phi(2.0),
            &np,
            &params,
        );
        let gap = resonance_gap(1.0, 1.0, &params);
        let expect = 2.0 * bracket(gap).powf(-0.6);
        approx::assert_relative_eq!(got, expect, max_relative = 1e-13);
        assert_eq!(gap, 30.0);
    }

    #[test]
    fn k2_reduces_to_k1_at_matching_indices() {
        // K2 == K1 when s1 == s and s2 == s; realize s = s1 by choosing
        // s = 1/2 + 2 eps.
        let params = DispersionParams::new(1.0, 0.0).unwrap();
        let eps = 0.1;
        let s = 0.5 + 2.0 * eps;
        let np = NormParams::new(s, 0.5 + eps, eps, s, 4.0, &params).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let xi1 = rng.gen_range(-8.0..8.0);
            let tau1 = rng.gen_range(-100.0..100.0);
            let xi = rng.gen_range(-8.0..8.0);
            let tau = rng.gen_range(-100.0..100.0);
            let k1 = kernel_k(KernelKind::K1, xi1, tau1, xi, tau, &np, &params);
            let k2 = kernel_k(KernelKind::K2, xi1, tau1, xi, tau, &np, &params);
            assert!((k1 - k2).abs() <= 1e-12 * k1.max(1e-300));
        }
    }
}
