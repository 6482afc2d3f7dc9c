//! Maximal-function estimate for the free evolution:
//! `||U(t) u0||_{L^4_x L^inf_t} <= C ||u0||_{H^s}` for `s >= 1/4`,
//! checked as a two-resolution ratio over rough data.

use super::rough::{rough_data, RoughDataSpec, RoughProfile};
use crate::error::CoreError;
use crate::norms::{
    mixed_norm, sobolev_norm, two_resolution_report, Exponent, NormOrder, NormParams, RatioReport,
    SpaceTimeSamples,
};
use crate::spectral::{propagate, DispersionParams, GridSpec};
use crate::Result;

/// Window over which the sup in time is sampled.
#[derive(Debug, Clone, Copy)]
pub struct MaximalProfile {
    pub half_length: f64,
    pub base_points: usize,
    pub k_max: f64,
    pub n_time: usize,
    pub t_len: f64,
}

impl Default for MaximalProfile {
    fn default() -> Self {
        Self {
            half_length: 4.0 * std::f64::consts::PI,
            base_points: 128,
            k_max: 5.0,
            n_time: 512,
            t_len: 0.1,
        }
    }
}

/// Ratio `||U(t) u0||_{L^4_x L^inf_t} / ||u0||_{H^s}` over a family of rough
/// samples at `s = np.s` (requires `s >= 1/4`), at two resolutions.
pub fn maximal_check(
    n_samples: usize,
    profile: &MaximalProfile,
    np: &NormParams,
    params: &DispersionParams,
    seed: u64,
) -> Result<RatioReport> {
    if np.s < 0.25 {
        return Err(CoreError::invalid_params(
            "the maximal estimate needs s >= 1/4",
        ));
    }
    let base = GridSpec::new(profile.half_length, profile.base_points)?;
    let fine = base.refined()?;
    let dt = profile.t_len / (profile.n_time - 1) as f64;
    let mut failure: Option<crate::CoreError> = None;
    let report = two_resolution_report(
        "maximal_free_rough",
        n_samples,
        profile.base_points,
        |idx, use_fine| {
            if failure.is_some() {
                return None;
            }
            let grid = if use_fine { fine } else { base };
            let spec = RoughDataSpec {
                s: np.s,
                margin: 0.05,
                seed: seed ^ (idx as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15),
                profile: RoughProfile::PowerLawRandomPhase,
                k_max: profile.k_max,
                amplitude: 1.0,
            };
            let u0 = match rough_data(&spec, grid) {
                Ok(u) => u,
                Err(e) => {
                    failure = Some(e);
                    return None;
                }
            };
            let rhs = sobolev_norm(&u0, np.s);
            if rhs == 0.0 {
                return None;
            }
            let states: Vec<_> = (0..profile.n_time)
                .map(|j| propagate(&u0, j as f64 * dt, params))
                .collect();
            let samples = match SpaceTimeSamples::from_states(&states, dt) {
                Ok(s) => s,
                Err(e) => {
                    failure = Some(e);
                    return None;
                }
            };
            let lhs = mixed_norm(
                &samples,
                Exponent::Four,
                Exponent::Infinity,
                NormOrder::SpaceOuter,
            );
            Some((lhs, rhs))
        },
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}
