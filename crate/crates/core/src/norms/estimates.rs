//! Catalog of linear, Strichartz and maximal estimates checked as
//! two-resolution bounded-ratio properties.
//!
//! Every entry is an inequality `lhs(u) <= C * rhs(u)` whose constant is not
//! explicit; the falsifiable desk-scale statement is that the measured ratio
//! over a family of smooth samples does not grow when the spatial grid is
//! refined. Families are tapered free waves of band-limited bump data, the
//! objects the estimates are sharp on.

use super::family::BumpFamily;
use super::lebesgue::{mixed_norm, Exponent, NormOrder};
use super::params::NormParams;
use super::ratio::{two_resolution_report, RatioReport};
use super::spacetime::{SpaceTimeSamples, SpaceTimeSpectrum};
use super::weights::sobolev_norm;
use crate::spectral::{
    duhamel_integral, fractional_derivative, project_high, propagate, window_taper,
    DispersionParams, GridSpec, SpectralField1D,
};
use crate::Result;

/// Inequalities covered by the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateId {
    /// `||eta(t) U(t) f||_{X_{s, 1/2+eps}} <= C ||f||_{H^s}`
    FreeWaveEnergy,
    /// `||eta(t/T) int_0^t U(t-tau) g dtau||_{X_{s,b}} <= C T^{1+b'-b} ||g||_{X_{s,b'}}`
    DuhamelSmoothing,
    /// `||P^D u||_{L^4_t L^2_x} <= C ||u||_{X_{0, b/2}}`
    HighPassL4tL2x,
    /// `||D_x^{3/4} P^D u||_{L^4_t L^inf_x} <= C ||u||_{X_{0,b}}`
    HighPassDerivL4tLinfx,
    /// `||u||_{L^12_{xt}} <= C ||u||_{X_{0,b}}`
    L12SpaceTime,
    /// `||u||_{L^4_{xt}} <= C ||u||_{X_{0, 3b/5}}`
    L4SpaceTime,
    /// `||P^D U(t) f||_{L^4_x L^inf_t} <= C ||f||_{H^{1/4}}`
    HighPassMaximalFree,
    /// `||P^D D_x^{3/8} u||_{L^4_{xt}} <= C ||u||_{X_{0,b}}`
    HighPassDerivL4xt,
    /// `||u||_{L^4_x L^inf_t} <= C ||u||_{X_{s,b}}`, `s >= 1/4`, `b > 1/2`
    MaximalXsb,
}

impl EstimateId {
    pub fn label(&self) -> &'static str {
        match self {
            EstimateId::FreeWaveEnergy => "free_wave_energy",
            EstimateId::DuhamelSmoothing => "duhamel_smoothing",
            EstimateId::HighPassL4tL2x => "highpass_l4t_l2x",
            EstimateId::HighPassDerivL4tLinfx => "highpass_deriv34_l4t_linfx",
            EstimateId::L12SpaceTime => "l12_spacetime",
            EstimateId::L4SpaceTime => "l4_spacetime",
            EstimateId::HighPassMaximalFree => "highpass_maximal_free",
            EstimateId::HighPassDerivL4xt => "highpass_deriv38_l4xt",
            EstimateId::MaximalXsb => "maximal_xsb",
        }
    }
}

/// All catalog entries in a fixed order.
pub fn estimate_catalog() -> Vec<EstimateId> {
    vec![
        EstimateId::FreeWaveEnergy,
        EstimateId::DuhamelSmoothing,
        EstimateId::HighPassL4tL2x,
        EstimateId::HighPassDerivL4tLinfx,
        EstimateId::L12SpaceTime,
        EstimateId::L4SpaceTime,
        EstimateId::HighPassMaximalFree,
        EstimateId::HighPassDerivL4xt,
        EstimateId::MaximalXsb,
    ]
}

/// Discretization used by the catalog families.
#[derive(Debug, Clone, Copy)]
pub struct EstimateProfile {
    pub half_length: f64,
    pub base_points: usize,
    pub k_max: f64,
    pub n_time: usize,
    pub t_len: f64,
}

impl Default for EstimateProfile {
    fn default() -> Self {
        Self {
            half_length: 4.0 * std::f64::consts::PI,
            base_points: 128,
            k_max: 5.0,
            n_time: 768,
            t_len: 0.12,
        }
    }
}

impl EstimateProfile {
    pub fn dt(&self) -> f64 {
        self.t_len / (self.n_time - 1) as f64
    }
}

struct SampleObjects {
    u0: SpectralField1D,
    /// `w(t_j) U(t_j) u0`
    tapered_states: Vec<SpectralField1D>,
    dt: f64,
    t_len: f64,
}

impl SampleObjects {
    fn build(u0: SpectralField1D, profile: &EstimateProfile, params: &DispersionParams) -> Self {
        let dt = profile.dt();
        let tapered_states = (0..profile.n_time)
            .map(|j| {
                let t = j as f64 * dt;
                let w = window_taper(t, profile.t_len);
                let mut s = propagate(&u0, t, params);
                for c in s.coeffs_mut() {
                    *c *= w;
                }
                s
            })
            .collect();
        Self {
            u0,
            tapered_states,
            dt,
            t_len: profile.t_len,
        }
    }

    fn spectrum(&self) -> Result<SpaceTimeSpectrum> {
        SpaceTimeSpectrum::from_tapered_states(&self.tapered_states, self.dt)
    }

    fn samples(&self) -> Result<SpaceTimeSamples> {
        SpaceTimeSamples::from_states(&self.tapered_states, self.dt)
    }

    fn mapped_samples(
        &self,
        f: impl Fn(&SpectralField1D) -> SpectralField1D,
    ) -> Result<SpaceTimeSamples> {
        let mapped: Vec<_> = self.tapered_states.iter().map(f).collect();
        SpaceTimeSamples::from_states(&mapped, self.dt)
    }
}

fn eval_pair(
    id: EstimateId,
    obj: &SampleObjects,
    np: &NormParams,
    params: &DispersionParams,
) -> Result<(f64, f64)> {
    let d = np.d;
    Ok(match id {
        EstimateId::FreeWaveEnergy => {
            let lhs = obj.spectrum()?.xsb_norm(np.s, np.b, params);
            (lhs, sobolev_norm(&obj.u0, np.s))
        }
        EstimateId::DuhamelSmoothing => {
            let g_spec = obj.spectrum()?;
            let duh = duhamel_integral(&obj.tapered_states, obj.dt, params)?;
            let wrapped: Vec<_> = duh
                .iter()
                .enumerate()
                .map(|(j, s)| {
                    let w = window_taper(j as f64 * obj.dt, obj.t_len);
                    let mut s = s.clone();
                    for c in s.coeffs_mut() {
                        *c *= w;
                    }
                    s
                })
                .collect();
            let lhs = SpaceTimeSpectrum::from_tapered_states(&wrapped, obj.dt)?
                .xsb_norm(np.s, np.b, params);
            let gain = obj.t_len.powf(1.0 + np.b_prime() - np.b);
            (lhs, gain * g_spec.xsb_norm(np.s, np.b_prime(), params))
        }
        EstimateId::HighPassL4tL2x => {
            let lhs_samples = obj.mapped_samples(|s| project_high(s, d))?;
            let lhs = mixed_norm(
                &lhs_samples,
                Exponent::Two,
                Exponent::Four,
                NormOrder::TimeOuter,
            );
            (lhs, obj.spectrum()?.xsb_norm(0.0, np.b / 2.0, params))
        }
        EstimateId::HighPassDerivL4tLinfx => {
            let lhs_samples =
                obj.mapped_samples(|s| fractional_derivative(&project_high(s, d), 0.75))?;
            let lhs = mixed_norm(
                &lhs_samples,
                Exponent::Infinity,
                Exponent::Four,
                NormOrder::TimeOuter,
            );
            (lhs, obj.spectrum()?.xsb_norm(0.0, np.b, params))
        }
        EstimateId::L12SpaceTime => {
            let lhs = mixed_norm(
                &obj.samples()?,
                Exponent::Twelve,
                Exponent::Twelve,
                NormOrder::SpaceOuter,
            );
            (lhs, obj.spectrum()?.xsb_norm(0.0, np.b, params))
        }
        EstimateId::L4SpaceTime => {
            let lhs = mixed_norm(
                &obj.samples()?,
                Exponent::Four,
                Exponent::Four,
                NormOrder::SpaceOuter,
            );
            (lhs, obj.spectrum()?.xsb_norm(0.0, 3.0 * np.b / 5.0, params))
        }
        EstimateId::HighPassMaximalFree => {
            // free evolution without taper; no modulation norm involved
            let free: Vec<_> = (0..obj.tapered_states.len())
                .map(|j| project_high(&propagate(&obj.u0, j as f64 * obj.dt, params), d))
                .collect();
            let samples = SpaceTimeSamples::from_states(&free, obj.dt)?;
            let lhs = mixed_norm(
                &samples,
                Exponent::Four,
                Exponent::Infinity,
                NormOrder::SpaceOuter,
            );
            (lhs, sobolev_norm(&obj.u0, 0.25))
        }
        EstimateId::HighPassDerivL4xt => {
            let lhs_samples =
                obj.mapped_samples(|s| fractional_derivative(&project_high(s, d), 0.375))?;
            let lhs = mixed_norm(
                &lhs_samples,
                Exponent::Four,
                Exponent::Four,
                NormOrder::SpaceOuter,
            );
            (lhs, obj.spectrum()?.xsb_norm(0.0, np.b, params))
        }
        EstimateId::MaximalXsb => {
            let lhs = mixed_norm(
                &obj.samples()?,
                Exponent::Four,
                Exponent::Infinity,
                NormOrder::SpaceOuter,
            );
            (lhs, obj.spectrum()?.xsb_norm(np.s.max(0.25), np.b, params))
        }
    })
}

/// Evaluate one catalog inequality over `n_samples` family members at the
/// base and doubled spatial resolution.
pub fn run_estimate_check(
    id: EstimateId,
    n_samples: usize,
    profile: &EstimateProfile,
    np: &NormParams,
    params: &DispersionParams,
    seed: u64,
) -> Result<RatioReport> {
    let family = BumpFamily {
        half_length: profile.half_length,
        k_max: profile.k_max,
        seed,
    };
    let base = GridSpec::new(profile.half_length, profile.base_points)?;
    let fine = base.refined()?;
    let mut failure: Option<crate::CoreError> = None;
    let report = two_resolution_report(
        id.label(),
        n_samples,
        profile.base_points,
        |idx, use_fine| {
            if failure.is_some() {
                return None;
            }
            let grid = if use_fine { fine } else { base };
            let u0 = match family.sample(idx).realize(grid, profile.k_max) {
                Ok(u) => u,
                Err(e) => {
                    failure = Some(e);
                    return None;
                }
            };
            if u0.l2_norm() == 0.0 {
                return None;
            }
            let obj = SampleObjects::build(u0, profile, params);
            match eval_pair(id, &obj, np, params) {
                Ok(pair) => Some(pair),
                Err(e) => {
                    failure = Some(e);
                    None
                }
            }
        },
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_wave_energy_ratio_is_stable() {
        let params = DispersionParams::new(1.0, 0.0).unwrap();
        let np = NormParams::with_epsilon(0.1, &params).unwrap();
        let profile = EstimateProfile {
            base_points: 64,
            n_time: 256,
            ..EstimateProfile::default()
        };
        let report =
            run_estimate_check(EstimateId::FreeWaveEnergy, 6, &profile, &np, &params, 11).unwrap();
        assert_eq!(report.skipped, 0);
        assert!(report.max_ratio() > 0.0);
        assert!(
            report.resolution_slope().abs() <= 0.1,
            "slope {}",
            report.resolution_slope()
        );
    }
}
