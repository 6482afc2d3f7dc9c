//! Rough data at a prescribed Sobolev regularity.

use crate::error::CoreError;
use crate::spectral::{GridSpec, SpectralField1D};
use crate::Result;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoughProfile {
    /// power-law amplitudes with i.i.d. uniform phases
    PowerLawRandomPhase,
    /// all phases zero: even, real data
    DeterministicPowerLaw,
}

/// Recipe for data that lies in `H^s` but (demonstrably) in no smoother
/// space: coefficients `amplitude * <xi_k>^{-s - 1/2 - margin} e^{i theta_k}`
/// up to the cutoff `k_max`, conjugate-symmetrized.
#[derive(Debug, Clone, Copy)]
pub struct RoughDataSpec {
    pub s: f64,
    /// the roughness margin `delta > 0`
    pub margin: f64,
    pub seed: u64,
    pub profile: RoughProfile,
    /// frequency cutoff; coefficients vanish for `|xi| > k_max`
    pub k_max: f64,
    pub amplitude: f64,
}

impl RoughDataSpec {
    pub fn new(s: f64, margin: f64, seed: u64, k_max: f64) -> Result<Self> {
        if !(margin > 0.0) || !(k_max > 0.0) {
            return Err(CoreError::invalid_params(
                "margin and k_max must be positive",
            ));
        }
        Ok(Self {
            s,
            margin,
            seed,
            profile: RoughProfile::PowerLawRandomPhase,
            k_max,
            amplitude: 1.0,
        })
    }
}

/// Generate the data on `grid`. Phases are drawn in wavenumber order from a
/// seeded stream, so the result is bit-identical across runs and the shared
/// modes agree across resolutions of the same domain.
pub fn rough_data(spec: &RoughDataSpec, grid: GridSpec) -> Result<SpectralField1D> {
    if spec.k_max > grid.max_xi() {
        return Err(CoreError::invalid_params(format!(
            "k_max = {} exceeds the grid's largest frequency {}",
            spec.k_max,
            grid.max_xi()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let decay = -spec.s - 0.5 - spec.margin;
    let mut u = SpectralField1D::zero(grid);
    // zero mode: real, weight <0>^decay = 1
    u.coeffs_mut()[0] = Complex64::new(spec.amplitude, 0.0);
    let m = grid.points();
    for k in 1..(m / 2) as i64 {
        let xi = k as f64 * grid.dxi();
        if xi > spec.k_max {
            break;
        }
        let theta = match spec.profile {
            RoughProfile::PowerLawRandomPhase => rng.gen_range(0.0..std::f64::consts::TAU),
            RoughProfile::DeterministicPowerLaw => 0.0,
        };
        let amp = spec.amplitude * (1.0 + xi * xi).powf(0.5 * decay);
        let c = Complex64::new(amp * theta.cos(), amp * theta.sin());
        u.coeffs_mut()[grid.index_of(k)] = c;
        u.coeffs_mut()[grid.index_of(-k)] = c.conj();
    }
    Ok(u)
}
