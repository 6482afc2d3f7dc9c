//! Deterministic families of smooth test data for the ratio checks.

use crate::spectral::{project_low, GridSpec, SpectralField1D};
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A sum of a few Gaussian-enveloped cosines; a fixed continuum object that
/// can be discretized on any grid over the same domain.
#[derive(Debug, Clone)]
pub struct BumpData {
    components: Vec<BumpComponent>,
}

#[derive(Debug, Clone, Copy)]
struct BumpComponent {
    amplitude: f64,
    center: f64,
    width: f64,
    modulation: f64,
    phase: f64,
}

impl BumpData {
    pub fn eval(&self, x: f64) -> f64 {
        self.components
            .iter()
            .map(|c| {
                let z = (x - c.center) / c.width;
                c.amplitude * (-z * z).exp() * (c.modulation * x + c.phase).cos()
            })
            .sum()
    }

    /// Discretize on `grid` and band-limit to `|xi| <= k_max` so the object
    /// is represented consistently across resolutions.
    pub fn realize(&self, grid: GridSpec, k_max: f64) -> Result<SpectralField1D> {
        let samples: Vec<f64> = (0..grid.points()).map(|j| self.eval(grid.x(j))).collect();
        let field = SpectralField1D::from_real_samples(grid, &samples)?;
        Ok(project_low(&field, k_max))
    }
}

/// Seeded generator of [`BumpData`]; sample `idx` is reproducible
/// independent of how many other samples are drawn.
#[derive(Debug, Clone, Copy)]
pub struct BumpFamily {
    pub half_length: f64,
    pub k_max: f64,
    pub seed: u64,
}

impl BumpFamily {
    pub fn sample(&self, idx: usize) -> BumpData {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(idx as u64 + 1);
        let n = rng.gen_range(2..=4);
        let l = self.half_length;
        let components = (0..n)
            .map(|_| BumpComponent {
                amplitude: rng.gen_range(0.3..1.0),
                center: rng.gen_range(-l / 3.0..l / 3.0),
                width: rng.gen_range(l / 16.0..l / 6.0),
                modulation: rng.gen_range(0.0..0.7 * self.k_max),
                phase: rng.gen_range(0.0..std::f64::consts::TAU),
            })
            .collect();
        BumpData { components }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_band_limited() {
        let fam = BumpFamily {
            half_length: 4.0 * std::f64::consts::PI,
            k_max: 6.0,
            seed: 42,
        };
        let grid = GridSpec::new(fam.half_length, 128).unwrap();
        let a = fam.sample(3).realize(grid, fam.k_max).unwrap();
        let b = fam.sample(3).realize(grid, fam.k_max).unwrap();
        assert_eq!(a, b);
        for i in 0..grid.points() {
            if grid.xi(i).abs() > fam.k_max {
                assert_eq!(a.coeffs()[i].norm(), 0.0);
            }
        }
        assert!(a.l2_norm() > 0.0);
    }

    #[test]
    fn consistent_across_resolutions() {
        let fam = BumpFamily {
            half_length: 4.0 * std::f64::consts::PI,
            k_max: 6.0,
            seed: 7,
        };
        let coarse = GridSpec::new(fam.half_length, 128).unwrap();
        let fine = GridSpec::new(fam.half_length, 256).unwrap();
        let data = fam.sample(0);
        let a = data.realize(coarse, fam.k_max).unwrap();
        let b = data.realize(fine, fam.k_max).unwrap();
        // shared modes carry (nearly) the same coefficients
        for k in -24..24_i64 {
            let ca = a.coeff_at_wavenumber(k);
            let cb = b.coeff_at_wavenumber(k);
            assert!((ca - cb).norm() < 1e-6 * (1.0 + ca.norm()), "mode {}", k);
        }
    }
}
