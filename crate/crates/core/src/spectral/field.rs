//! A function on the periodic grid stored as complex Fourier coefficients.

use super::grid::GridSpec;
use super::transform::{fft_forward, fft_inverse};
use crate::error::CoreError;
use crate::Result;
use num_complex::Complex64;
use std::f64::consts::PI;

/// Spatial field stored spectrally: `coeffs[i]` is the discrete analogue of
/// `(1/sqrt(2 pi)) * integral e^{-i x xi_k} u(x) dx` at `xi_k`, `k` in FFT
/// order (see [`GridSpec`]).
///
/// The normalization is fixed so that Plancherel is exact on the lattice:
/// `sum_j |u(x_j)|^2 dx == sum_k |coeffs[k]|^2 dxi`.
///
/// A field representing real-valued `u` satisfies `coeffs[-k] == conj(coeffs[k])`
/// for every paired mode; the unpaired Nyquist mode is kept at zero for such
/// fields.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField1D {
    grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl SpectralField1D {
    pub fn zero(grid: GridSpec) -> Self {
        Self {
            grid,
            coeffs: vec![Complex64::new(0.0, 0.0); grid.points()],
        }
    }

    pub fn from_coeffs(grid: GridSpec, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.points() {
            return Err(CoreError::invalid_input(format!(
                "coefficient count {} does not match grid size {}",
                coeffs.len(),
                grid.points()
            )));
        }
        Ok(Self { grid, coeffs })
    }

    /// Single mode of amplitude `amp` at wavenumber `k`.
    pub fn single_mode(grid: GridSpec, k: i64, amp: Complex64) -> Self {
        let mut f = Self::zero(grid);
        f.coeffs[grid.index_of(k)] = amp;
        f
    }

    /// Real single-cosine `a*cos(xi_k x)` (conjugate-symmetric pair).
    pub fn cosine_mode(grid: GridSpec, k: i64, a: f64) -> Self {
        let mut f = Self::zero(grid);
        // cos = (e^{i xi x} + e^{-i xi x})/2; physical amplitude `a` maps to
        // coefficient a/2 / (dxi/sqrt(2 pi)) on each of the paired modes.
        let scale = 0.5 * a * (2.0 * PI).sqrt() / grid.dxi();
        f.coeffs[grid.index_of(k)] = Complex64::new(scale, 0.0);
        f.coeffs[grid.index_of(-k)] += Complex64::new(scale, 0.0);
        f
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    pub fn coeff_at_wavenumber(&self, k: i64) -> Complex64 {
        self.coeffs[self.grid.index_of(k)]
    }

    /// Physical samples `u(x_j)` on the grid.
    pub fn to_physical(&self) -> Vec<Complex64> {
        let grid = self.grid;
        let scale = grid.dxi() / (2.0 * PI).sqrt();
        let mut buf: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                // x_j = -L + j dx introduces a (-1)^k phase per mode.
                let sign = if grid.wavenumber(i) & 1 == 0 {
                    1.0
                } else {
                    -1.0
                };
                c * (sign * scale)
            })
            .collect();
        fft_inverse(&mut buf);
        buf
    }

    /// Build a field from complex samples on the grid.
    pub fn from_physical(grid: GridSpec, samples: &[Complex64]) -> Result<Self> {
        if samples.len() != grid.points() {
            return Err(CoreError::invalid_input(format!(
                "sample count {} does not match grid size {}",
                samples.len(),
                grid.points()
            )));
        }
        let mut buf = samples.to_vec();
        fft_forward(&mut buf);
        let scale = grid.dx() / (2.0 * PI).sqrt();
        for (i, c) in buf.iter_mut().enumerate() {
            let sign = if grid.wavenumber(i) & 1 == 0 {
                1.0
            } else {
                -1.0
            };
            *c *= sign * scale;
        }
        Ok(Self { grid, coeffs: buf })
    }

    pub fn from_real_samples(grid: GridSpec, samples: &[f64]) -> Result<Self> {
        let complex: Vec<Complex64> = samples.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let mut f = Self::from_physical(grid, &complex)?;
        f.symmetrize_real();
        Ok(f)
    }

    /// `l^2` norm of the coefficients with the frequency-lattice weight;
    /// equals the grid `L^2` norm of the samples by Plancherel.
    pub fn l2_norm(&self) -> f64 {
        (self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>() * self.grid.dxi()).sqrt()
    }

    /// Enforce exact conjugate symmetry (and a zero Nyquist mode); used by
    /// constructors of real data to remove round-off asymmetry.
    pub fn symmetrize_real(&mut self) {
        let m = self.grid.points();
        self.coeffs[0] = Complex64::new(self.coeffs[0].re, 0.0);
        self.coeffs[m / 2] = Complex64::new(0.0, 0.0);
        for i in 1..m / 2 {
            let j = m - i;
            let avg = 0.5 * (self.coeffs[i] + self.coeffs[j].conj());
            self.coeffs[i] = avg;
            self.coeffs[j] = avg.conj();
        }
    }

    /// True when `coeffs[-k] == conj(coeffs[k])` exactly for all paired `k`
    /// and the Nyquist mode is zero.
    pub fn is_conjugate_symmetric(&self) -> bool {
        let m = self.grid.points();
        if self.coeffs[0].im != 0.0 || self.coeffs[m / 2] != Complex64::new(0.0, 0.0) {
            return false;
        }
        (1..m / 2).all(|i| self.coeffs[i] == self.coeffs[m - i].conj())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Coefficient-wise `max |self - other|`.
    pub fn max_coeff_distance(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_field(grid: GridSpec, seed: u64) -> SpectralField1D {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs = (0..grid.points())
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        SpectralField1D::from_coeffs(grid, coeffs).unwrap()
    }

    #[test]
    fn constant_samples_hit_zero_mode_only() {
        let grid = GridSpec::new(4.0, 16).unwrap();
        let samples = vec![Complex64::new(3.0, 0.0); 16];
        let f = SpectralField1D::from_physical(grid, &samples).unwrap();
        for i in 1..16 {
            assert!(f.coeffs()[i].norm() < 1e-13, "mode {} leaked", i);
        }
        assert!(f.coeffs()[0].norm() > 1.0);
    }

    #[test]
    fn round_trip_identity() {
        let grid = GridSpec::new(10.0, 64).unwrap();
        let f = random_field(grid, 7);
        let back = SpectralField1D::from_physical(grid, &f.to_physical()).unwrap();
        let scale = f.max_abs_coeff();
        assert!(f.max_coeff_distance(&back) <= 1e-12 * scale);
    }

    #[test]
    fn plancherel_direct_sum() {
        let grid = GridSpec::new(3.0, 16).unwrap();
        let f = random_field(grid, 11);
        let phys = f.to_physical();
        let physical_l2 = (phys.iter().map(|v| v.norm_sqr()).sum::<f64>() * grid.dx()).sqrt();
        approx::assert_relative_eq!(physical_l2, f.l2_norm(), max_relative = 1e-12);
    }

    #[test]
    fn length_mismatch_rejected() {
        let grid = GridSpec::new(1.0, 16).unwrap();
        assert!(SpectralField1D::from_physical(grid, &[Complex64::new(0.0, 0.0); 8]).is_err());
    }

    #[test]
    fn real_samples_are_symmetric() {
        let grid = GridSpec::new(5.0, 32).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let samples: Vec<f64> = (0..32).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let f = SpectralField1D::from_real_samples(grid, &samples).unwrap();
        assert!(f.is_conjugate_symmetric());
        // and the samples come back (Nyquist content of smooth-ish random
        // noise is tiny but nonzero, so compare after symmetrization).
        let back = f.to_physical();
        for (s, b) in samples.iter().zip(&back) {
            assert!(b.im.abs() < 1e-12);
            assert!((s - b.re).abs() < 0.5); // Nyquist removal only
        }
    }

    #[test]
    fn cosine_mode_matches_samples() {
        let grid = GridSpec::new(PI, 32).unwrap();
        let f = SpectralField1D::cosine_mode(grid, 3, 0.8);
        assert!(f.is_conjugate_symmetric());
        let phys = f.to_physical();
        for j in 0..32 {
            let expect = 0.8 * (3.0 * grid.x(j)).cos();
            assert!((phys[j].re - expect).abs() < 1e-12);
            assert!(phys[j].im.abs() < 1e-13);
        }
    }
}
