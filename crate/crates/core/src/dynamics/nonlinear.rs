//! The quadratic flux `d/dx (u^2)`.

use crate::spectral::{spatial_derivative, SpectralField1D};
use num_complex::Complex64;

/// Spectral coefficients of `d/dx (u^2)` for a real field `u`: square in
/// physical space, differentiate spectrally. With `dealias` set, the 2/3
/// rule is applied (input modes with `|k| >= M/3` are zeroed before
/// squaring, and the same band is zeroed in the result), which removes all
/// aliased images of the quadratic interaction from the retained band.
pub fn nonlinearity(u: &SpectralField1D, dealias: bool) -> SpectralField1D {
    let grid = u.grid();
    let kc = (grid.points() / 3) as i64;
    let mut work = u.clone();
    if dealias {
        truncate(&mut work, kc);
    }
    let phys = work.to_physical();
    let squared: Vec<f64> = phys.iter().map(|v| v.re * v.re).collect();
    let mut sq = SpectralField1D::from_real_samples(grid, &squared).expect("length preserved");
    if dealias {
        truncate(&mut sq, kc);
    }
    spatial_derivative(&sq)
}

fn truncate(u: &mut SpectralField1D, kc: i64) {
    let grid = u.grid();
    for (i, c) in u.coeffs_mut().iter_mut().enumerate() {
        if grid.wavenumber(i).abs() >= kc {
            *c = Complex64::new(0.0, 0.0);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::GridSpec;
    use std::f64::consts::PI;

    /// Brute-force reference: circular convolution of the coefficient
    /// arrays with the lattice weight, then the spectral derivative, with
    /// the same truncation discipline.
    fn nonlinearity_naive(u: &SpectralField1D, dealias: bool) -> SpectralField1D {
        let grid = u.grid();
        let m = grid.points() as i64;
        let kc = m / 3;
        let mut input = u.clone();
        if dealias {
            truncate(&mut input, kc);
        }
        let conv_scale = grid.dxi() / (2.0 * PI).sqrt();
        let mut out = SpectralField1D::zero(grid);
        for i in 0..grid.points() {
            let k = grid.wavenumber(i);
            let mut acc = Complex64::new(0.0, 0.0);
            for i1 in 0..grid.points() {
                let k1 = grid.wavenumber(i1);
                // circular partner of k - k1 on the lattice
                let k2 = {
                    let mut r = k - k1;
                    while r < -m / 2 {
                        r += m;
                    }
                    while r >= m / 2 {
                        r -= m;
                    }
                    r
                };
                acc += input.coeff_at_wavenumber(k1) * input.coeff_at_wavenumber(k2);
            }
            out.coeffs_mut()[i] = acc * conv_scale;
        }
        // the pipeline keeps the unpaired Nyquist mode of real fields at zero
        let m_half = grid.points() / 2;
        out.coeffs_mut()[m_half] = Complex64::new(0.0, 0.0);
        if dealias {
            truncate(&mut out, kc);
        }
        spatial_derivative(&out)
    }

    #[test]
    fn zero_and_constant_give_zero() {
        let grid = GridSpec::new(4.0, 16).unwrap();
        let zero = SpectralField1D::zero(grid);
        assert_eq!(nonlinearity(&zero, true).max_abs_coeff(), 0.0);
        let constant = SpectralField1D::single_mode(grid, 0, Complex64::new(2.0, 0.0));
        assert!(nonlinearity(&constant, false).max_abs_coeff() < 1e-14);
    }

    #[test]
    fn single_cosine_matches_convolution_oracle() {
        let grid = GridSpec::new(PI, 16).unwrap();
        let u = SpectralField1D::cosine_mode(grid, 2, 0.7);
        for dealias in [false, true] {
            let fft_path = nonlinearity(&u, dealias);
            let oracle = nonlinearity_naive(&u, dealias);
            let scale = oracle.max_abs_coeff().max(1e-30);
            assert!(
                fft_path.max_coeff_distance(&oracle) <= 1e-12 * scale,
                "dealias={} distance={}",
                dealias,
                fft_path.max_coeff_distance(&oracle)
            );
        }
        // hand expansion: (a cos(2x))^2 = a^2/2 + a^2/2 cos(4x);
        // d/dx -> -2 a^2 sin(4x), so only the |k| = 4 pair survives.
        let out = nonlinearity(&u, false);
        let expect = SpectralField1D::cosine_mode(grid, 4, 0.7 * 0.7 / 2.0);
        let expect = spatial_derivative(&expect);
        assert!(out.max_coeff_distance(&expect) < 1e-12);
    }

    #[test]
    fn random_real_field_matches_oracle() {
        use rand::{Rng, SeedableRng};
        let grid = GridSpec::new(2.0, 16).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let samples: Vec<f64> = (0..16).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let u = SpectralField1D::from_real_samples(grid, &samples).unwrap();
        for dealias in [false, true] {
            let a = nonlinearity(&u, dealias);
            let b = nonlinearity_naive(&u, dealias);
            let scale = b.max_abs_coeff().max(1e-30);
            assert!(a.max_coeff_distance(&b) <= 1e-11 * scale);
        }
    }

    #[test]
    fn preserves_reality() {
        use rand::{Rng, SeedableRng};
        let grid = GridSpec::new(2.0, 32).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let samples: Vec<f64> = (0..32).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let u = SpectralField1D::from_real_samples(grid, &samples).unwrap();
        assert!(nonlinearity(&u, true).is_conjugate_symmetric());
    }
}
