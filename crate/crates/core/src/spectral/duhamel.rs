//! Discrete Duhamel integral of the linear flow.

use super::field::SpectralField1D;
use super::params::DispersionParams;
use crate::error::CoreError;
use crate::Result;
use num_complex::Complex64;

/// Evaluate `w(t_m) = integral_0^{t_m} U(t_m - tau) g(tau) dtau` on a uniform
/// time grid `t_j = j * dt`, by composite trapezoid over the stored samples.
///
/// Works per mode in the interaction picture: with `h_j = U(-t_j) g(t_j)` the
/// prefix trapezoid sums `S_m` accumulate in O(1) per step and
/// `w(t_m) = U(t_m) S_m`.
pub fn duhamel_integral(
    forcing: &[SpectralField1D],
    dt: f64,
    params: &DispersionParams,
) -> Result<Vec<SpectralField1D>> {
    let first = forcing
        .first()
        .ok_or_else(|| CoreError::invalid_input("duhamel integral needs at least one sample"))?;
    let grid = first.grid();
    if forcing.iter().any(|f| f.grid() != grid) {
        return Err(CoreError::LatticeMismatch(
            "duhamel forcing samples on different grids".into(),
        ));
    }
    let m = grid.points();
    let n_t = forcing.len();

    // Interaction-picture samples h_j and their running trapezoid prefix.
    let mut prefix = vec![Complex64::new(0.0, 0.0); m];
    let mut h_prev = vec![Complex64::new(0.0, 0.0); m];
    let mut out = Vec::with_capacity(n_t);

    for j in 0..n_t {
        let t = j as f64 * dt;
        let mut h = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..=m / 2 {
            let phase = t * params.phi(grid.xi(i));
            let mult = Complex64::new(phase.cos(), phase.sin());
            h[i] = forcing[j].coeffs()[i] * mult;
            if i != 0 && i != m / 2 {
                h[m - i] = forcing[j].coeffs()[m - i] * mult.conj();
            }
        }
        if j > 0 {
            for i in 0..m {
                prefix[i] += 0.5 * dt * (h_prev[i] + h[i]);
            }
        }
        // w(t_j) = U(t_j) prefix
        let mut w = vec![Complex64::new(0.0, 0.0); m];
        for i in 0..=m / 2 {
            let phase = -t * params.phi(grid.xi(i));
            let mult = Complex64::new(phase.cos(), phase.sin());
            w[i] = prefix[i] * mult;
            if i != 0 && i != m / 2 {
                w[m - i] = prefix[m - i] * mult.conj();
            }
        }
        out.push(SpectralField1D::from_coeffs(grid, w)?);
        h_prev = h;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{propagate, GridSpec};

    #[test]
    fn constant_forcing_of_zero_mode_grows_linearly() {
        // g = single zero mode (phi(0) = 0), so w(t) = t * g.
        let grid = GridSpec::new(4.0, 16).unwrap();
        let p = DispersionParams::new(1.0, 0.0).unwrap();
        let g = SpectralField1D::single_mode(grid, 0, Complex64::new(2.0, 0.0));
        let forcing: Vec<_> = (0..11).map(|_| g.clone()).collect();
        let w = duhamel_integral(&forcing, 0.1, &p).unwrap();
        for (j, wj) in w.iter().enumerate() {
            let expect = 0.1 * j as f64 * 2.0;
            assert!((wj.coeff_at_wavenumber(0) - Complex64::new(expect, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn free_wave_forcing_matches_closed_form() {
        // g(tau) = U(tau) g0  =>  w(t) = t * U(t) g0 exactly (the integrand
        // is constant in the interaction picture, trapezoid is exact).
        let grid = GridSpec::new(4.0, 32).unwrap();
        let p = DispersionParams::new(1.0, -0.3).unwrap();
        let g0 = SpectralField1D::single_mode(grid, 3, Complex64::new(1.0, 0.5));
        let dt = 0.05;
        let forcing: Vec<_> = (0..9).map(|j| propagate(&g0, j as f64 * dt, &p)).collect();
        let w = duhamel_integral(&forcing, dt, &p).unwrap();
        for j in 0..9 {
            let t = j as f64 * dt;
            let mut expect = propagate(&g0, t, &p);
            for c in expect.coeffs_mut() {
                *c *= t;
            }
            assert!(w[j].max_coeff_distance(&expect) < 1e-13);
        }
    }
}
