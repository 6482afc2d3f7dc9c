//! Picard iteration of the Duhamel map: the contraction-argument oracle the
//! stepping solver is checked against.

use super::config::SolverConfig;
use super::nonlinear::nonlinearity;
use super::trajectory::Trajectory;
use crate::error::CoreError;
use crate::norms::{sobolev_norm, BumpFamily, NormParams, SpaceTimeSpectrum};
use crate::spectral::{
    duhamel_integral, eta, propagate, window_taper, DispersionParams, GridSpec, SpectralField1D,
};
use crate::Result;

/// One application of the Duhamel map
/// `Phi(u)(t) = eta(t) U(t) u0 - eta(t/T) int_0^t U(t - tau) d/dx(u^2) dtau`
/// on the window time grid of `u`, with the integral evaluated by composite
/// trapezoid over the stored samples.
pub fn picard_map(
    u: &Trajectory,
    u0: &SpectralField1D,
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> Result<Trajectory> {
    if u.grid() != u0.grid() {
        return Err(CoreError::LatticeMismatch(
            "iterate and data on different grids".into(),
        ));
    }
    let dt = u.uniform_dt()?;
    let t_window = u.end_time();
    let forcing: Vec<SpectralField1D> = u
        .states()
        .iter()
        .map(|s| nonlinearity(s, cfg.dealias))
        .collect();
    let integral = duhamel_integral(&forcing, dt, params)?;
    let mut states = Vec::with_capacity(u.len());
    for (j, t) in u.times().iter().enumerate() {
        let mut s = propagate(u0, *t, params);
        let free_cut = eta(*t);
        let duhamel_cut = eta(*t / t_window);
        for (c, d) in s.coeffs_mut().iter_mut().zip(integral[j].coeffs()) {
            *c = free_cut * *c - duhamel_cut * d;
        }
        states.push(s);
    }
    Trajectory::new(u.times().to_vec(), states)
}

/// `X_{s,b}` distance of two trajectories on the same window (tapered
/// transform of the difference).
pub fn xsb_distance(
    a: &Trajectory,
    b: &Trajectory,
    s: f64,
    bb: f64,
    params: &DispersionParams,
) -> Result<f64> {
    if a.len() != b.len() || a.grid() != b.grid() {
        return Err(CoreError::LatticeMismatch(
            "trajectories differ in shape".into(),
        ));
    }
    let diff: Vec<SpectralField1D> = a
        .states()
        .iter()
        .zip(b.states())
        .map(|(x, y)| {
            let mut d = x.clone();
            for (dc, yc) in d.coeffs_mut().iter_mut().zip(y.coeffs()) {
                *dc -= yc;
            }
            d
        })
        .collect();
    let diff_traj = Trajectory::new(a.times().to_vec(), diff)?;
    Ok(diff_traj.to_spectrum()?.xsb_norm(s, bb, params))
}

/// Result of iterating the Duhamel map to its fixed point.
#[derive(Debug, Clone)]
pub struct PicardOutcome {
    pub fixed_point: Trajectory,
    /// successive update norms `||u^{n+1} - u^n||_{X_{s,b}}`
    pub update_norms: Vec<f64>,
    /// ratios of consecutive update norms
    pub contraction_ratios: Vec<f64>,
    pub converged: bool,
}

impl PicardOutcome {
    pub fn worst_ratio(&self) -> f64 {
        self.contraction_ratios.iter().copied().fold(0.0, f64::max)
    }
}

/// Iterate `u^{n+1} = Phi(u^n)` from `u^0 = eta(t) U(t) u0` on a window of
/// `n_time` samples covering `[0, cfg.t_end]`, measuring updates in
/// `X_{s,b}` with `s = np.s`, `b = np.b`.
pub fn picard_iterate(
    u0: &SpectralField1D,
    n_time: usize,
    cfg: &SolverConfig,
    np: &NormParams,
    params: &DispersionParams,
) -> Result<PicardOutcome> {
    if n_time < 8 {
        return Err(CoreError::invalid_params(
            "picard window needs >= 8 samples",
        ));
    }
    let dt = cfg.t_end / (n_time - 1) as f64;
    let times: Vec<f64> = (0..n_time).map(|j| j as f64 * dt).collect();
    let states: Vec<SpectralField1D> = times
        .iter()
        .map(|t| {
            let mut s = propagate(u0, *t, params);
            let cut = eta(*t);
            for c in s.coeffs_mut() {
                *c *= cut;
            }
            s
        })
        .collect();
    let mut current = Trajectory::new(times, states)?;
    let scale = sobolev_norm(u0, np.s).max(1e-14);

    let mut update_norms = Vec::new();
    let mut contraction_ratios = Vec::new();
    let mut converged = false;
    for _ in 0..cfg.picard_max_iters {
        let next = picard_map(&current, u0, cfg, params)?;
        let update = xsb_distance(&next, &current, np.s, np.b, params)?;
        if let Some(prev) = update_norms.last() {
            if *prev > 0.0 {
                contraction_ratios.push(update / prev);
            }
        }
        update_norms.push(update);
        current = next;
        if update <= cfg.picard_tol * scale {
            converged = true;
            break;
        }
    }
    Ok(PicardOutcome {
        fixed_point: current,
        update_norms,
        contraction_ratios,
        converged,
    })
}

/// Measure the constants of the two linear estimates on the working grid:
/// the free-wave energy bound and the Duhamel smoothing bound, as the
/// largest ratio over a family of tapered free waves of bump data. The
/// returned value seeds [`SolverConfig::contraction_constant`].
pub fn measure_linear_constants(
    grid: GridSpec,
    n_time: usize,
    t_len: f64,
    np: &NormParams,
    params: &DispersionParams,
    n_samples: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    let family = BumpFamily {
        half_length: grid.half_length(),
        k_max: (grid.points() / 3) as f64 * grid.dxi() * 0.5,
        seed,
    };
    let dt = t_len / (n_time - 1) as f64;
    let mut c_free = 0.0f64;
    let mut c_duhamel = 0.0f64;
    for idx in 0..n_samples {
        let u0 = family.sample(idx).realize(grid, family.k_max)?;
        let hs = sobolev_norm(&u0, np.s);
        if hs == 0.0 {
            continue;
        }
        let tapered: Vec<SpectralField1D> = (0..n_time)
            .map(|j| {
                let t = j as f64 * dt;
                let w = window_taper(t, t_len);
                let mut s = propagate(&u0, t, params);
                for c in s.coeffs_mut() {
                    *c *= w;
                }
                s
            })
            .collect();
        let g_spec = SpaceTimeSpectrum::from_tapered_states(&tapered, dt)?;
        c_free = c_free.max(g_spec.xsb_norm(np.s, np.b, params) / hs);

        let duh = duhamel_integral(&tapered, dt, params)?;
        let wrapped: Vec<SpectralField1D> = duh
            .into_iter()
            .enumerate()
            .map(|(j, mut s)| {
                let w = window_taper(j as f64 * dt, t_len);
                for c in s.coeffs_mut() {
                    *c *= w;
                }
                s
            })
            .collect();
        let lhs =
            SpaceTimeSpectrum::from_tapered_states(&wrapped, dt)?.xsb_norm(np.s, np.b, params);
        let rhs =
            t_len.powf(1.0 + np.b_prime() - np.b) * g_spec.xsb_norm(np.s, np.b_prime(), params);
        if rhs > 0.0 {
            c_duhamel = c_duhamel.max(lhs / rhs);
        }
    }
    Ok((c_free, c_duhamel))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> DispersionParams {
        DispersionParams::new(1.0, 0.0).unwrap()
    }

    #[test]
    fn zero_data_is_fixed_point() {
        let grid = GridSpec::new(8.0, 32).unwrap();
        let cfg = SolverConfig::new(1e-3, 0.01).unwrap();
        let u0 = SpectralField1D::zero(grid);
        let times: Vec<f64> = (0..16).map(|j| j as f64 * 0.01 / 15.0).collect();
        let zero_traj = Trajectory::new(
            times,
            (0..16).map(|_| SpectralField1D::zero(grid)).collect(),
        )
        .unwrap();
        let mapped = picard_map(&zero_traj, &u0, &cfg, &params()).unwrap();
        for s in mapped.states() {
            assert_eq!(s.max_abs_coeff(), 0.0);
        }
    }

    #[test]
    fn zero_iterate_returns_tapered_free_wave() {
        let grid = GridSpec::new(8.0, 32).unwrap();
        let cfg = SolverConfig::new(1e-3, 0.01).unwrap();
        let p = params();
        let u0 = SpectralField1D::cosine_mode(grid, 2, 0.3);
        let n = 16;
        let dt = 0.01 / (n - 1) as f64;
        let times: Vec<f64> = (0..n).map(|j| j as f64 * dt).collect();
        let zero_traj = Trajectory::new(
            times.clone(),
            (0..n).map(|_| SpectralField1D::zero(grid)).collect(),
        )
        .unwrap();
        let mapped = picard_map(&zero_traj, &u0, &cfg, &p).unwrap();
        for (t, s) in times.iter().zip(mapped.states()) {
            // window is far inside |t| <= 1, so eta(t) == 1
            let expect = propagate(&u0, *t, &p);
            assert!(s.max_coeff_distance(&expect) < 1e-13);
        }
    }
}
