//! Uniform distance to the free evolution, `sup_x |u(x,t) - U(t) u0(x)|`.

use crate::dynamics::{solve, SolverConfig};
use crate::error::CoreError;
use crate::spectral::{propagate, DispersionParams, SpectralField1D};
use crate::Result;

/// Evaluate the Duhamel correction `u - U(t) u0` on the physical grid and
/// take the max over `x`, for each requested time. Every `t` must land on
/// the solver's time grid.
pub fn uniform_experiment(
    u0: &SpectralField1D,
    t_ladder: &[f64],
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> Result<Vec<(f64, f64)>> {
    let t_top = t_ladder.iter().copied().fold(0.0, f64::max);
    if t_top > cfg.t_end + 1e-12 {
        return Err(CoreError::invalid_params(
            "ladder extends past the solver window",
        ));
    }
    let traj = solve(u0, cfg, params)?;
    t_ladder
        .iter()
        .map(|&t| {
            let idx = (t / cfg.dt).round() as usize;
            if (idx as f64 * cfg.dt - t).abs() > 1e-9 * cfg.dt.max(t) {
                return Err(CoreError::invalid_input(format!(
                    "t = {} does not lie on the solver time grid",
                    t
                )));
            }
            let state = traj.state(idx);
            let sup = if idx == 0 {
                // both sides are u0 bit-for-bit
                0.0
            } else {
                let free = propagate(u0, t, params);
                let diff_phys: Vec<_> = state
                    .to_physical()
                    .iter()
                    .zip(free.to_physical())
                    .map(|(a, b)| (a - b).norm())
                    .collect();
                diff_phys.into_iter().fold(0.0, f64::max)
            };
            Ok((t, sup))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fitting::fit_power_law;
    use crate::spectral::GridSpec;

    #[test]
    fn zero_at_origin_and_linear_decay() {
        let grid = GridSpec::new(8.0 * std::f64::consts::PI, 64).unwrap();
        let samples: Vec<f64> = (0..64).map(|j| 0.3 * (grid.x(j) / 2.0).cos()).collect();
        let u0 = SpectralField1D::from_real_samples(grid, &samples).unwrap();
        let cfg = SolverConfig::new(1e-4, 0.0128).unwrap();
        let p = DispersionParams::new(1.0, 0.0).unwrap();
        let ladder: Vec<f64> = (0..=4)
            .map(|j| 0.0128 / 2f64.powi(j))
            .chain([0.0])
            .collect();
        let out = uniform_experiment(&u0, &ladder, &cfg, &p).unwrap();
        assert_eq!(out.last().unwrap().1, 0.0);
        let fit = fit_power_law(&out[..5]).unwrap();
        assert!(fit.slope >= 0.8, "slope {}", fit.slope);
    }

    #[test]
    fn off_grid_times_rejected() {
        let grid = GridSpec::new(8.0 * std::f64::consts::PI, 64).unwrap();
        let u0 = SpectralField1D::zero(grid);
        let cfg = SolverConfig::new(1e-3, 0.01).unwrap();
        let p = DispersionParams::new(1.0, 0.0).unwrap();
        assert!(uniform_experiment(&u0, &[0.00137], &cfg, &p).is_err());
    }
}
