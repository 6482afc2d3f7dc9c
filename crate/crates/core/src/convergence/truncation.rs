//! `||u - u_N||_{L^4_x L^inf_t}` along a ladder of frequency cutoffs.

use crate::dynamics::{solve, solve_with, SolverConfig, Trajectory};
use crate::error::CoreError;
use crate::spectral::{DispersionParams, SpectralField1D};
use crate::Result;
use rayon::prelude::*;

/// Solve the full and truncated flows on a shared time grid and return the
/// mixed `L^4_x L^inf_t` norm of the difference per cutoff. The full
/// trajectory is computed once; the per-`N` runs stream against it and are
/// independent tasks.
pub fn truncation_error(
    u0: &SpectralField1D,
    n_values: &[f64],
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> Result<Vec<(f64, f64)>> {
    if n_values.windows(2).any(|w| w[1] <= w[0]) {
        return Err(CoreError::invalid_params("cutoff ladder must increase"));
    }
    let full = solve(u0, cfg, params)?;
    let full_phys: Vec<Vec<f64>> = full
        .states()
        .iter()
        .map(|s| s.to_physical().iter().map(|c| c.re).collect())
        .collect();

    n_values
        .par_iter()
        .map(|&n_cut| {
            let err = difference_l4x_linft(u0, n_cut, &full, &full_phys, cfg, params)?;
            Ok((n_cut, err))
        })
        .collect()
}

fn difference_l4x_linft(
    u0: &SpectralField1D,
    n_cut: f64,
    full: &Trajectory,
    full_phys: &[Vec<f64>],
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> Result<f64> {
    let grid = full.grid();
    let m = grid.points();
    let mut sup = vec![0.0f64; m];
    let mut idx = 0usize;
    solve_with(u0, Some(n_cut), cfg, params, |_t, state| {
        let phys = state.to_physical();
        let reference = &full_phys[idx];
        for i in 0..m {
            let d = (phys[i].re - reference[i]).abs();
            if d > sup[i] {
                sup[i] = d;
            }
        }
        idx += 1;
    })?;
    debug_assert_eq!(idx, full.len());
    Ok((sup.iter().map(|v| v.powi(4)).sum::<f64>() * grid.dx()).powf(0.25))
}
