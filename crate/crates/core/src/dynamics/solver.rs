//! Integrating-factor Strang splitting for the Kawahara flow.
//!
//! One step of size `dt`: exact linear half step, explicit-midpoint step on
//! the (projected, dealiased) flux `-d/dx(u^2)`, exact linear half step.
//! The linear part is treated exactly at every frequency, so stability is
//! governed by the nonlinear substep alone and the scheme is second order.

use super::config::SolverConfig;
use super::nonlinear::nonlinearity;
use super::trajectory::Trajectory;
use crate::error::CoreError;
use crate::spectral::{project_low, propagate, DispersionParams, SpectralField1D};
use crate::Result;

fn flux(u: &SpectralField1D, cutoff: Option<f64>, cfg: &SolverConfig) -> SpectralField1D {
    let mut f = nonlinearity(u, cfg.dealias);
    if let Some(n) = cutoff {
        f = project_low(&f, n);
    }
    for c in f.coeffs_mut() {
        *c = -*c;
    }
    f
}

fn axpy(y: &mut SpectralField1D, a: f64, x: &SpectralField1D) {
    for (yc, xc) in y.coeffs_mut().iter_mut().zip(x.coeffs()) {
        *yc += a * xc;
    }
}

fn step(
    u: &SpectralField1D,
    cutoff: Option<f64>,
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> SpectralField1D {
    let half = propagate(u, 0.5 * cfg.dt, params);
    let advanced = if cfg.include_nonlinearity {
        let k1 = flux(&half, cutoff, cfg);
        let mut mid = half.clone();
        axpy(&mut mid, 0.5 * cfg.dt, &k1);
        let k2 = flux(&mid, cutoff, cfg);
        let mut next = half;
        axpy(&mut next, cfg.dt, &k2);
        next
    } else {
        half
    };
    propagate(&advanced, 0.5 * cfg.dt, params)
}

/// Step the flow and hand every `store_every`-th state (plus the final one)
/// to `observer`. The observer also receives the initial state at index 0.
pub fn solve_with(
    u0: &SpectralField1D,
    cutoff: Option<f64>,
    cfg: &SolverConfig,
    params: &DispersionParams,
    mut observer: impl FnMut(f64, &SpectralField1D),
) -> Result<()> {
    let mut state = match cutoff {
        Some(n) => project_low(u0, n),
        None => u0.clone(),
    };
    observer(0.0, &state);
    let n_steps = cfg.n_steps();
    for j in 1..=n_steps {
        state = step(&state, cutoff, cfg, params);
        let t = j as f64 * cfg.dt;
        if !state.is_finite() || state.max_abs_coeff() > 1e12 {
            return Err(CoreError::Blowup { time: t });
        }
        if j % cfg.store_every == 0 || j == n_steps {
            observer(t, &state);
        }
    }
    Ok(())
}

/// Solve the full flow on `[0, t_end]`.
pub fn solve(
    u0: &SpectralField1D,
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> Result<Trajectory> {
    collect(u0, None, cfg, params)
}

/// Solve the frequency-truncated flow: initial data `P_N u0` and flux
/// `-P_N d/dx(u_N^2)`; the state stays supported in `|xi| <= N` for all
/// times.
pub fn solve_truncated(
    u0: &SpectralField1D,
    n_cut: f64,
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> Result<Trajectory> {
    if n_cut < 0.0 {
        return Err(CoreError::invalid_params("cutoff must be non-negative"));
    }
    collect(u0, Some(n_cut), cfg, params)
}

fn collect(
    u0: &SpectralField1D,
    cutoff: Option<f64>,
    cfg: &SolverConfig,
    params: &DispersionParams,
) -> Result<Trajectory> {
    let mut times = Vec::new();
    let mut states = Vec::new();
    solve_with(u0, cutoff, cfg, params, |t, s| {
        times.push(t);
        states.push(s.clone());
    })?;
    Trajectory::new(times, states)
}
