//! Solver configuration.

use crate::error::CoreError;
use crate::Result;

/// Time-stepping and fixed-point parameters.
#[derive(Debug, Clone, Copy)]
pub struct SolverConfig {
    /// step size of the stepping integrator
    pub dt: f64,
    /// window length; the solver integrates `[0, t_end]`
    pub t_end: f64,
    pub picard_max_iters: usize,
    pub picard_tol: f64,
    /// empirical stand-in for the contraction constant of the linear
    /// estimates; measured at startup and reused
    pub contraction_constant: f64,
    /// 2/3-rule dealiasing of the quadratic flux
    pub dealias: bool,
    /// disable to reduce the solver to the exact linear flow
    pub include_nonlinearity: bool,
    /// keep every n-th state in the trajectory (the final state is always kept)
    pub store_every: usize,
}

impl SolverConfig {
    pub fn new(dt: f64, t_end: f64) -> Result<Self> {
        if !(dt > 0.0) || !(t_end > 0.0) {
            return Err(CoreError::invalid_params("dt and t_end must be positive"));
        }
        Ok(Self {
            dt,
            t_end,
            picard_max_iters: 32,
            picard_tol: 1e-10,
            contraction_constant: 1.0,
            dealias: true,
            include_nonlinearity: true,
            store_every: 1,
        })
    }

    pub fn n_steps(&self) -> usize {
        ((self.t_end / self.dt).round() as usize).max(1)
    }

    /// True when the window respects the local-existence heuristic
    /// `T <= (1 / (4 C^2 ||u0||_{H^s}))^{2/(3 eps)}`.
    pub fn respects_existence_window(&self, u0_hs_norm: f64, epsilon: f64) -> bool {
        self.t_end <= existence_window_for(self.contraction_constant, u0_hs_norm, epsilon)
    }
}

/// The local-existence window `(1 / (4 C^2 ||u0||_{H^s}))^{2/(3 eps)}`.
pub fn existence_window_for(c: f64, u0_hs_norm: f64, epsilon: f64) -> f64 {
    (1.0 / (4.0 * c * c * u0_hs_norm)).powf(2.0 / (3.0 * epsilon))
}
