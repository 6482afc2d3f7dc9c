//! Nonlinear Kawahara dynamics: the stepping solver, the frequency-truncated
//! flow, and the Picard/Duhamel fixed-point oracle.

mod config;
mod nonlinear;
mod picard;
mod solver;
mod trajectory;

pub use config::{existence_window_for, SolverConfig};
pub use nonlinear::nonlinearity;
pub use picard::{
    measure_linear_constants, picard_iterate, picard_map, xsb_distance, PicardOutcome,
};
pub use solver::{solve, solve_truncated, solve_with};
pub use trajectory::Trajectory;
