//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CoreError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    /// The solver produced a non-finite state; carries the time at which
    /// the state first became invalid.
    #[error("blowup detected at t = {time}")]
    Blowup { time: f64 },
}

impl CoreError {
    pub fn invalid_params(msg: impl Into<String>) -> Self {
        CoreError::InvalidParameters(msg.into())
    }

    pub fn invalid_input(msg: impl Into<String>) -> Self {
        CoreError::InvalidInput(msg.into())
    }
}
