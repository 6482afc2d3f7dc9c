//! Time-ordered solver output.

use crate::error::CoreError;
use crate::norms::{SpaceTimeSamples, SpaceTimeSpectrum};
use crate::spectral::{GridSpec, SpectralField1D};
use crate::Result;

/// A sequence of spectral snapshots at increasing times starting from 0.
#[derive(Debug, Clone)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<SpectralField1D>,
}

impl Trajectory {
    pub fn new(times: Vec<f64>, states: Vec<SpectralField1D>) -> Result<Self> {
        if times.len() != states.len() || times.is_empty() {
            return Err(CoreError::invalid_input(
                "times and states must be non-empty and of equal length",
            ));
        }
        if times[0] != 0.0 || times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(CoreError::invalid_input(
                "times must increase strictly from 0",
            ));
        }
        let grid = states[0].grid();
        if states.iter().any(|s| s.grid() != grid) {
            return Err(CoreError::LatticeMismatch(
                "trajectory states on different grids".into(),
            ));
        }
        Ok(Self { times, states })
    }

    pub fn grid(&self) -> GridSpec {
        self.states[0].grid()
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[SpectralField1D] {
        &self.states
    }

    pub fn state(&self, idx: usize) -> &SpectralField1D {
        &self.states[idx]
    }

    pub fn initial_state(&self) -> &SpectralField1D {
        &self.states[0]
    }

    pub fn end_state(&self) -> &SpectralField1D {
        self.states.last().expect("non-empty")
    }

    pub fn end_time(&self) -> f64 {
        *self.times.last().expect("non-empty")
    }

    /// Uniform sample spacing, or an error if the stored times are not
    /// equispaced (within a relative 1e-9).
    pub fn uniform_dt(&self) -> Result<f64> {
        if self.times.len() < 2 {
            return Err(CoreError::invalid_input(
                "need at least two samples for a time spacing",
            ));
        }
        let dt = self.times[1] - self.times[0];
        for w in self.times.windows(2) {
            if ((w[1] - w[0]) - dt).abs() > 1e-9 * dt {
                return Err(CoreError::invalid_input("trajectory times not uniform"));
            }
        }
        Ok(dt)
    }

    pub fn to_samples(&self) -> Result<SpaceTimeSamples> {
        SpaceTimeSamples::from_states(&self.states, self.uniform_dt()?)
    }

    /// Tapered space-time spectrum of the trajectory.
    pub fn to_spectrum(&self) -> Result<SpaceTimeSpectrum> {
        SpaceTimeSpectrum::from_states(&self.states, self.uniform_dt()?)
    }
}
