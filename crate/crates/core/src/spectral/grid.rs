//! Uniform periodic grid on `[-L, L)` and its frequency lattice.

use crate::error::CoreError;
use crate::Result;
use std::f64::consts::PI;

/// Periodic spatial grid: `M` points on `[-L, L)`, `dx = 2L/M`, and the
/// frequency lattice `xi_k = (pi/L) * k` for `k in {-M/2, ..., M/2-1}`.
///
/// Coefficients are stored in FFT order: storage index `i` holds wavenumber
/// `k = i` for `i < M/2` and `k = i - M` otherwise. The lattice is symmetric
/// except for the single unpaired Nyquist mode `k = -M/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    half_length: f64,
    points: usize,
}

impl GridSpec {
    pub fn new(half_length: f64, points: usize) -> Result<Self> {
        if !(half_length > 0.0) || !half_length.is_finite() {
            return Err(CoreError::invalid_params("half_length must be positive"));
        }
        if points < 8 || !points.is_power_of_two() {
            return Err(CoreError::invalid_params(
                "points must be a power of two >= 8",
            ));
        }
        Ok(Self {
            half_length,
            points,
        })
    }

    pub fn half_length(&self) -> f64 {
        self.half_length
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn dx(&self) -> f64 {
        2.0 * self.half_length / self.points as f64
    }

    /// Frequency lattice spacing `pi / L` (the lattice weight of every
    /// spectral-side quadrature in this crate).
    pub fn dxi(&self) -> f64 {
        PI / self.half_length
    }

    /// Physical node `x_j = -L + j*dx`.
    pub fn x(&self, j: usize) -> f64 {
        -self.half_length + j as f64 * self.dx()
    }

    /// Signed wavenumber for storage index `i` (FFT ordering).
    pub fn wavenumber(&self, i: usize) -> i64 {
        debug_assert!(i < self.points);
        if i < self.points / 2 {
            i as i64
        } else {
            i as i64 - self.points as i64
        }
    }

    /// Frequency `xi_k` for storage index `i`.
    pub fn xi(&self, i: usize) -> f64 {
        self.wavenumber(i) as f64 * self.dxi()
    }

    /// Storage index of wavenumber `k` (must fit the lattice).
    pub fn index_of(&self, k: i64) -> usize {
        let m = self.points as i64;
        debug_assert!(k >= -m / 2 && k < m / 2);
        k.rem_euclid(m) as usize
    }

    /// Storage index of the conjugate partner `-k`, or `None` for the
    /// unpaired Nyquist mode.
    pub fn mirror(&self, i: usize) -> Option<usize> {
        if i == self.points / 2 {
            None
        } else if i == 0 {
            Some(0)
        } else {
            Some(self.points - i)
        }
    }

    /// Largest frequency magnitude on the lattice, `(M/2) * dxi`.
    pub fn max_xi(&self) -> f64 {
        (self.points / 2) as f64 * self.dxi()
    }

    /// Same physical domain with twice the number of points.
    pub fn refined(&self) -> Result<Self> {
        GridSpec::new(self.half_length, self.points * 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_geometry() {
        let g = GridSpec::new(8.0 * PI, 32).unwrap();
        assert_eq!(g.dx() * g.points() as f64, 2.0 * g.half_length());
        assert_eq!(g.xi(1), 1.0 / 8.0);
        assert_eq!(g.wavenumber(16), -16);
        assert_eq!(g.wavenumber(31), -1);
        assert_eq!(g.mirror(1), Some(31));
        assert_eq!(g.mirror(16), None);
        assert_eq!(g.index_of(-1), 31);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(GridSpec::new(1.0, 12).is_err());
        assert!(GridSpec::new(1.0, 4).is_err());
        assert!(GridSpec::new(-1.0, 16).is_err());
    }
}
