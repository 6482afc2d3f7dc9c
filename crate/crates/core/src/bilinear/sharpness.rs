//! Blow-up exponent scan: how fast the counterexample ratio grows in `N`
//! as a function of the factor Sobolev index `s`.

use super::counterexample::CounterexamplePair;
use crate::error::CoreError;
use crate::fitting::fit_power_law;
use crate::spectral::DispersionParams;
use crate::Result;
use rayon::prelude::*;

/// One `(s, N)` evaluation of the counterexample ratio. `ratio_frozen`
/// replaces the exact lattice norms of `f` and `g` by their center-frozen
/// weight approximations; the gap between the two exposes the lattice error.
#[derive(Debug, Clone, Copy)]
pub struct ScanPoint {
    pub s: f64,
    pub n: f64,
    pub ratio: f64,
    pub ratio_frozen: f64,
}

/// Fitted blow-up exponent for one `s`.
#[derive(Debug, Clone, Copy)]
pub struct SlopeRow {
    pub s: f64,
    pub epsilon: f64,
    pub slope: f64,
    pub residual: f64,
    /// `-s - 1/2 + 3 eps / 4`
    pub expected_slope: f64,
    /// the fit residual exceeded 0.2
    pub noisy: bool,
}

#[derive(Debug, Clone)]
pub struct SlopeTable {
    pub rows: Vec<SlopeRow>,
    pub points: Vec<ScanPoint>,
}

impl SlopeTable {
    /// `s` where the fitted exponent changes sign, bracketed to one scan
    /// step (midpoint of the bracketing pair), if the scan exhibits one.
    pub fn sign_change_estimate(&self) -> Option<f64> {
        self.rows.windows(2).find_map(|w| {
            if w[0].slope > 0.0 && w[1].slope <= 0.0 {
                Some(0.5 * (w[0].s + w[1].s))
            } else {
                None
            }
        })
    }
}

/// For each `s`, least-squares slope of `log(ratio)` against `log(N)` over a
/// geometric `N` ladder. Each `N` is an independent task; results merge in
/// ladder order.
pub fn sharpness_scan(
    s_values: &[f64],
    n_values: &[f64],
    epsilon: f64,
    density: usize,
    params: &DispersionParams,
) -> Result<SlopeTable> {
    if n_values.len() < 4 {
        return Err(CoreError::invalid_params(
            "need at least 4 points in the N ladder",
        ));
    }
    let q0 = n_values[1] / n_values[0];
    for w in n_values.windows(2) {
        let q = w[1] / w[0];
        if !(q > 1.0) || (q - q0).abs() > 1e-9 * q0 {
            return Err(CoreError::invalid_params("N ladder must be geometric"));
        }
    }
    if s_values.is_empty() {
        return Err(CoreError::invalid_params("empty s ladder"));
    }

    let pairs: Vec<CounterexamplePair> = n_values
        .par_iter()
        .map(|&n| CounterexamplePair::new(n, params, density))
        .collect::<Result<Vec<_>>>()?;

    let mut points = Vec::with_capacity(s_values.len() * n_values.len());
    let mut rows = Vec::with_capacity(s_values.len());
    for &s in s_values {
        let b = 0.5 + 0.5 * epsilon;
        let ratios: Vec<ScanPoint> = pairs
            .iter()
            .map(|pair| {
                let (f_approx, g_approx) = pair.approx_norms(s, b);
                let lhs = pair.product_deriv_norm(0.5 + 2.0 * epsilon, -0.5 + 2.0 * epsilon);
                ScanPoint {
                    s,
                    n: pair.n(),
                    ratio: pair.ratio(s, epsilon),
                    ratio_frozen: lhs / (f_approx * g_approx),
                }
            })
            .collect();
        let fit_data: Vec<(f64, f64)> = ratios.iter().map(|p| (p.n, p.ratio)).collect();
        let fit = fit_power_law(&fit_data)
            .ok_or_else(|| CoreError::invalid_input("degenerate ratio data in scan"))?;
        rows.push(SlopeRow {
            s,
            epsilon,
            slope: fit.slope,
            residual: fit.residual,
            expected_slope: -s - 0.5 + 0.75 * epsilon,
            noisy: fit.residual > 0.2,
        });
        points.extend(ratios);
    }
    Ok(SlopeTable { rows, points })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_validation() {
        let p = DispersionParams::new(1.0, 0.0).unwrap();
        assert!(sharpness_scan(&[0.0], &[16.0, 32.0, 64.0], 0.1, 8, &p).is_err());
        assert!(sharpness_scan(&[0.0], &[16.0, 32.0, 48.0, 64.0], 0.1, 8, &p).is_err());
    }

    #[test]
    fn blow_up_exponents_match_prediction() {
        let p = DispersionParams::new(1.0, 0.0).unwrap();
        let table =
            sharpness_scan(&[-1.0, -0.425, 0.0], &[16.0, 32.0, 64.0, 128.0], 0.1, 8, &p).unwrap();
        let by_s: Vec<f64> = table.rows.iter().map(|r| r.slope).collect();
        // s = -1: blow-up exponent near 1/2 + 3 eps/4 = 0.575
        assert!(
            (by_s[0] - 0.575).abs() <= 0.15,
            "slope at s=-1: {}",
            by_s[0]
        );
        // s at the critical index: exponent near zero
        assert!(by_s[1].abs() <= 0.15, "critical slope: {}", by_s[1]);
        // s = 0: negative exponent, no blow-up
        assert!(by_s[2] < 0.0, "slope at s=0: {}", by_s[2]);
        // strictly decreasing in s
        assert!(by_s[0] > by_s[1] && by_s[1] > by_s[2]);
        for r in &table.rows {
            assert!(!r.noisy, "noisy fit at s={}: residual {}", r.s, r.residual);
        }
    }
}
