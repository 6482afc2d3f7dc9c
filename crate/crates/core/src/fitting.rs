//! Least-squares power-law fits in log-log coordinates.

/// `y ~ exp(intercept) * x^slope`; `residual` is the root-mean-square
/// deviation of `ln y` from the fit.
#[derive(Debug, Clone, Copy)]
pub struct PowerLawFit {
    pub slope: f64,
    pub intercept: f64,
    pub residual: f64,
}

/// Fit `(x, y)` pairs with positive entries. Returns `None` when fewer than
/// two usable points remain.
pub fn fit_power_law(points: &[(f64, f64)]) -> Option<PowerLawFit> {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0 && x.is_finite() && y.is_finite())
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if logs.len() < 2 {
        return None;
    }
    let n = logs.len() as f64;
    let sx: f64 = logs.iter().map(|(x, _)| x).sum();
    let sy: f64 = logs.iter().map(|(_, y)| y).sum();
    let sxx: f64 = logs.iter().map(|(x, _)| x * x).sum();
    let sxy: f64 = logs.iter().map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-300 {
        return None;
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    let residual = (logs
        .iter()
        .map(|(x, y)| {
            let r = y - (slope * x + intercept);
            r * r
        })
        .sum::<f64>()
        / n)
        .sqrt();
    Some(PowerLawFit {
        slope,
        intercept,
        residual,
    })
}
