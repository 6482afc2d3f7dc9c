//! CSV emission helpers. All files use `\n` line endings, a `.` decimal
//! separator, and C-style `%.<prec>e` floats (two-digit signed exponent) so
//! artifacts are byte-stable across platforms and thread counts.

use crate::bilinear::SlopeTable;
use crate::convergence::ExceedanceReport;
use crate::dynamics::Trajectory;
use crate::norms::RatioReport;
use std::fmt::Write as _;

/// Format `x` like C's `%.*e`: fixed mantissa precision and an exponent of
/// at least two digits with an explicit sign, e.g. `1.250000000000e-03`.
pub fn format_exp(x: f64, precision: usize) -> String {
    let x = if x == 0.0 { 0.0 } else { x }; // normalize -0.0
    let raw = format!("{:.*e}", precision, x);
    let (mantissa, exponent) = raw.split_once('e').expect("exponential format");
    let (sign, digits) = match exponent.strip_prefix('-') {
        Some(d) => ('-', d),
        None => ('+', exponent),
    };
    if digits.len() >= 2 {
        format!("{}e{}{}", mantissa, sign, digits)
    } else {
        format!("{}e{}0{}", mantissa, sign, digits)
    }
}

/// `%.12e` (data columns).
pub fn e12(x: f64) -> String {
    format_exp(x, 12)
}

/// `%.6e` (fitted slopes and other derived scalars).
pub fn e6(x: f64) -> String {
    format_exp(x, 6)
}

/// Trajectory export: `t,k,xi,re,im`, one row per stored time per mode.
pub fn trajectory_csv(traj: &Trajectory) -> String {
    let grid = traj.grid();
    let mut out = String::from("t,k,xi,re,im\n");
    for (t, state) in traj.times().iter().zip(traj.states()) {
        for i in 0..grid.points() {
            let c = state.coeffs()[i];
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                e12(*t),
                grid.wavenumber(i),
                e12(grid.xi(i)),
                e12(c.re),
                e12(c.im)
            );
        }
    }
    out
}

/// Ratio-report export: `sample_id,lhs,rhs,ratio,resolution`.
pub fn ratio_report_csv(report: &RatioReport) -> String {
    let mut out = String::from("sample_id,lhs,rhs,ratio,resolution\n");
    for s in &report.samples {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            s.sample_id,
            e12(s.lhs),
            e12(s.rhs),
            e12(s.ratio),
            s.resolution
        );
    }
    out
}

/// Sharpness-scan export: `s,epsilon,slope,residual,expected_slope`.
pub fn slope_table_csv(table: &SlopeTable) -> String {
    let mut out = String::from("s,epsilon,slope,residual,expected_slope\n");
    for r in &table.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            e6(r.s),
            e6(r.epsilon),
            e6(r.slope),
            e6(r.residual),
            e6(r.expected_slope)
        );
    }
    out
}

/// Raw scan points behind the slope fits: `s,N,ratio,ratio_frozen` (the
/// last column uses center-frozen rectangle weights instead of the exact
/// lattice sums).
pub fn scan_points_csv(table: &SlopeTable) -> String {
    let mut out = String::from("s,N,ratio,ratio_frozen\n");
    for p in &table.points {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            e6(p.s),
            e12(p.n),
            e12(p.ratio),
            e12(p.ratio_frozen)
        );
    }
    out
}

/// Pointwise-experiment export: `t_max,lambda,measure,chebyshev_bound`.
pub fn exceedance_csv(reports: &[ExceedanceReport]) -> String {
    let mut out = String::from("t_max,lambda,measure,chebyshev_bound\n");
    for rep in reports {
        for row in &rep.rows {
            let _ = writeln!(
                out,
                "{},{},{},{}",
                e12(rep.t_max),
                e12(row.lambda),
                e12(row.measure),
                e12(row.bound)
            );
        }
    }
    out
}

/// Truncation-experiment export: `N,error`.
pub fn truncation_csv(rows: &[(f64, f64)]) -> String {
    let mut out = String::from("N,error\n");
    for (n, err) in rows {
        let _ = writeln!(out, "{},{}", e12(*n), e12(*err));
    }
    out
}

/// Uniform-experiment export: `t,sup_diff`.
pub fn uniform_csv(rows: &[(f64, f64)]) -> String {
    let mut out = String::from("t,sup_diff\n");
    for (t, sup) in rows {
        let _ = writeln!(out, "{},{}", e12(*t), e12(*sup));
    }
    out
}
