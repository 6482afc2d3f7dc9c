//! Static SVG renderings of the CSV artifacts. Plots are conveniences: no
//! experiment result depends on them.

use kawahara_core::num_complex::Complex64;
use kawahara_core::spectral::{GridSpec, SpectralField1D};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotKind {
    /// one log-log panel of ratio vs N per s value (`s,N,ratio`)
    LogLogSlope,
    /// decaying ladders on log-log axes (`N,error`, `t,sup_diff`, or
    /// `t_max,lambda,measure,chebyshev_bound` grouped by lambda)
    LadderDecay,
    /// space-time heatmap of |u| from a trajectory (`t,k,xi,re,im`)
    FieldSnapshot,
}

#[derive(Debug)]
pub struct PlotError(pub String);

impl std::fmt::Display for PlotError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for PlotError {}

/// Which plot (if any) renders a given artifact, by file name.
pub fn plot_kind_for(artifact: &str) -> Option<PlotKind> {
    match artifact {
        "scan_points.csv" => Some(PlotKind::LogLogSlope),
        "truncation.csv" | "uniform.csv" => Some(PlotKind::LadderDecay),
        "exceedance.csv" | "exploratory_exceedance.csv" => Some(PlotKind::LadderDecay),
        "trajectory.csv" => Some(PlotKind::FieldSnapshot),
        _ => None,
    }
}

struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
}

fn read_csv(path: &Path) -> Result<Csv, PlotError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| PlotError(format!("cannot read {}: {}", path.display(), e)))?;
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .ok_or_else(|| PlotError("empty file".into()))?
        .split(',')
        .map(|s| s.trim().to_string())
        .collect();
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<f64>, _> = line.split(',').map(|v| v.trim().parse::<f64>()).collect();
        rows.push(row.map_err(|e| PlotError(format!("row {}: {}", i + 2, e)))?);
    }
    if rows.is_empty() {
        return Err(PlotError("no rows".into()));
    }
    Ok(Csv { header, rows })
}

fn expect_header(csv: &Csv, allowed: &[&str]) -> Result<(), PlotError> {
    let got = csv.header.join(",");
    if allowed.iter().any(|h| *h == got) {
        Ok(())
    } else {
        Err(PlotError(format!(
            "unexpected header `{}`; expected one of: {}",
            got,
            allowed.join(" | ")
        )))
    }
}

const PANEL_W: f64 = 320.0;
const PANEL_H: f64 = 240.0;
const MARGIN: f64 = 48.0;

struct Panel {
    title: String,
    /// polylines in data coordinates (already log-mapped if needed)
    series: Vec<(String, Vec<(f64, f64)>)>,
    x_label: String,
    y_label: String,
}

fn panel_svg(svg: &mut String, panel: &Panel, x0: f64, y0: f64) {
    let pts: Vec<(f64, f64)> = panel
        .series
        .iter()
        .flat_map(|(_, s)| s.iter().copied())
        .collect();
    if pts.is_empty() {
        return;
    }
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for (x, y) in &pts {
        xmin = xmin.min(*x);
        xmax = xmax.max(*x);
        ymin = ymin.min(*y);
        ymax = ymax.max(*y);
    }
    if xmax - xmin < 1e-12 {
        xmax = xmin + 1.0;
    }
    if ymax - ymin < 1e-12 {
        ymax = ymin + 1.0;
    }
    let plot_w = PANEL_W - 2.0 * MARGIN;
    let plot_h = PANEL_H - 2.0 * MARGIN;
    let to_px = |x: f64, y: f64| {
        (
            x0 + MARGIN + (x - xmin) / (xmax - xmin) * plot_w,
            y0 + PANEL_H - MARGIN - (y - ymin) / (ymax - ymin) * plot_h,
        )
    };
    let _ = write!(
        svg,
        "<rect x='{:.1}' y='{:.1}' width='{:.1}' height='{:.1}' fill='none' stroke='black'/>",
        x0 + MARGIN,
        y0 + MARGIN,
        plot_w,
        plot_h
    );
    let _ = write!(
        svg,
        "<text x='{:.1}' y='{:.1}' font-size='12' text-anchor='middle'>{}</text>",
        x0 + PANEL_W / 2.0,
        y0 + MARGIN - 8.0,
        panel.title
    );
    let _ = write!(
        svg,
        "<text x='{:.1}' y='{:.1}' font-size='10' text-anchor='middle'>{}</text>",
        x0 + PANEL_W / 2.0,
        y0 + PANEL_H - 10.0,
        panel.x_label
    );
    let _ = write!(
        svg,
        "<text x='{:.1}' y='{:.1}' font-size='10' text-anchor='middle' transform='rotate(-90 {:.1} {:.1})'>{}</text>",
        x0 + 14.0,
        y0 + PANEL_H / 2.0,
        x0 + 14.0,
        y0 + PANEL_H / 2.0,
        panel.y_label
    );
    // corner tick labels
    let _ = write!(
        svg,
        "<text x='{:.1}' y='{:.1}' font-size='9'>{:.3}</text><text x='{:.1}' y='{:.1}' font-size='9' text-anchor='end'>{:.3}</text>",
        x0 + MARGIN,
        y0 + PANEL_H - MARGIN + 12.0,
        xmin,
        x0 + PANEL_W - MARGIN,
        y0 + PANEL_H - MARGIN + 12.0,
        xmax
    );
    let _ = write!(
        svg,
        "<text x='{:.1}' y='{:.1}' font-size='9' text-anchor='end'>{:.3}</text><text x='{:.1}' y='{:.1}' font-size='9' text-anchor='end'>{:.3}</text>",
        x0 + MARGIN - 4.0,
        y0 + PANEL_H - MARGIN,
        ymin,
        x0 + MARGIN - 4.0,
        y0 + MARGIN + 8.0,
        ymax
    );
    let palette = [
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    ];
    for (si, (label, series)) in panel.series.iter().enumerate() {
        let color = palette[si % palette.len()];
        let mut d = String::new();
        for (x, y) in series {
            let (px, py) = to_px(*x, *y);
            let _ = write!(d, "{:.2},{:.2} ", px, py);
        }
        let _ = write!(
            svg,
            "<polyline fill='none' stroke='{}' stroke-width='1.5' points='{}'/>",
            color, d
        );
        for (x, y) in series {
            let (px, py) = to_px(*x, *y);
            let _ = write!(
                svg,
                "<circle cx='{:.2}' cy='{:.2}' r='2' fill='{}'/>",
                px, py, color
            );
        }
        if !label.is_empty() {
            let _ = write!(
                svg,
                "<text x='{:.1}' y='{:.1}' font-size='9' fill='{}'>{}</text>",
                x0 + MARGIN + 6.0,
                y0 + MARGIN + 12.0 + 11.0 * si as f64,
                color,
                label
            );
        }
    }
}

fn render_panels(panels: &[Panel], per_row: usize) -> String {
    let rows = panels.len().div_ceil(per_row);
    let width = PANEL_W * per_row.min(panels.len()).max(1) as f64;
    let height = PANEL_H * rows as f64;
    let mut svg = format!(
        "<svg xmlns='http://www.w3.org/2000/svg' width='{:.0}' height='{:.0}' viewBox='0 0 {:.0} {:.0}'>",
        width, height, width, height
    );
    svg.push_str("<rect width='100%' height='100%' fill='white'/>");
    for (i, p) in panels.iter().enumerate() {
        let x0 = (i % per_row) as f64 * PANEL_W;
        let y0 = (i / per_row) as f64 * PANEL_H;
        panel_svg(&mut svg, p, x0, y0);
    }
    svg.push_str("</svg>");
    svg
}

fn log10_series(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.log10(), y.log10()))
        .collect()
}

fn loglog_slope_svg(csv: &Csv) -> Result<String, PlotError> {
    expect_header(csv, &["s,N,ratio", "s,N,ratio,ratio_frozen"])?;
    // group by s, preserving first-appearance order
    let mut groups: Vec<(f64, Vec<(f64, f64)>)> = Vec::new();
    for row in &csv.rows {
        let (s, n, ratio) = (row[0], row[1], row[2]);
        match groups.iter_mut().find(|(gs, _)| (*gs - s).abs() < 1e-12) {
            Some((_, pts)) => pts.push((n, ratio)),
            None => groups.push((s, vec![(n, ratio)])),
        }
    }
    let panels: Vec<Panel> = groups
        .iter()
        .map(|(s, pts)| Panel {
            title: format!("s = {:+.3}", s),
            series: vec![(String::new(), log10_series(pts))],
            x_label: "log10 N".into(),
            y_label: "log10 ratio".into(),
        })
        .collect();
    Ok(render_panels(&panels, 3))
}

fn ladder_decay_svg(csv: &Csv) -> Result<String, PlotError> {
    expect_header(
        csv,
        &[
            "N,error",
            "t,sup_diff",
            "t_max,lambda,measure,chebyshev_bound",
        ],
    )?;
    let series = if csv.header.len() == 2 {
        vec![(
            String::new(),
            log10_series(&csv.rows.iter().map(|r| (r[0], r[1])).collect::<Vec<_>>()),
        )]
    } else {
        // exceedance schema: one series per lambda, measure vs t_max
        let mut groups: Vec<(f64, Vec<(f64, f64)>)> = Vec::new();
        for row in &csv.rows {
            let (t_max, lambda, measure) = (row[0], row[1], row[2]);
            match groups
                .iter_mut()
                .find(|(gl, _)| (*gl - lambda).abs() < 1e-12 * lambda.abs().max(1e-300))
            {
                Some((_, pts)) => pts.push((t_max, measure)),
                None => groups.push((lambda, vec![(t_max, measure)])),
            }
        }
        groups
            .into_iter()
            .map(|(lambda, pts)| (format!("lambda = {:.3e}", lambda), log10_series(&pts)))
            .collect()
    };
    let panel = Panel {
        title: csv.header.join(" / "),
        series,
        x_label: format!("log10 {}", csv.header[0]),
        y_label: format!("log10 {}", csv.header[csv.header.len().min(3) - 1]),
    };
    Ok(render_panels(&[panel], 1))
}

fn field_snapshot_svg(csv: &Csv) -> Result<String, PlotError> {
    expect_header(csv, &["t,k,xi,re,im"])?;
    // reconstruct the lattice: number of distinct k per time block
    let first_t = csv.rows[0][0];
    let m = csv.rows.iter().take_while(|r| r[0] == first_t).count();
    if m < 8 || !m.is_power_of_two() || !csv.rows.len().is_multiple_of(m) {
        return Err(PlotError(
            "rows do not form complete spectral snapshots".into(),
        ));
    }
    let n_time = csv.rows.len() / m;
    // dxi from the k = 1 row of the first block
    let dxi = csv
        .rows
        .iter()
        .take(m)
        .find(|r| r[1] == 1.0)
        .map(|r| r[2])
        .ok_or_else(|| PlotError("missing k = 1 row".into()))?;
    let grid = GridSpec::new(std::f64::consts::PI / dxi, m)
        .map_err(|e| PlotError(format!("bad lattice: {}", e)))?;

    let mut magnitudes: Vec<Vec<f64>> = Vec::with_capacity(n_time);
    let mut times = Vec::with_capacity(n_time);
    for block in 0..n_time {
        let rows = &csv.rows[block * m..(block + 1) * m];
        times.push(rows[0][0]);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); m];
        for r in rows {
            let k = r[1] as i64;
            coeffs[grid.index_of(k)] = Complex64::new(r[3], r[4]);
        }
        let field = SpectralField1D::from_coeffs(grid, coeffs)
            .map_err(|e| PlotError(format!("bad snapshot: {}", e)))?;
        magnitudes.push(field.to_physical().iter().map(|c| c.norm()).collect());
    }

    // downsample to a viewable cell count
    let x_cells = m.min(256);
    let t_cells = n_time.min(128);
    let x_step = m / x_cells;
    let t_step = n_time.div_ceil(t_cells);
    let peak = magnitudes
        .iter()
        .flat_map(|r| r.iter())
        .copied()
        .fold(0.0f64, f64::max)
        .max(1e-300);
    let cell_w = 720.0 / x_cells as f64;
    let cell_h = 480.0 / t_cells.min(n_time) as f64;
    let mut svg = String::from(
        "<svg xmlns='http://www.w3.org/2000/svg' width='800' height='560' viewBox='0 0 800 560'>",
    );
    svg.push_str("<rect width='100%' height='100%' fill='white'/>");
    let _ = write!(
        svg,
        "<text x='400' y='20' font-size='13' text-anchor='middle'>|u(x, t)|, peak {:.4e} (t {} .. {})</text>",
        peak,
        times.first().unwrap(),
        times.last().unwrap()
    );
    for (ti, row_idx) in (0..n_time).step_by(t_step).enumerate() {
        for xi in 0..x_cells {
            let v = (magnitudes[row_idx][xi * x_step] / peak).clamp(0.0, 1.0);
            let shade = (255.0 * (1.0 - v)).round() as u8;
            let _ = write!(
                svg,
                "<rect x='{:.2}' y='{:.2}' width='{:.2}' height='{:.2}' fill='rgb({},{},255)'/>",
                40.0 + xi as f64 * cell_w,
                40.0 + ti as f64 * cell_h,
                cell_w + 0.5,
                cell_h + 0.5,
                shade,
                shade,
            );
        }
    }
    svg.push_str("<text x='400' y='550' font-size='11' text-anchor='middle'>x (left = -L)</text>");
    svg.push_str("</svg>");
    Ok(svg)
}

/// Render `csv` as `kind` into a sibling `.svg` file and return its path.
pub fn emit_plot(csv_path: &Path, kind: PlotKind) -> Result<PathBuf, PlotError> {
    let csv = read_csv(csv_path)?;
    let svg = match kind {
        PlotKind::LogLogSlope => loglog_slope_svg(&csv)?,
        PlotKind::LadderDecay => ladder_decay_svg(&csv)?,
        PlotKind::FieldSnapshot => field_snapshot_svg(&csv)?,
    };
    let out = csv_path.with_extension("svg");
    std::fs::write(&out, svg)
        .map_err(|e| PlotError(format!("cannot write {}: {}", out.display(), e)))?;
    Ok(out)
}
