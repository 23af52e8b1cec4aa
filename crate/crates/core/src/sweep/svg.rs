use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::table::Table;

/// Upper bound on the number of polylines in one plot.
pub const MAX_SERIES: usize = 16;

const PALETTE: [&str; MAX_SERIES] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31", "#843c39", "#7b4173", "#3182bd",
];

#[derive(Debug, Clone, PartialEq)]
pub struct PlotOptions {
    pub width: f64,
    pub height: f64,
    pub title: Option<String>,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            width: 960.0,
            height: 540.0,
            title: None,
        }
    }
}

struct Series {
    label: Option<f64>,
    points: Vec<(f64, f64)>,
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn tick_label(v: f64) -> String {
    let s = format!("{:.4}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_owned()
    } else {
        s.to_owned()
    }
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    });
    if hi > lo {
        (lo, hi)
    } else {
        let pad = if lo == 0.0 { 1.0 } else { lo.abs() * 0.1 };
        (lo - pad, hi + pad)
    }
}

/// Line plot of the table's last column against `x_axis`, one polyline per
/// distinct value of `series_axis`.
pub fn render_svg_lineplot(
    table: &Table,
    x_axis: &str,
    series_axis: Option<&str>,
    options: &PlotOptions,
) -> Result<String> {
    if table.is_empty() {
        return Err(Error::Plot("table has no rows".into()));
    }
    let columns = table.columns();
    let y_idx = columns.len() - 1;
    let x_idx = table
        .column_index(x_axis)
        .filter(|&i| i != y_idx)
        .ok_or_else(|| Error::Plot(format!("x axis `{x_axis}` is not a swept column")))?;
    let s_idx = match series_axis {
        Some(name) => Some(
            table
                .column_index(name)
                .filter(|&i| i != y_idx && i != x_idx)
                .ok_or_else(|| {
                    Error::Plot(format!("series axis `{name}` is not a swept column"))
                })?,
        ),
        None => None,
    };
    if let Some(extra) = (0..y_idx).find(|&i| i != x_idx && Some(i) != s_idx) {
        return Err(Error::Plot(format!(
            "column `{}` is neither the x axis nor the series axis",
            columns[extra]
        )));
    }

    let mut series: Vec<Series> = Vec::new();
    for row in table.rows() {
        let label = s_idx.map(|i| row[i]);
        let slot = match series
            .iter()
            .position(|s| s.label.map(f64::to_bits) == label.map(f64::to_bits))
        {
            Some(k) => k,
            None => {
                if series.len() == MAX_SERIES {
                    return Err(Error::Plot(format!("more than {MAX_SERIES} series")));
                }
                series.push(Series {
                    label,
                    points: Vec::new(),
                });
                series.len() - 1
            }
        };
        series[slot].points.push((row[x_idx], row[y_idx]));
    }
    for s in &mut series {
        s.points.sort_by(|a, b| a.0.total_cmp(&b.0));
    }

    let (x_lo, x_hi) = padded_range(table.rows().iter().map(|r| r[x_idx]));
    let (y_lo, y_hi) = padded_range(table.rows().iter().map(|r| r[y_idx]));
    let (w, h) = (options.width, options.height);
    let (left, right, top, bottom) = (80.0, if s_idx.is_some() { 170.0 } else { 30.0 }, 40.0, 60.0);
    let plot_w = w - left - right;
    let plot_h = h - top - bottom;
    let px = |x: f64| left + (x - x_lo) / (x_hi - x_lo) * plot_w;
    let py = |y: f64| top + plot_h - (y - y_lo) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#
    );
    if let Some(title) = &options.title {
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="24" text-anchor="middle" font-family="sans-serif" font-size="16">{}</text>"#,
            w / 2.0,
            escape(title)
        );
    }

    // axes frame and ticks
    let _ = writeln!(
        svg,
        r#"<rect x="{left}" y="{top}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );
    let ticks = 5;
    for k in 0..=ticks {
        let f = k as f64 / ticks as f64;
        let xv = x_lo + f * (x_hi - x_lo);
        let yv = y_lo + f * (y_hi - y_lo);
        let (tx, ty) = (px(xv), py(yv));
        let base = top + plot_h;
        let _ = writeln!(
            svg,
            r#"<line x1="{tx:.2}" y1="{base}" x2="{tx:.2}" y2="{:.2}" stroke="black"/>"#,
            base + 6.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{tx:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="12">{}</text>"#,
            base + 20.0,
            tick_label(xv)
        );
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{left}" y2="{ty:.2}" stroke="black"/>"#,
            left - 6.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end" font-family="sans-serif" font-size="12">{}</text>"#,
            left - 9.0,
            ty + 4.0,
            tick_label(yv)
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="14">{}</text>"#,
        left + plot_w / 2.0,
        h - 15.0,
        escape(x_axis)
    );
    let _ = writeln!(
        svg,
        r#"<text x="20" y="{:.2}" text-anchor="middle" font-family="sans-serif" font-size="14" transform="rotate(-90 20 {:.2})">{}</text>"#,
        top + plot_h / 2.0,
        top + plot_h / 2.0,
        escape(&columns[y_idx])
    );

    for (k, s) in series.iter().enumerate() {
        let color = PALETTE[k];
        let mut points = String::new();
        for (i, (x, y)) in s.points.iter().enumerate() {
            if i > 0 {
                points.push(' ');
            }
            let _ = write!(points, "{:.3},{:.3}", px(*x), py(*y));
        }
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>"#
        );
        if let (Some(label), Some(name)) = (s.label, series_axis) {
            let ly = top + 10.0 + 18.0 * k as f64;
            let lx = left + plot_w + 12.0;
            let _ = writeln!(
                svg,
                r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/>"#,
                lx + 20.0
            );
            let _ = writeln!(
                svg,
                r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">{} = {}</text>"#,
                lx + 26.0,
                ly + 4.0,
                escape(name),
                tick_label(label)
            );
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn emit_svg_lineplot(
    table: &Table,
    path: &Path,
    x_axis: &str,
    series_axis: Option<&str>,
    options: &PlotOptions,
) -> Result<()> {
    let svg = render_svg_lineplot(table, x_axis, series_axis, options)?;
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    std::fs::write(path, svg).map_err(|e| Error::io(path, e))
}
