//! Minimal static SVG line plots for emitted tables. No dependencies, no
//! interactivity: column 0 is the x axis, every other column becomes one
//! polyline. Undefined cells break the line.

use std::fmt::Write as _;
use std::path::Path;

use crate::csvout::Table;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct PlotOptions {
    pub title: String,
    pub log_x: bool,
    pub width: u32,
    pub height: u32,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions {
            title: String::new(),
            log_x: false,
            width: 900,
            height: 540,
        }
    }
}

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];
const MARGIN_LEFT: f64 = 72.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 48.0;

fn axis_x(v: f64, lo: f64, hi: f64, log: bool, width: f64) -> Option<f64> {
    let (v, lo, hi) = if log {
        if v <= 0.0 {
            return None;
        }
        (v.ln(), lo.ln(), hi.ln())
    } else {
        (v, lo, hi)
    };
    let span = hi - lo;
    let frac = if span == 0.0 { 0.5 } else { (v - lo) / span };
    Some(MARGIN_LEFT + frac * (width - MARGIN_LEFT - MARGIN_RIGHT))
}

fn axis_y(v: f64, lo: f64, hi: f64, height: f64) -> f64 {
    let span = hi - lo;
    let frac = if span == 0.0 { 0.5 } else { (v - lo) / span };
    height - MARGIN_BOTTOM - frac * (height - MARGIN_TOP - MARGIN_BOTTOM)
}

/// Render the table as a standalone SVG document.
pub fn render_svg(table: &Table, opts: &PlotOptions) -> Result<String> {
    if table.headers.len() < 2 || table.rows.is_empty() {
        return Err(Error::InvalidTimeGrid(
            "plot needs at least one x and one y column with data".into(),
        ));
    }
    let xs: Vec<Option<f64>> = table.rows.iter().map(|r| r[0]).collect();
    let mut x_lo = f64::INFINITY;
    let mut x_hi = f64::NEG_INFINITY;
    for x in xs.iter().flatten() {
        if opts.log_x && *x <= 0.0 {
            continue;
        }
        x_lo = x_lo.min(*x);
        x_hi = x_hi.max(*x);
    }
    let mut y_lo = f64::INFINITY;
    let mut y_hi = f64::NEG_INFINITY;
    for row in &table.rows {
        for cell in row.iter().skip(1).flatten() {
            y_lo = y_lo.min(*cell);
            y_hi = y_hi.max(*cell);
        }
    }
    if !x_lo.is_finite() || !y_lo.is_finite() {
        return Err(Error::InvalidTimeGrid("plot has no finite data".into()));
    }
    if y_lo == y_hi {
        y_lo -= 1.0;
        y_hi += 1.0;
    } else {
        let pad = 0.05 * (y_hi - y_lo);
        y_lo -= pad;
        y_hi += pad;
    }

    let w = opts.width as f64;
    let h = opts.height as f64;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\" \
         font-family=\"monospace\" font-size=\"12\">",
        opts.width, opts.height
    );
    let _ = writeln!(svg, "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>");
    if !opts.title.is_empty() {
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">{}</text>",
            w / 2.0,
            opts.title
        );
    }
    let _ = writeln!(
        svg,
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>",
        MARGIN_LEFT,
        MARGIN_TOP,
        w - MARGIN_LEFT - MARGIN_RIGHT,
        h - MARGIN_TOP - MARGIN_BOTTOM
    );
    // Five tick labels per axis; log ticks are uniform in the exponent.
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let xv = if opts.log_x {
            (x_lo.ln() + f * (x_hi.ln() - x_lo.ln())).exp()
        } else {
            x_lo + f * (x_hi - x_lo)
        };
        let px = axis_x(xv, x_lo, x_hi, opts.log_x, w).unwrap_or(MARGIN_LEFT);
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{:.3e}</text>",
            px,
            h - MARGIN_BOTTOM + 18.0,
            xv
        );
        let yv = y_lo + f * (y_hi - y_lo);
        let py = axis_y(yv, y_lo, y_hi, h);
        let _ = writeln!(
            svg,
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{:.3e}</text>",
            MARGIN_LEFT - 6.0,
            py + 4.0,
            yv
        );
    }
    for (ci, name) in table.headers.iter().enumerate().skip(1) {
        let color = PALETTE[(ci - 1) % PALETTE.len()];
        let mut d = String::new();
        let mut pen_down = false;
        for row in &table.rows {
            let x = row[0].and_then(|x| axis_x(x, x_lo, x_hi, opts.log_x, w));
            let y = row[ci];
            match (x, y) {
                (Some(px), Some(yv)) => {
                    let py = axis_y(yv, y_lo, y_hi, h);
                    let _ = write!(
                        d,
                        "{}{:.2} {:.2} ",
                        if pen_down { "L" } else { "M" },
                        px,
                        py
                    );
                    pen_down = true;
                }
                _ => pen_down = false,
            }
        }
        let _ = writeln!(
            svg,
            "<path d=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.3\"/>",
            d.trim_end(),
            color
        );
        let _ = writeln!(
            svg,
            "<text x=\"{}\" y=\"{:.1}\" fill=\"{}\">{}</text>",
            MARGIN_LEFT + 8.0,
            MARGIN_TOP + 16.0 + 15.0 * (ci as f64 - 1.0),
            color,
            name
        );
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

pub fn write_svg(table: &Table, opts: &PlotOptions, path: &Path) -> Result<()> {
    std::fs::write(path, render_svg(table, opts)?)?;
    Ok(())
}
