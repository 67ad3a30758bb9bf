//! SVG rendering of planar path traces.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::path::PiecewisePath;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

/// Options for [`export_svg`].
#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    pub samples_per_segment: usize,
    /// Coordinate indices drawn as horizontal and vertical axes. Required
    /// when the ambient dimension exceeds 2.
    pub projection: Option<(usize, usize)>,
    /// Abscissas of vertical guide lines (the planner's stacking lines).
    pub lines: Vec<f64>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            samples_per_segment: 16,
            projection: None,
            lines: Vec::new(),
        }
    }
}

/// One polyline per moving label, markers at breakpoints and the vertical
/// guide lines. Output depends only on the inputs.
pub fn export_svg(path: &PiecewisePath, options: &SvgOptions) -> Result<String> {
    let dim = path.dim();
    let (ax, ay) = match options.projection {
        Some((a, b)) if a < dim && b < dim && a != b => (a, b),
        Some((a, b)) => {
            return Err(Error::Argument(format!(
                "projection ({a}, {b}) invalid for dimension {dim}"
            )))
        }
        None if dim == 2 => (0, 1),
        None => {
            return Err(Error::Argument(format!(
                "a projection is required for dimension {dim}"
            )))
        }
    };
    let k = path.k();
    let samples = options.samples_per_segment.max(1);

    let mut tracks: Vec<Vec<(f64, f64)>> = vec![Vec::new(); k];
    let bps = path.breakpoints();
    for (s, w) in bps.windows(2).enumerate() {
        let first = if s == 0 { 0 } else { 1 };
        for m in first..=samples {
            let t = w[0].t + (w[1].t - w[0].t) * (m as f64 / samples as f64);
            let pos = if m == samples {
                w[1].config.as_flat().to_vec()
            } else {
                path.positions_at(t)
            };
            for (l, track) in tracks.iter_mut().enumerate() {
                track.push((pos[l * dim + ax], -pos[l * dim + ay]));
            }
        }
    }

    let (mut x0, mut x1, mut y0, mut y1) = (
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
    );
    for &(x, y) in tracks.iter().flatten() {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    if ax == 0 {
        for &a in &options.lines {
            x0 = x0.min(a);
            x1 = x1.max(a);
        }
    }
    let pad = 0.05 * (x1 - x0).max(y1 - y0).max(1.0);
    let (x0, y0, x1, y1) = (x0 - pad, y0 - pad, x1 + pad, y1 + pad);
    let r = 0.01 * (x1 - x0).max(y1 - y0);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.4} {:.4} {:.4} {:.4}">"#,
        x0,
        y0,
        x1 - x0,
        y1 - y0
    );
    if ax == 0 {
        for &a in &options.lines {
            let _ = writeln!(
                out,
                r##"  <line class="planner-line" x1="{a:.4}" y1="{y0:.4}" x2="{a:.4}" y2="{y1:.4}" stroke="#999999" stroke-width="{:.4}" stroke-dasharray="{:.4}"/>"##,
                r / 2.0,
                2.0 * r
            );
        }
    }
    for (l, track) in tracks.iter().enumerate() {
        let color = PALETTE[l % PALETTE.len()];
        let moves = track.iter().any(|p| *p != track[0]);
        if moves {
            let pts: Vec<String> = track
                .iter()
                .map(|(x, y)| format!("{x:.4},{y:.4}"))
                .collect();
            let _ = writeln!(
                out,
                r#"  <polyline class="track" data-label="{}" fill="none" stroke="{color}" stroke-width="{:.4}" points="{}"/>"#,
                l + 1,
                r / 2.0,
                pts.join(" ")
            );
        }
        let mut last = None;
        for b in bps {
            let p = b.config.point(l);
            let q = (p[ax], -p[ay]);
            if last == Some(q) {
                continue;
            }
            last = Some(q);
            let _ = writeln!(
                out,
                r#"  <circle class="breakpoint" data-label="{}" cx="{:.4}" cy="{:.4}" r="{r:.4}" fill="{color}"/>"#,
                l + 1,
                q.0,
                q.1
            );
            if !moves {
                break;
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
