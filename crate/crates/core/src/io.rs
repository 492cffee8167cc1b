//! File formats: curve JSON, point clouds (CSV or JSON) and SVG plots.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::generators::PointCloud;
use crate::quadrature::nodes;
use crate::support::{PlanePoint, SupportFourier};

/// Parses `{"a0": .., "harmonics": [[a1, b1], ...]}`.
pub fn parse_curve(text: &str) -> Result<SupportFourier> {
    let c: SupportFourier = serde_json::from_str(text)?;
    c.check_finite().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(c)
}

pub fn read_curve(path: &Path) -> Result<SupportFourier> {
    parse_curve(&std::fs::read_to_string(path)?)
}

pub fn curve_to_json(c: &SupportFourier) -> String {
    serde_json::to_string(c).expect("curve serializes")
}

/// Parses a point cloud given either as JSON `[[x, y], ...]` or as CSV
/// with two numeric columns (an optional non-numeric header row is
/// skipped).
pub fn parse_point_cloud(text: &str) -> Result<PointCloud> {
    let trimmed = text.trim_start();
    let pairs: Vec<(f64, f64)> = if trimmed.starts_with('[') {
        serde_json::from_str(trimmed)?
    } else {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .comment(Some(b'#'))
            .from_reader(text.as_bytes());
        let mut out = Vec::new();
        for (i, rec) in reader.records().enumerate() {
            let rec = rec?;
            if rec.len() != 2 {
                return Err(Error::Parse(format!(
                    "line {}: expected 2 columns, got {}",
                    i + 1,
                    rec.len()
                )));
            }
            match (rec[0].parse::<f64>(), rec[1].parse::<f64>()) {
                (Ok(x), Ok(y)) => out.push((x, y)),
                _ if i == 0 => continue,
                _ => return Err(Error::Parse(format!("line {}: not a number pair", i + 1))),
            }
        }
        out
    };
    PointCloud::new(pairs.into_iter().map(|(x, y)| PlanePoint::new(x, y)).collect())
        .map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_point_cloud(path: &Path) -> Result<PointCloud> {
    parse_point_cloud(&std::fs::read_to_string(path)?)
}

/// Number of samples per curve in [`render_svg`].
pub const SVG_SAMPLES: usize = 720;

/// SVG drawing of the curve and its evolute on a shared, auto-scaled
/// view box with 1% padding.
pub fn render_svg(c: &SupportFourier) -> String {
    let curve: Vec<PlanePoint> = nodes(SVG_SAMPLES).map(|t| c.curve_point(t)).collect();
    let evolute: Vec<PlanePoint> = nodes(SVG_SAMPLES).map(|t| c.evolute_point(t)).collect();

    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in curve.iter().chain(&evolute) {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(-p.y);
        y1 = y1.max(-p.y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-12);
    let pad = 0.01 * span;
    let (vx, vy) = (x0 - pad, y0 - pad);
    let (vw, vh) = ((x1 - x0) + 2.0 * pad, (y1 - y0) + 2.0 * pad);
    let stroke = span / 400.0;

    let path = |pts: &[PlanePoint]| {
        let mut d = String::new();
        for (i, p) in pts.iter().enumerate() {
            let _ = write!(d, "{}{:.6},{:.6} ", if i == 0 { "M" } else { "L" }, p.x, -p.y);
        }
        d.push('Z');
        d
    };

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}" width="600" height="{:.0}">"#,
        600.0 * vh / vw
    );
    let _ = writeln!(
        svg,
        r##"  <path id="curve" d="{}" fill="none" stroke="#1f4e9c" stroke-width="{stroke:.6}"/>"##,
        path(&curve)
    );
    let _ = writeln!(
        svg,
        r##"  <path id="evolute" d="{}" fill="none" stroke="#c0392b" stroke-width="{stroke:.6}"/>"##,
        path(&evolute)
    );
    svg.push_str("</svg>\n");
    svg
}
