//! Artifact emitters: CSV, SVG, and JSON fragments.

use lemniscate::{Classification, GridOracleReport, PolarCurve, RigidityResult, SweepCell, Verdict};
use serde_json::{json, Value};
use std::fmt::Write as _;

/// Decimal with 17 significant digits: enough for bit-exact f64 round trips.
pub fn decimal(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn trace_csv(curve: &PolarCurve) -> String {
    let mut out = String::from("theta,alpha\n");
    for &(theta, alpha) in curve.samples() {
        let _ = writeln!(out, "{},{}", decimal(theta), decimal(alpha));
    }
    out
}

pub fn sweep_csv(cells: &[SweepCell]) -> String {
    let mut out = String::from("C,k,rigidity,abs_err\n");
    for cell in cells {
        match &cell.outcome {
            Ok(r) => {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    decimal(cell.c),
                    decimal(cell.k),
                    decimal(r.value),
                    decimal(r.abs_error_estimate)
                );
            }
            Err(_) => {
                let _ = writeln!(out, "{},{},nan,nan", decimal(cell.c), decimal(cell.k));
            }
        }
    }
    out
}

pub fn verdict_label(cl: &Classification) -> String {
    match cl.verdict {
        Verdict::BoundedUnique => "BoundedUnique".to_string(),
        Verdict::NoBoundedComponent => "NoBoundedComponent".to_string(),
        Verdict::Critical => "Critical".to_string(),
        Verdict::Conic(t) => format!("Conic({t:?})"),
    }
}

pub fn classify_line(cl: &Classification) -> String {
    match (cl.c_star, cl.margin) {
        (Some(c_star), Some(margin)) => {
            format!("{} (C*={c_star}, margin={margin})", verdict_label(cl))
        }
        _ => verdict_label(cl),
    }
}

pub fn classify_json(cl: &Classification) -> Value {
    json!({
        "verdict": verdict_label(cl),
        "c_star": cl.c_star,
        "margin": cl.margin,
    })
}

pub fn oracle_json(report: &GridOracleReport) -> Value {
    json!({
        "resolution": report.resolution,
        "box_radius": report.box_radius,
        "positive_components": report.positive_components,
        "negative_components": report.negative_components,
        "negative_bounded_components": report.negative_bounded_components,
        "origin_component_bounded": report.origin_component_bounded,
        "bounded_loop_count": report.bounded_loop_count,
    })
}

pub fn rigidity_json(result: &RigidityResult) -> Value {
    json!({
        "value": result.value,
        "abs_error_estimate": result.abs_error_estimate,
        "radial_order": result.radial_order,
        "angular_samples": result.angular_samples,
    })
}

const CURVE_COLORS: [&str; 6] = ["#d95f02", "#1b6ca8", "#2a9d4e", "#c02040", "#7b52ab", "#666666"];

/// Static SVG rendering of one or more closed polar curves, with centered
/// axes and ticks every 0.5 units.
pub fn curves_svg(curves: &[(String, &PolarCurve)]) -> String {
    let size = 640.0f64;
    let margin = 40.0f64;
    let mut extent = 0.0f64;
    for (_, curve) in curves {
        for &(_, alpha) in curve.samples() {
            extent = extent.max(alpha);
        }
    }
    if extent == 0.0 {
        extent = 1.0;
    }
    extent *= 1.1;
    let scale = (size / 2.0 - margin) / extent;
    let to_px = |x: f64, y: f64| (size / 2.0 + x * scale, size / 2.0 - y * scale);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{size}" height="{size}" fill="white"/>"#);

    // axes
    let half = size / 2.0;
    let _ = writeln!(
        svg,
        r##"<line x1="{margin}" y1="{half}" x2="{}" y2="{half}" stroke="#999" stroke-width="1"/>"##,
        size - margin
    );
    let _ = writeln!(
        svg,
        r##"<line x1="{half}" y1="{margin}" x2="{half}" y2="{}" stroke="#999" stroke-width="1"/>"##,
        size - margin
    );
    // ticks every 0.5 units
    let mut t = 0.5;
    while t < extent {
        for s in [t, -t] {
            let (px, py) = to_px(s, 0.0);
            let _ = writeln!(
                svg,
                r##"<line x1="{px}" y1="{}" x2="{px}" y2="{}" stroke="#999" stroke-width="1"/>"##,
                half - 4.0,
                half + 4.0
            );
            let _ = writeln!(
                svg,
                r##"<text x="{px}" y="{}" font-size="10" text-anchor="middle" fill="#555">{s}</text>"##,
                half + 16.0
            );
            let (qx, qy) = to_px(0.0, s);
            let _ = writeln!(
                svg,
                r##"<line x1="{}" y1="{qy}" x2="{}" y2="{qy}" stroke="#999" stroke-width="1"/>"##,
                half - 4.0,
                half + 4.0
            );
            let _ = writeln!(
                svg,
                r##"<text x="{}" y="{qy}" font-size="10" text-anchor="end" fill="#555">{s}</text>"##,
                half - 8.0
            );
            let _ = (px, py, qx);
        }
        t += 0.5;
    }

    for (i, (label, curve)) in curves.iter().enumerate() {
        let color = CURVE_COLORS[i % CURVE_COLORS.len()];
        let mut points = String::new();
        for &(theta, alpha) in curve.samples() {
            let (px, py) = to_px(alpha * theta.cos(), alpha * theta.sin());
            let _ = write!(points, "{px:.2},{py:.2} ");
        }
        // close the loop
        if let Some(&(theta, alpha)) = curve.samples().first() {
            let (px, py) = to_px(alpha * theta.cos(), alpha * theta.sin());
            let _ = write!(points, "{px:.2},{py:.2}");
        }
        let _ = writeln!(
            svg,
            r#"<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>"#
        );
        let _ = writeln!(
            svg,
            r##"<text x="{}" y="{}" font-size="12" fill="{color}">{label}</text>"##,
            margin,
            margin + 16.0 * i as f64
        );
    }
    svg.push_str("</svg>\n");
    svg
}
