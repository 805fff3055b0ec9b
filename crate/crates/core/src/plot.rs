//! SVG pictures of rank-one groups: lattice points and the points that are
//! reflecting hyperplanes, in the square `[-R, R]²`.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::hyperplanes::{to_plane, Window};

pub const PIXELS_PER_UNIT: f64 = 100.0;
pub const LATTICE_RADIUS: f64 = 5.0;
pub const HYPERPLANE_RADIUS: f64 = 2.0;

/// Render a window. The view box is `[-R-0.5, R+0.5]²` in lattice units,
/// with the imaginary axis pointing up.
pub fn window_svg(window: &Window, title: &str) -> String {
    let r = window.radius.to_f64().unwrap_or(0.0) + 0.5;
    let side = 2.0 * r * PIXELS_PER_UNIT;
    let origin = -r * PIXELS_PER_UNIT;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{origin} {origin} {side} {side}" width="{side}" height="{side}">"#
    );
    let _ = writeln!(svg, "  <title>{}</title>", escape(title));
    let _ = writeln!(svg, r#"  <rect x="{origin}" y="{origin}" width="{side}" height="{side}" fill="white"/>"#);
    let mut layer = |class: &str, fill: &str, radius: f64, points: &[crate::scalars::Scalar]| {
        let _ = writeln!(svg, r#"  <g class="{class}" fill="{fill}">"#);
        for p in points {
            let (x, y) = to_plane(p);
            let _ = writeln!(
                svg,
                r#"    <circle cx="{:.3}" cy="{:.3}" r="{radius}"/>"#,
                x * PIXELS_PER_UNIT,
                // adding 0.0 turns -0 into 0
                (-y * PIXELS_PER_UNIT) + 0.0
            );
        }
        let _ = writeln!(svg, "  </g>");
    };
    layer("lattice", "black", LATTICE_RADIUS, &window.lattice_points);
    layer("hyperplanes", "red", HYPERPLANE_RADIUS, &window.hyperplane_points);
    svg.push_str("</svg>\n");
    svg
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
