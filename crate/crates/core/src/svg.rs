//! Deterministic SVG rendering: mountains as bold solid strokes, valleys as
//! thin dashed strokes, the paper boundary thin, optional parity shading.

use crate::pattern::{CreasePattern, MvAssignment};

#[derive(Default)]
pub struct RenderOptions {
    /// Fill faces of parity 1 with a light tint.
    pub shade_parity: bool,
}

pub fn render_svg(
    pattern: &CreasePattern,
    assignment: Option<&MvAssignment>,
    options: &RenderOptions,
) -> String {
    let (mut min_x, mut min_y, mut max_x, mut max_y) =
        (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for v in pattern.vertices() {
        min_x = min_x.min(v[0]);
        min_y = min_y.min(v[1]);
        max_x = max_x.max(v[0]);
        max_y = max_y.max(v[1]);
    }
    let width = (max_x - min_x).max(1e-9);
    let height = (max_y - min_y).max(1e-9);
    let margin = 0.05 * width.max(height);
    let base = width.max(height) / 120.0;
    // Flip y so the pattern renders with +y up.
    let fy = |y: f64| max_y - y + margin;
    let fx = |x: f64| x - min_x + margin;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {:.4} {:.4}\">\n",
        width + 2.0 * margin,
        height + 2.0 * margin
    ));
    if options.shade_parity {
        if let Ok(class) = pattern.face_classification() {
            for (f, cycle) in pattern.faces().iter().enumerate() {
                let fill = if class.parity[f] == 1 { "#e8e8e8" } else { "#ffffff" };
                let pts: Vec<String> = cycle
                    .iter()
                    .map(|&v| {
                        let p = pattern.vertex(v);
                        format!("{:.4},{:.4}", fx(p[0]), fy(p[1]))
                    })
                    .collect();
                svg.push_str(&format!(
                    "  <polygon points=\"{}\" fill=\"{fill}\" stroke=\"none\"/>\n",
                    pts.join(" ")
                ));
            }
        }
    }
    let mut line = |a: [f64; 2], b: [f64; 2], stroke: &str, w: f64, dash: &str| {
        svg.push_str(&format!(
            "  <line x1=\"{:.4}\" y1=\"{:.4}\" x2=\"{:.4}\" y2=\"{:.4}\" stroke=\"{stroke}\" stroke-width=\"{w:.4}\"{dash}/>\n",
            fx(a[0]), fy(a[1]), fx(b[0]), fy(b[1]),
        ));
    };
    for [a, b] in pattern.boundary_segments() {
        line(pattern.vertex(a), pattern.vertex(b), "#555555", 0.7 * base, "");
    }
    for (i, crease) in pattern.creases().iter().enumerate() {
        let a = pattern.vertex(crease.endpoints[0]);
        let b = pattern.vertex(crease.endpoints[1]);
        match assignment {
            Some(s) if s.is_valley(i) => {
                let dash = format!(" stroke-dasharray=\"{:.4},{:.4}\"", 3.0 * base, 2.0 * base);
                line(a, b, "#000000", 0.8 * base, &dash);
            }
            Some(_) => line(a, b, "#000000", 2.2 * base, ""),
            None => line(a, b, "#888888", 0.8 * base, ""),
        }
    }
    svg.push_str("</svg>\n");
    svg
}
