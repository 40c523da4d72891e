//! Plain SVG 1.1 drawings of a solved configuration: the quadrilateral, its
//! diagonals, the solution point and the unit vectors from the solution
//! toward each vertex.

use std::fmt::Write as _;

use fermat_quad::geom::unit_vector;
use fermat_quad::{Point, QuadProblem, Solution};

/// Pixels spanned by the larger side of the drawing's bounding box.
pub const DRAWING_PX: f64 = 1000.0;
pub const MARGIN_PX: f64 = 60.0;
/// Arrow length as a fraction of the bounding-box extent.
const ARROW_FRACTION: f64 = 0.15;

/// World-to-pixel map with the y axis pointing up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Viewport {
    min: Point,
    max: Point,
    px_per_unit: f64,
}

impl Viewport {
    pub fn fit(points: &[Point]) -> Viewport {
        let mut min = points[0];
        let mut max = points[0];
        for p in points {
            min = Point::new(min.x.min(p.x), min.y.min(p.y));
            max = Point::new(max.x.max(p.x), max.y.max(p.y));
        }
        let extent = (max.x - min.x).max(max.y - min.y);
        Viewport {
            min,
            max,
            px_per_unit: DRAWING_PX / extent,
        }
    }

    pub fn to_px(&self, p: Point) -> (f64, f64) {
        (
            MARGIN_PX + (p.x - self.min.x) * self.px_per_unit,
            MARGIN_PX + (self.max.y - p.y) * self.px_per_unit,
        )
    }

    pub fn width(&self) -> f64 {
        2.0 * MARGIN_PX + (self.max.x - self.min.x) * self.px_per_unit
    }

    pub fn height(&self) -> f64 {
        2.0 * MARGIN_PX + (self.max.y - self.min.y) * self.px_per_unit
    }

    fn extent(&self) -> f64 {
        DRAWING_PX / self.px_per_unit
    }
}

pub fn svg(problem: &QuadProblem, solution: &Solution, label: Option<&str>) -> String {
    let v = problem.vertices();
    let x = solution.location;
    let view = Viewport::fit(&[v[0], v[1], v[2], v[3], x]);
    let px = |p: Point| view.to_px(p);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#,
        w = view.width(),
        h = view.height()
    );
    if let Some(label) = label {
        let _ = writeln!(s, "  <title>{}</title>", escape(label));
    }
    let _ = writeln!(
        s,
        r##"  <defs><marker id="head" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="8" markerHeight="8" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#c0392b"/></marker></defs>"##
    );
    let _ = writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    let corners: Vec<String> = v
        .iter()
        .map(|p| {
            let (a, b) = px(*p);
            format!("{a:.3},{b:.3}")
        })
        .collect();
    let _ = writeln!(
        s,
        r#"  <polygon class="quad" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        corners.join(" ")
    );
    for (i, j) in [(0, 2), (1, 3)] {
        let (x1, y1) = px(v[i]);
        let (x2, y2) = px(v[j]);
        let _ = writeln!(
            s,
            r#"  <line class="diagonal" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="gray" stroke-dasharray="6,4"/>"#
        );
    }
    for (i, p) in v.iter().enumerate() {
        let (a, b) = px(*p);
        let _ = writeln!(
            s,
            r#"  <text class="vertex-label" x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="20">A{} (B={})</text>"#,
            a + 8.0,
            b - 8.0,
            i + 1,
            problem.weights()[i]
        );
    }

    let (cx, cy) = px(x);
    let arrow_len = ARROW_FRACTION * view.extent();
    for p in v {
        // At an absorbed vertex the direction to itself is undefined.
        let Ok(u) = unit_vector(x, *p) else { continue };
        let (x2, y2) = px(x.translate(arrow_len * u));
        let _ = writeln!(
            s,
            r##"  <line class="arrow" x1="{cx:.3}" y1="{cy:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#c0392b" stroke-width="2" marker-end="url(#head)"/>"##
        );
    }
    let _ = writeln!(
        s,
        r##"  <circle class="solution" cx="{cx:.3}" cy="{cy:.3}" r="6" fill="#2471a3"><title>{} ({}, {})</title></circle>"##,
        solution.case, x.x, x.y
    );
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
