use std::fmt::Write as _;

use disklink::{Graph, GridDrawing, Point};

/// Draws vertices as disks of diameter one and edges as centre-to-centre
/// segments. Grid units become `scale` pixels, y points down, and the view
/// box leaves one unit of margin around the bounding grid. Unplaced
/// vertices and their edges are skipped.
pub fn render_svg(g: &Graph, d: &GridDrawing, scale: u32) -> String {
    let s = scale.max(1) as i64;
    let (lo, hi) = d
        .bounding_box()
        .unwrap_or((Point::new(0, 0), Point::new(0, 0)));
    let view = |p: Point| ((p.x - lo.x + 1) * s, (hi.y - p.y + 1) * s);
    let (w, h) = ((hi.x - lo.x + 2) * s, (hi.y - lo.y + 2) * s);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    out.push_str("<g stroke=\"black\" stroke-width=\"1\">\n");
    for &(u, v) in g.edges() {
        if let (Some(a), Some(b)) = (d.get(u), d.get(v)) {
            let ((x1, y1), (x2, y2)) = (view(a), view(b));
            let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
        }
    }
    out.push_str("</g>\n<g fill=\"white\" stroke=\"black\">\n");
    let r = 0.5 * s as f64;
    for v in 0..d.n() {
        if let Some(p) = d.get(v) {
            let (cx, cy) = view(p);
            let _ = writeln!(out, r#"<circle id="v{v}" cx="{cx}" cy="{cy}" r="{r}"/>"#);
        }
    }
    out.push_str("</g>\n</svg>\n");
    out
}
